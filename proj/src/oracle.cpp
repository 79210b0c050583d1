// Copyright 2026 The idealpack Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "idealpack/oracle.hpp"

#include <string>
#include <utility>
#include <vector>

#include "idealpack/lp_solver.hpp"

namespace idealpack {

OracleResult disjunction_oracle(const Instance& inst, std::uint64_t cap) {
  const std::size_t n = inst.size();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  std::uint64_t total = 1;
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    if (total > cap / 4) throw TooLarge("disjunction oracle needs 4^" + std::to_string(pairs.size()) +
                                        " LPs, above the cap of " + std::to_string(cap));
    total *= 4;
  }
  if (total > cap) throw TooLarge("disjunction oracle exceeds its cap of " + std::to_string(cap));

  const DerivedParams p = DerivedParams::from_instance(inst);
  // Columns: c_i_x at 2i, c_i_y at 2i+1, then h.
  LPProblem base;
  base.num_vars = 2 * n + 1;
  base.lower.resize(base.num_vars);
  base.upper.resize(base.num_vars);
  base.cost.assign(base.num_vars, Rational(0));
  base.cost[2 * n] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (Axis s : kAxes) {
      base.lower[2 * i + index(s)] = p.lb(i, s);
      base.upper[2 * i + index(s)] = p.ub(i, s);
    }
    const ObjectSpec& o = inst.object(i);
    base.rows.push_back(LinearRow{{{2 * i + 1, -1}, {2 * n, 1}},
                                  Sense::ge,
                                  o.dim(Axis::y) / 2 + o.clear_plus(Axis::y),
                                  RowTag{"top", {o.id}, {}}});
  }
  const std::size_t fixed_rows = base.rows.size();

  OracleResult out;
  out.assignments = total;
  std::vector<int> choice(pairs.size(), 0);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t rest = code;
    for (int& c : choice) {
      c = static_cast<int>(rest % 4);
      rest /= 4;
    }
    base.rows.resize(fixed_rows);
    for (std::size_t q = 0; q < pairs.size(); ++q) {
      // Terms: 0 i left of j, 1 i below j, 2 j left of i, 3 j below i.
      const bool forward = choice[q] < 2;
      const Axis s = choice[q] % 2 == 0 ? Axis::x : Axis::y;
      const std::size_t k = forward ? pairs[q].first : pairs[q].second;
      const std::size_t l = forward ? pairs[q].second : pairs[q].first;
      const std::size_t ck = 2 * k + index(s);
      const std::size_t cl = 2 * l + index(s);
      std::vector<Term> terms = ck < cl ? std::vector<Term>{{ck, -1}, {cl, 1}} : std::vector<Term>{{cl, 1}, {ck, -1}};
      base.rows.push_back(LinearRow{std::move(terms), Sense::ge, p.pm(k, l, s), RowTag{"sep", {}, s}});
    }
    const LPSolution sol = solve_lp(base);
    if (sol.status != LPStatus::optimal) continue;
    ++out.feasible_assignments;
    if (!out.height || sol.objective < *out.height) {
      out.height = sol.objective;
      PackingSolution layout;
      layout.height = sol.objective;
      for (std::size_t i = 0; i < n; ++i) layout.centers.push_back({sol.point[2 * i], sol.point[2 * i + 1]});
      out.layout = std::move(layout);
    }
  }
  return out;
}

}  // namespace idealpack

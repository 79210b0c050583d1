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

#include "idealpack/iom.hpp"

#include <algorithm>
#include <set>

#include "idealpack/lp_solver.hpp"

namespace idealpack {

CoverSet resolve_cover(const RelaxationPolytope& poly, const std::vector<std::string>& names) {
  CoverSet out;
  for (const std::string& name : names) {
    if (auto r = poly.find_row(name)) {
      out.push_back(*r);
      continue;
    }
    const bool is_equality = std::any_of(poly.equalities.begin(), poly.equalities.end(),
                                         [&](const LinearRow& e) { return e.tag.name() == name; });
    if (!is_equality) throw std::out_of_range("no relaxation row named " + name);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<std::optional<Rational>, std::optional<Rational>>> implied_box(const RelaxationPolytope& poly) {
  const MBLPModel base = poly.as_model();
  std::vector<std::pair<std::optional<Rational>, std::optional<Rational>>> box(poly.dimension());
  for (std::size_t j = 0; j < poly.dimension(); ++j) {
    for (bool minimize : {true, false}) {
      MBLPModel m = base;
      LinearExpr obj;
      obj.add(j, 1);
      m.set_objective(obj, minimize);
      const LPSolution s = solve_lp(m);
      if (s.status == LPStatus::infeasible) throw std::invalid_argument("relaxation is empty");
      if (s.status != LPStatus::optimal) continue;
      (minimize ? box[j].first : box[j].second) = s.objective;
    }
  }
  return box;
}

namespace {

std::size_t equality_rank(const RelaxationPolytope& poly) {
  if (poly.equalities.empty()) return 0;
  std::vector<const LinearRow*> rows;
  for (const LinearRow& e : poly.equalities) rows.push_back(&e);
  return rank(augmented_rows(rows, poly.dimension()));
}

RatVector row_big_m(const RelaxationPolytope& poly, const IomOptions& options) {
  if (options.big_m) return RatVector(poly.rows.size(), *options.big_m);
  const auto box = implied_box(poly);
  RatVector out;
  for (const LinearRow& row : poly.rows) {
    // Largest slack: max(a.x) - b for >= rows, b - min(a.x) for <= rows.
    const bool ge = row.sense == Sense::ge;
    Rational extreme = 0;
    for (const Term& t : row.terms) {
      const bool want_upper = (t.coef > 0) == ge;
      const auto& bound = want_upper ? box[t.var].second : box[t.var].first;
      if (!bound) {
        throw std::invalid_argument("variable " + poly.variables[t.var].name +
                                    " is unbounded; supply a scalar big-M");
      }
      extreme += t.coef * *bound;
    }
    out.push_back(ge ? Rational(extreme - row.rhs) : Rational(row.rhs - extreme));
  }
  return out;
}

}  // namespace

IomModel build_iom(const RelaxationPolytope& poly, const std::vector<CoverSet>& covers, const IomOptions& options) {
  IomModel iom;
  MBLPModel& m = iom.model;
  m.kind = FormulationKind::generic;
  for (const Variable& v : poly.variables) {
    iom.x.push_back(m.add_variable(Variable{v.name, VarKind::continuous, {}, {}, {}}));
  }
  for (std::size_t j : poly.binaries) {
    iom.phi.push_back(
        m.add_variable(Variable{"phi." + poly.variables[j].name, VarKind::continuous, Rational(0), Rational(1), {}}));
  }
  for (const LinearRow& row : poly.rows) {
    iom.eta.push_back(m.add_variable(Variable{"eta." + row.tag.name(), VarKind::binary, {}, {}, {}}));
  }
  iom.big_m = row_big_m(poly, options);

  for (std::size_t b = 0; b < poly.binaries.size(); ++b) {
    const std::size_t y = iom.x[poly.binaries[b]];
    const int id = static_cast<int>(b);
    LinearExpr plus;
    plus.add(iom.phi[b], 1).add(y, -2);
    m.add_row(plus, Sense::le, 0, RowTag{"penplus", {id}, {}});
    LinearExpr minus;
    minus.add(iom.phi[b], 1).add(y, 2);
    m.add_row(minus, Sense::le, 2, RowTag{"penminus", {id}, {}});
  }
  auto copy = [&](const LinearRow& row, const std::string& prefix) {
    LinearExpr e;
    for (const Term& t : row.terms) e.add(iom.x[t.var], t.coef);
    m.add_row(e, row.sense, row.rhs, RowTag{prefix + row.tag.name(), {}, {}});
  };
  for (const LinearRow& row : poly.rows) copy(row, "feas.");
  for (const LinearRow& row : poly.equalities) copy(row, "feas.");
  for (std::size_t r = 0; r < poly.rows.size(); ++r) {
    const LinearRow& row = poly.rows[r];
    const Rational& big = iom.big_m[r];
    LinearExpr e;
    for (const Term& t : row.terms) e.add(iom.x[t.var], t.coef);
    const RowTag tag{"tight." + row.tag.name(), {}, {}};
    if (row.sense == Sense::ge) {
      e.add(iom.eta[r], big);
      m.add_row(e, Sense::le, row.rhs + big, tag);
    } else {
      e.add(iom.eta[r], -big);
      m.add_row(e, Sense::ge, row.rhs - big, tag);
    }
  }
  LinearExpr count;
  for (std::size_t e : iom.eta) count.add(e, 1);
  m.add_row(count, Sense::eq, static_cast<long>(poly.dimension() - equality_rank(poly)), RowTag{"extreme", {}, {}});
  std::set<CoverSet> seen;
  for (const CoverSet& cover : covers) {
    if (cover.empty() || !seen.insert(cover).second) continue;
    LinearExpr e;
    for (std::size_t r : cover) e.add(iom.eta.at(r), 1);
    m.add_row(e, Sense::le, static_cast<long>(cover.size()) - 1,
              RowTag{"cover", {static_cast<int>(iom.cover_rows)}, {}});
    ++iom.cover_rows;
  }
  LinearExpr obj;
  for (std::size_t p : iom.phi) obj.add(p, 1);
  m.set_objective(obj, false);
  return iom;
}

IomResult solve_iom(const RelaxationPolytope& poly, std::vector<CoverSet> covers, const IomOptions& options) {
  IomResult out;
  std::vector<const LinearRow*> eq_rows;
  for (const LinearRow& e : poly.equalities) eq_rows.push_back(&e);
  for (out.rounds = 1; out.rounds <= options.max_rounds; ++out.rounds) {
    const IomModel iom = build_iom(poly, covers, options);
    out.big_m = iom.big_m;
    const BnBResult res = solve_milp(iom.model, options.milp);
    out.status = res.status;
    out.nodes += res.node_count;
    if (res.status != MILPStatus::optimal) return out;
    const RatVector& sol = *res.incumbent;
    out.objective = res.incumbent_objective;
    out.point.assign(sol.begin(), sol.begin() + static_cast<std::ptrdiff_t>(poly.dimension()));
    out.tight.clear();
    for (std::size_t r = 0; r < poly.rows.size(); ++r) {
      if (sol[iom.eta[r]] == 1) out.tight.push_back(r);
    }
    std::vector<const LinearRow*> rows = eq_rows;
    for (std::size_t r : out.tight) rows.push_back(&poly.rows[r]);
    const RatMatrix at = augmented_rows(rows, poly.dimension());
    out.verified_extreme = rank(at) == rows.size();
    if (out.verified_extreme || !options.separate) return out;

    Circuit c = separate_circuit(at, options.separation);
    CoverSet cover;
    for (std::size_t r : c.rows) {
      if (r >= eq_rows.size()) cover.push_back(out.tight[r - eq_rows.size()]);
    }
    if (cover.empty()) throw std::logic_error("equality rows alone are dependent");
    c.rows = cover;
    c.names.clear();
    for (std::size_t r : cover) c.names.push_back(poly.rows[r].tag.name());
    out.added_covers.push_back(c);
    covers.push_back(std::move(cover));
  }
  out.rounds = options.max_rounds;
  return out;
}

}  // namespace idealpack

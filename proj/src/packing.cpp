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

#include "idealpack/packing.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace idealpack {
namespace {

Rational max_of(const Rational& a, const Rational& b) { return a < b ? b : a; }

// Inverse CDF of Beta(2,5), F(x) = 1 - (1-x)^6 - 6x(1-x)^5, tabulated at
// 1024 equally spaced quantiles by bisection.
class BetaTwoFiveTable {
 public:
  static constexpr int kSize = 1024;

  BetaTwoFiveTable() {
    for (int i = 0; i <= kSize; ++i) {
      const double q = static_cast<double>(i) / kSize;
      double lo = 0.0;
      double hi = 1.0;
      for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        (cdf(mid) < q ? lo : hi) = mid;
      }
      table_[i] = 0.5 * (lo + hi);
    }
  }

  double sample(double u) const {
    const double pos = u * kSize;
    const int i = std::min(static_cast<int>(pos), kSize - 1);
    const double t = pos - i;
    return table_[i] + t * (table_[i + 1] - table_[i]);
  }

 private:
  static double cdf(double x) {
    const double y = 1.0 - x;
    return 1.0 - std::pow(y, 6) - 6.0 * x * std::pow(y, 5);
  }

  std::array<double, kSize + 1> table_{};
};

double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Rational round_to_grid(double value, int denominator) {
  const long scaled = std::lround(value * denominator);
  Rational q(mpz_class(scaled), mpz_class(static_cast<long>(denominator)));
  q.canonicalize();
  return q;
}

}  // namespace

Instance::Instance(Region region, std::vector<ObjectSpec> objects)
    : region_(std::move(region)), objects_(std::move(objects)) {
  if (region_.width <= 0 || region_.height <= 0) {
    throw InvalidInstance("region dimensions must be positive");
  }
  std::sort(objects_.begin(), objects_.end(),
            [](const ObjectSpec& a, const ObjectSpec& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < objects_.size(); ++i) {
    const ObjectSpec& o = objects_[i];
    if (o.id != static_cast<int>(i) + 1) {
      throw InvalidInstance("object ids must be exactly 1..N");
    }
    for (Axis s : kAxes) {
      if (o.dim(s) <= 0) {
        throw InvalidInstance("object " + std::to_string(o.id) + " has a non-positive dimension");
      }
    }
    for (const Rational& c : o.clear) {
      if (c < 0) throw InvalidInstance("object " + std::to_string(o.id) + " has a negative clearance");
    }
    const std::array<const Rational*, 2> limits = {&region_.width, &region_.height};
    for (Axis s : kAxes) {
      if (o.extent(s) > *limits[index(s)]) {
        throw InvalidInstance("object " + std::to_string(o.id) + " does not fit the region along " +
                              axis_name(s));
      }
    }
  }
}

Instance Instance::with_height(const Rational& height) const {
  return Instance(Region{region_.width, height}, objects_);
}

Instance Instance::subset(const std::vector<std::size_t>& indices) const {
  std::vector<ObjectSpec> picked;
  picked.reserve(indices.size());
  for (std::size_t i : indices) {
    ObjectSpec o = objects_.at(i);
    o.id = static_cast<int>(picked.size()) + 1;
    picked.push_back(std::move(o));
  }
  return Instance(region_, std::move(picked));
}

DerivedParams DerivedParams::from_instance(const Instance& inst) {
  const std::size_t n = inst.size();
  DerivedParams p;
  p.n_ = n;
  p.lb_.resize(n * 2);
  p.ub_.resize(n * 2);
  p.pm_.resize(n * n * 2);
  const std::array<Rational, 2> r = {inst.region().width, inst.region().height};
  for (std::size_t i = 0; i < n; ++i) {
    const ObjectSpec& o = inst.object(i);
    for (Axis s : kAxes) {
      p.lb_[i * 2 + index(s)] = o.dim(s) / 2 + o.clear_minus(s);
      p.ub_[i * 2 + index(s)] = r[index(s)] - o.dim(s) / 2 - o.clear_plus(s);
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      const ObjectSpec& a = inst.object(k);
      const ObjectSpec& b = inst.object(l);
      for (Axis s : kAxes) {
        p.pm_[(k * n + l) * 2 + index(s)] =
            a.dim(s) / 2 + b.dim(s) / 2 + max_of(a.clear_plus(s), b.clear_minus(s));
      }
    }
  }
  return p;
}

DerivedParams DerivedParams::from_raw(std::size_t n, std::vector<Rational> lb, std::vector<Rational> ub,
                                      std::vector<Rational> pm) {
  if (lb.size() != n * 2 || ub.size() != n * 2 || pm.size() != n * n * 2) {
    throw std::invalid_argument("parameter arrays have the wrong length");
  }
  for (std::size_t i = 0; i < n * 2; ++i) {
    if (lb[i] > ub[i]) throw InvalidInstance("lower bound exceeds upper bound");
  }
  DerivedParams p;
  p.n_ = n;
  p.lb_ = std::move(lb);
  p.ub_ = std::move(ub);
  p.pm_ = std::move(pm);
  return p;
}

DerivedParams DerivedParams::scaled(const Rational& factor) const {
  DerivedParams p = *this;
  for (Rational& v : p.lb_) v *= factor;
  for (Rational& v : p.ub_) v *= factor;
  for (Rational& v : p.pm_) v *= factor;
  return p;
}

Instance generate_instance(std::uint64_t seed, int n_objects, const GenConfig& config) {
  if (n_objects < 1) throw std::invalid_argument("n_objects must be at least 1");
  if (config.grid_denominator < 1) throw std::invalid_argument("grid denominator must be positive");
  static const BetaTwoFiveTable beta;
  std::mt19937_64 rng(seed);
  const double span = config.max_side - config.min_side;
  std::vector<ObjectSpec> objects;
  Rational height = 0;
  for (int id = 1; id <= n_objects; ++id) {
    ObjectSpec o;
    o.id = id;
    for (Axis s : kAxes) {
      const double side = config.min_side + span * beta.sample(unit_uniform(rng));
      o.dims[index(s)] = round_to_grid(side, config.grid_denominator);
    }
    // Face order (x-, y-, x+, y+); each face is sized against the object's
    // extent along the same axis.
    for (int face = 0; face < 4; ++face) {
      const Rational& d = o.dims[face % 2];
      const bool has_clearance = unit_uniform(rng) < config.clearance_probability;
      const double u = unit_uniform(rng);
      if (has_clearance) {
        Rational c = round_to_grid(u * d.get_d(), config.grid_denominator);
        o.clear[face] = c > d ? d : c;
      }
    }
    height += o.extent(Axis::y);
    objects.push_back(std::move(o));
  }
  return Instance(Region{config.strip_width, height}, std::move(objects));
}

PackingSolution greedy_initial_layout(const Instance& inst) {
  const std::size_t n = inst.size();
  const DerivedParams params = DerivedParams::from_instance(inst);
  for (std::size_t i = 0; i < n; ++i) {
    if (params.lb(i, Axis::x) > params.ub(i, Axis::x)) {
      throw ObjectTooWide("object " + std::to_string(inst.object(i).id) + " is wider than the strip");
    }
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return inst.object(a).extent(Axis::y) < inst.object(b).extent(Axis::y);
  });

  std::vector<std::vector<std::size_t>> rows;
  std::vector<std::vector<Rational>> xs;
  for (std::size_t i : order) {
    if (!rows.empty()) {
      const std::size_t prev = rows.back().back();
      Rational x = max_of(params.lb(i, Axis::x), xs.back().back() + params.pm(prev, i, Axis::x));
      if (x <= params.ub(i, Axis::x)) {
        rows.back().push_back(i);
        xs.back().push_back(std::move(x));
        continue;
      }
    }
    rows.push_back({i});
    xs.push_back({params.lb(i, Axis::x)});
  }

  PackingSolution sol;
  sol.centers.resize(n);
  std::vector<std::size_t> placed;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    Rational base = 0;
    for (std::size_t b : rows[r]) {
      const ObjectSpec& ob = inst.object(b);
      base = max_of(base, ob.clear_minus(Axis::y));
      for (std::size_t a : placed) {
        const ObjectSpec& oa = inst.object(a);
        const Rational top = sol.centers[a][1] + oa.dim(Axis::y) / 2;
        base = max_of(base, top + max_of(oa.clear_plus(Axis::y), ob.clear_minus(Axis::y)));
      }
    }
    for (std::size_t j = 0; j < rows[r].size(); ++j) {
      const std::size_t b = rows[r][j];
      sol.centers[b] = {xs[r][j], base + inst.object(b).dim(Axis::y) / 2};
    }
    placed.insert(placed.end(), rows[r].begin(), rows[r].end());
  }
  sol.height = 0;
  for (std::size_t i = 0; i < n; ++i) sol.height = max_of(sol.height, clearance_top(inst, sol, i));
  return sol;
}

Rational clearance_top(const Instance& inst, const PackingSolution& sol, std::size_t i) {
  const ObjectSpec& o = inst.object(i);
  return sol.centers.at(i)[1] + o.dim(Axis::y) / 2 + o.clear_plus(Axis::y);
}

ValidationReport validate_layout(const Instance& inst, const PackingSolution& sol) {
  ValidationReport report;
  const std::size_t n = inst.size();
  if (sol.centers.size() != n) {
    throw std::invalid_argument("layout has " + std::to_string(sol.centers.size()) + " centers for " +
                                std::to_string(n) + " objects");
  }
  const DerivedParams p = DerivedParams::from_instance(inst);
  for (std::size_t i = 0; i < n; ++i) {
    for (Axis s : kAxes) {
      const Rational& c = sol.centers[i][index(s)];
      if (c < p.lb(i, s) || c > p.ub(i, s)) {
        Violation v;
        v.kind = Violation::Kind::bound;
        v.first_id = inst.object(i).id;
        v.axis = s;
        v.message = "object " + std::to_string(v.first_id) + " center " + to_string(c) + " outside [" +
                    to_string(p.lb(i, s)) + ", " + to_string(p.ub(i, s)) + "] along " + axis_name(s);
        report.violations.push_back(std::move(v));
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      bool separated = false;
      for (Axis s : kAxes) {
        const Rational& ci = sol.centers[i][index(s)];
        const Rational& cj = sol.centers[j][index(s)];
        if (ci + p.pm(i, j, s) <= cj || cj + p.pm(j, i, s) <= ci) separated = true;
      }
      if (!separated) {
        Violation v;
        v.kind = Violation::Kind::overlap;
        v.first_id = inst.object(i).id;
        v.second_id = inst.object(j).id;
        v.message = "objects " + std::to_string(v.first_id) + " and " + std::to_string(v.second_id) +
                    " overlap an object or clearance";
        report.violations.push_back(std::move(v));
      }
    }
  }
  return report;
}

}  // namespace idealpack

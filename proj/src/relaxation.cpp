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

#include "idealpack/relaxation.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <set>

#include "idealpack/formulations.hpp"

namespace idealpack {

std::optional<std::size_t> RelaxationPolytope::find_row(const std::string& name) const {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].tag.name() == name) return r;
  }
  return std::nullopt;
}

std::size_t RelaxationPolytope::row(const std::string& name) const {
  if (auto r = find_row(name)) return *r;
  throw std::out_of_range("no relaxation row named " + name);
}

MBLPModel RelaxationPolytope::as_model() const {
  MBLPModel m;
  m.kind = kind;
  for (const Variable& v : variables) {
    Variable free{v.name, VarKind::continuous, {}, {}, {}};
    m.add_variable(std::move(free));
  }
  auto add = [&](const LinearRow& row) {
    LinearExpr e;
    for (const Term& t : row.terms) e.add(t.var, t.coef);
    m.add_row(e, row.sense, row.rhs, row.tag);
  };
  for (const LinearRow& row : rows) add(row);
  for (const LinearRow& row : equalities) add(row);
  return m;
}

RelaxationPolytope relax(const MBLPModel& model) {
  RelaxationPolytope poly;
  poly.kind = model.kind;
  const bool keep_binary_upper = model.kind != FormulationKind::su && model.kind != FormulationKind::ru;
  const std::string lower_family = is_unary(model.kind) ? "indic" : "dblo";
  for (const LinearRow& row : model.rows()) {
    (row.sense == Sense::eq ? poly.equalities : poly.rows).push_back(row);
  }
  for (std::size_t j = 0; j < model.num_variables(); ++j) {
    const Variable& v = model.variables()[j];
    poly.variables.push_back(Variable{v.name, VarKind::continuous, {}, {}, v.priority});
    const std::vector<Term> unit = {Term{j, 1}};
    if (v.kind == VarKind::binary) {
      poly.binaries.push_back(j);
      poly.variables.back().kind = VarKind::binary;
      const std::size_t cut = v.name.find('_');
      const std::string suffix = cut == std::string::npos ? "." + v.name : v.name.substr(cut);
      poly.rows.push_back(LinearRow{unit, Sense::ge, 0, RowTag{lower_family + suffix, {}, {}}});
      if (keep_binary_upper) poly.rows.push_back(LinearRow{unit, Sense::le, 1, RowTag{"dbhi" + suffix, {}, {}}});
      continue;
    }
    if (v.lower) poly.rows.push_back(LinearRow{unit, Sense::ge, *v.lower, RowTag{"lo." + v.name, {}, {}}});
    if (v.upper) poly.rows.push_back(LinearRow{unit, Sense::le, *v.upper, RowTag{"hi." + v.name, {}, {}}});
  }
  return poly;
}

Rational penalty(std::span<const Rational> point, std::span<const std::size_t> binaries) {
  Rational total = 0;
  for (std::size_t j : binaries) {
    const Rational& y = point[j];
    if (y < 0 || y > 1) throw OutOfRange("penalty argument " + to_string(y) + " outside [0, 1]");
    total += 1 - abs(2 * y - 1);
  }
  return total;
}

namespace {

struct Overflow {};

__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;

mpz_class to_mpz(i128 v) {
  const bool neg = v < 0;
  u128 u = neg ? -static_cast<u128>(v) : static_cast<u128>(v);
  mpz_class hi(static_cast<unsigned long>(u >> 64));
  mpz_class lo(static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFULL));
  mpz_class out = (hi << 64) + lo;
  return neg ? mpz_class(-out) : out;
}
mpz_class to_mpz(long long v) { return mpz_class(static_cast<long>(v)); }
mpz_class to_mpz(const mpz_class& v) { return v; }

template <class Z>
Z from_mpz(const mpz_class& v) {
  if constexpr (std::is_same_v<Z, mpz_class>) {
    return v;
  } else {
    if (!v.fits_slong_p()) throw Overflow{};
    return static_cast<Z>(v.get_si());
  }
}

template <class Z>
Z mul_sub(const Z& a, const Z& b, const Z& c, const Z& d) {
  if constexpr (std::is_same_v<Z, mpz_class>) {
    return a * b - c * d;
  } else {
    Z ab, cd, out;
    if (__builtin_mul_overflow(a, b, &ab) || __builtin_mul_overflow(c, d, &cd) ||
        __builtin_sub_overflow(ab, cd, &out) || out == std::numeric_limits<Z>::min()) {
      throw Overflow{};
    }
    return out;
  }
}

template <class Z>
Z mul(const Z& a, const Z& b) {
  if constexpr (std::is_same_v<Z, mpz_class>) {
    return a * b;
  } else {
    Z out;
    if (__builtin_mul_overflow(a, b, &out) || out == std::numeric_limits<Z>::min()) throw Overflow{};
    return out;
  }
}

template <class Z>
Z add(const Z& a, const Z& b) {
  if constexpr (std::is_same_v<Z, mpz_class>) {
    return a + b;
  } else {
    Z out;
    if (__builtin_add_overflow(a, b, &out) || out == std::numeric_limits<Z>::min()) throw Overflow{};
    return out;
  }
}

template <class Z>
Z absval(const Z& a) {
  return a < 0 ? Z(-a) : a;
}

template <class Z>
Z zgcd(Z a, Z b) {
  if constexpr (std::is_same_v<Z, mpz_class>) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
  } else {
    a = absval(a);
    b = absval(b);
    while (b != 0) {
      const Z t = a % b;
      a = b;
      b = t;
    }
    return a;
  }
}

// Depth-first walk over row subsets that stay linearly independent. Each
// level holds a fully reduced integer echelon form of (A_S | b_S), so a
// complete basis yields the vertex directly.
template <class Z>
class VertexSearch {
 public:
  VertexSearch(const RelaxationPolytope& poly, const std::function<void(const ExtremePoint&)>& visit)
      : poly_(poly), visit_(visit), dim_(poly.dimension()), width_(dim_ + 1) {
    ineq_ = scaled_rows(poly.rows);
    eq_ = scaled_rows(poly.equalities);
    levels_.assign(dim_ + 1, Level{std::vector<Z>(dim_ * width_), std::vector<std::size_t>(dim_), {}});
  }

  void run() {
    Level& base = levels_[0];
    std::size_t size = 0;
    for (const std::vector<Z>& e : eq_) {
      switch (insert(base, size, e.data())) {
        case Insert::independent: ++size; break;
        case Insert::redundant: break;
        case Insert::inconsistent: return;
      }
    }
    levels_[size] = base;
    levels_[size].members.clear();
    dfs(size, 0);
  }

 private:
  enum class Insert { independent, redundant, inconsistent };

  struct Level {
    std::vector<Z> rows;  // dim_ rows of width_ entries
    std::vector<std::size_t> pivots;
    std::vector<std::size_t> members;
  };

  std::vector<std::vector<Z>> scaled_rows(const std::vector<LinearRow>& rows) const {
    std::vector<std::vector<Z>> out;
    for (const LinearRow& row : rows) {
      RatVector dense(width_, Rational(0));
      for (const Term& t : row.terms) dense[t.var] = t.coef;
      dense[dim_] = row.rhs;
      if (row.sense == Sense::le) {
        for (Rational& v : dense) v = -v;
      }
      const RatVector ints = primitive_integer_scaling(dense);
      std::vector<Z> z(width_);
      for (std::size_t c = 0; c < width_; ++c) z[c] = from_mpz<Z>(ints[c].get_num());
      out.push_back(std::move(z));
    }
    return out;
  }

  void normalize(Z* row) const {
    if constexpr (!std::is_same_v<Z, mpz_class>) {
      Z peak = 0;
      for (std::size_t c = 0; c < width_; ++c) peak = std::max(peak, absval(row[c]));
      if (peak < (Z(1) << 24)) return;
    }
    Z g = 0;
    for (std::size_t c = 0; c < width_; ++c) g = zgcd(g, row[c]);
    if (g > 1) {
      for (std::size_t c = 0; c < width_; ++c) row[c] /= g;
    }
  }

  // Appends `src` to the first `size` rows of `level` when independent.
  Insert insert(Level& level, std::size_t size, const Z* src) {
    Z* r = level.rows.data() + size * width_;
    std::copy(src, src + width_, r);
    for (std::size_t t = 0; t < size; ++t) {
      const std::size_t p = level.pivots[t];
      if (r[p] == 0) continue;
      const Z* b = level.rows.data() + t * width_;
      const Z f = r[p];
      const Z bp = b[p];
      for (std::size_t c = 0; c < width_; ++c) r[c] = mul_sub(r[c], bp, b[c], f);
      normalize(r);
    }
    std::size_t q = 0;
    while (q < dim_ && r[q] == 0) ++q;
    if (q == dim_) return r[dim_] == 0 ? Insert::redundant : Insert::inconsistent;
    level.pivots[size] = q;
    for (std::size_t t = 0; t < size; ++t) {
      Z* b = level.rows.data() + t * width_;
      if (b[q] == 0) continue;
      const Z f = b[q];
      const Z rq = r[q];
      for (std::size_t c = 0; c < width_; ++c) b[c] = mul_sub(b[c], rq, r[c], f);
      normalize(b);
    }
    return Insert::independent;
  }

  void dfs(std::size_t size, std::size_t start) {
    if (size == dim_) {
      leaf(levels_[size]);
      return;
    }
    const std::size_t needed = dim_ - size;
    for (std::size_t i = start; i + needed <= ineq_.size(); ++i) {
      Level& next = levels_[size + 1];
      const Level& cur = levels_[size];
      std::copy(cur.rows.begin(), cur.rows.begin() + static_cast<std::ptrdiff_t>(size * width_), next.rows.begin());
      std::copy(cur.pivots.begin(), cur.pivots.begin() + static_cast<std::ptrdiff_t>(size), next.pivots.begin());
      if (insert(next, size, ineq_[i].data()) != Insert::independent) continue;
      next.members = cur.members;
      next.members.push_back(i);
      dfs(size + 1, i + 1);
    }
  }

  void leaf(const Level& level) {
    // x_p = rhs / coef for each pivot; bring to the common denominator.
    Z den = 1;
    for (std::size_t t = 0; t < dim_; ++t) {
      const Z a = absval(level.rows[t * width_ + level.pivots[t]]);
      den = mul(Z(den / zgcd(den, a)), a);
    }
    std::vector<Z> key(width_);
    key[dim_] = den;
    for (std::size_t t = 0; t < dim_; ++t) {
      const Z a = level.rows[t * width_ + level.pivots[t]];
      const Z rhs = level.rows[t * width_ + dim_];
      key[level.pivots[t]] = mul(rhs, Z(den / a));
    }
    std::vector<std::size_t> tight;
    for (std::size_t i = 0; i < ineq_.size(); ++i) {
      const std::vector<Z>& row = ineq_[i];
      Z lhs = 0;
      for (std::size_t c = 0; c < dim_; ++c) {
        if (row[c] != 0) lhs = add(lhs, mul(row[c], key[c]));
      }
      const Z rhs = mul(row[dim_], den);
      if (lhs < rhs) return;
      if (lhs == rhs) tight.push_back(i);
    }
    Z g = 0;
    for (const Z& v : key) g = zgcd(g, v);
    for (Z& v : key) v /= g;
    if (!seen_.insert(key).second) return;
    ExtremePoint ep;
    ep.point.resize(dim_);
    const mpz_class d = to_mpz(key[dim_]);
    for (std::size_t c = 0; c < dim_; ++c) {
      ep.point[c] = Rational(to_mpz(key[c]), d);
      ep.point[c].canonicalize();
    }
    ep.tight_set = std::move(tight);
    ep.basis = level.members;
    ep.penalty = penalty(ep.point, poly_.binaries);
    visit_(ep);
  }

  const RelaxationPolytope& poly_;
  const std::function<void(const ExtremePoint&)>& visit_;
  std::size_t dim_;
  std::size_t width_;
  std::vector<std::vector<Z>> ineq_;
  std::vector<std::vector<Z>> eq_;
  std::vector<Level> levels_;
  std::set<std::vector<Z>> seen_;
};

}  // namespace

void for_each_extreme_point(const RelaxationPolytope& poly, const std::function<void(const ExtremePoint&)>& visit,
                            const EnumerationOptions& options) {
  if (poly.dimension() > options.max_dimension) {
    throw TooLarge("relaxation has " + std::to_string(poly.dimension()) + " variables; the enumeration cap is " +
                   std::to_string(options.max_dimension));
  }
  if (poly.dimension() == 0) return;
  // Vertices are buffered so an overflow retry never reports a point twice.
  std::vector<ExtremePoint> found;
  auto collect = [&](const ExtremePoint& ep) { found.push_back(ep); };
  const std::function<void(const ExtremePoint&)> sink = collect;
  try {
    VertexSearch<long long>(poly, sink).run();
  } catch (const Overflow&) {
    found.clear();
    try {
      VertexSearch<i128>(poly, sink).run();
    } catch (const Overflow&) {
      found.clear();
      VertexSearch<mpz_class>(poly, sink).run();
    }
  }
  for (const ExtremePoint& ep : found) visit(ep);
}

std::vector<ExtremePoint> enumerate_extreme_points(const RelaxationPolytope& poly, const EnumerationOptions& options) {
  std::vector<ExtremePoint> out;
  for_each_extreme_point(poly, [&](const ExtremePoint& ep) { out.push_back(ep); }, options);
  return out;
}

}  // namespace idealpack

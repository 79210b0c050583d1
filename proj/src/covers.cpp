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

#include "idealpack/covers.hpp"

#include <algorithm>
#include <numeric>

#include "idealpack/formulations.hpp"
#include "idealpack/milp.hpp"

namespace idealpack {
namespace {

struct Index {
  int k;
  int l;
  Axis s;
};

constexpr std::array<Index, 4> kPairIndices = {Index{1, 2, Axis::x}, Index{1, 2, Axis::y}, Index{2, 1, Axis::x},
                                               Index{2, 1, Axis::y}};


std::string row(const std::string& family, int k, int l, Axis s) {
  return family + "_" + std::to_string(k) + "_" + std::to_string(l) + "_" + axis_name(s);
}

std::string row(const std::string& family, int k, int l) {
  return family + "_" + std::to_string(k) + "_" + std::to_string(l);
}

std::string suffix(const Index& t) {
  return std::to_string(t.k) + std::to_string(t.l) + axis_name(t.s);
}

// PM_kls - (UB_ls - LB_ks), zero exactly on the degenerate boundary.
SideCondition margin_gap(int k, int l, Axis s) {
  const std::string name = std::to_string(k) + std::to_string(l) + axis_name(s);
  const std::string ls = std::to_string(l) + axis_name(s);
  const std::string ks = std::to_string(k) + axis_name(s);
  return SideCondition{"PM_" + name + " - UB_" + ls + " + LB_" + ks,
                       [k, l, s](const DerivedParams& p) {
                         const auto a = static_cast<std::size_t>(k - 1);
                         const auto b = static_cast<std::size_t>(l - 1);
                         return Rational(p.pm(a, b, s) - p.ub(b, s) + p.lb(a, s));
                       }};
}

// LB_ks + PM_kls - UB_ls, the cross-axis ratio terms.
SideCondition reach(int k, int l, Axis s) {
  const std::string name = std::to_string(k) + std::to_string(l) + axis_name(s);
  return SideCondition{"LB_" + std::to_string(k) + axis_name(s) + " + PM_" + name + " - UB_" +
                           std::to_string(l) + axis_name(s),
                       [k, l, s](const DerivedParams& p) {
                         const auto a = static_cast<std::size_t>(k - 1);
                         const auto b = static_cast<std::size_t>(l - 1);
                         return Rational(p.lb(a, s) + p.pm(a, b, s) - p.ub(b, s));
                       }};
}

// B_ks - B_ls - PM_lks for B = LB or UB; the tight-row weight in the
// two-object lower and upper chains.
SideCondition shift(const std::string& bound, int k, int l, Axis s) {
  const std::string ks = std::to_string(k) + axis_name(s);
  const std::string ls = std::to_string(l) + axis_name(s);
  const std::string lks = std::to_string(l) + std::to_string(k) + axis_name(s);
  const bool lower = bound == "LB";
  return SideCondition{bound + "_" + ks + " - " + bound + "_" + ls + " - PM_" + lks,
                       [k, l, s, lower](const DerivedParams& p) {
                         const auto a = static_cast<std::size_t>(k - 1);
                         const auto b = static_cast<std::size_t>(l - 1);
                         return lower ? Rational(p.lb(a, s) - p.lb(b, s) - p.pm(b, a, s))
                                      : Rational(p.ub(a, s) - p.ub(b, s) - p.pm(b, a, s));
                       }};
}

std::vector<std::string> chain(int k, int l, Axis s) {
  return {row("lb", k, l, s), row("ub", k, l, s), row("prec", k, l, s)};
}

std::vector<CoverFamily> unary_standard_covers() {
  std::vector<CoverFamily> out;
  for (const Index& t : kPairIndices) {
    CoverFamily f{FormulationKind::su, "su.bounds." + suffix(t), chain(t.k, t.l, t.s), {}, {margin_gap(t.k, t.l, t.s)}};
    f.rows.push_back(row("indic", t.k, t.l, t.s));
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<CoverFamily> unary_refined_covers() {
  std::vector<CoverFamily> out;
  for (const Index& t : kPairIndices) {
    const std::string tight = row("tight", 1, 2) + "_" + axis_name(t.s);
    const Axis s2 = other(t.s);
    out.push_back(CoverFamily{FormulationKind::ru,
                              "ru.logic." + suffix(t),
                              {"disj_1_2", tight, row("indic", t.k, t.l, s2), row("indic", t.l, t.k, s2)},
                              {},
                              {}});
    out.push_back(CoverFamily{FormulationKind::ru,
                              "ru.lower." + suffix(t),
                              {row("lb", t.k, t.l, t.s), row("lb", t.l, t.k, t.s), row("prec", t.k, t.l, t.s), tight,
                               row("indic", t.l, t.k, t.s)},
                              {},
                              {margin_gap(t.l, t.k, t.s), shift("LB", t.k, t.l, t.s)}});
    out.push_back(CoverFamily{FormulationKind::ru,
                              "ru.bounds." + suffix(t),
                              {row("lb", t.k, t.l, t.s), row("ub", t.k, t.l, t.s), row("prec", t.k, t.l, t.s), tight,
                               row("indic", t.k, t.l, t.s)},
                              {},
                              {margin_gap(t.k, t.l, t.s), margin_gap(t.l, t.k, t.s)}});
    out.push_back(CoverFamily{FormulationKind::ru,
                              "ru.upper." + suffix(t),
                              {row("ub", t.k, t.l, t.s), row("ub", t.l, t.k, t.s), row("prec", t.k, t.l, t.s), tight,
                               row("indic", t.l, t.k, t.s)},
                              {},
                              {margin_gap(t.l, t.k, t.s), shift("UB", t.k, t.l, t.s)}});
  }
  return out;
}

std::vector<CoverFamily> binary_envelope_covers() {
  const std::string m3 = row("mccor3", 1, 2);
  std::vector<CoverFamily> out;
  auto add = [&](std::string label, std::vector<std::string> base, std::vector<std::string> extra,
                 std::vector<SideCondition> req = {}, std::vector<SideCondition> minimal = {}) {
    base.insert(base.end(), extra.begin(), extra.end());
    out.push_back(CoverFamily{FormulationKind::sbm, std::move(label), std::move(base), std::move(req),
                              std::move(minimal)});
  };
  // Envelope rows alone.
  add("sbm.envelope.12", {m3, row("mccor12", 1, 2), row("dbhi", 2, 1)}, {});
  add("sbm.envelope.21", {m3, row("mccor12", 2, 1), row("dbhi", 1, 2)}, {});
  // One disjunct's bound chain made redundant by the envelope.
  auto chained = [&](std::string label, Index t, std::vector<std::string> extra) {
    add(std::move(label), chain(t.k, t.l, t.s), std::move(extra), {}, {margin_gap(t.k, t.l, t.s)});
  };
  chained("sbm.chain.12x.a", {1, 2, Axis::x}, {m3});
  chained("sbm.chain.12x.b", {1, 2, Axis::x}, {row("mccor12", 1, 2), row("dbhi", 2, 1)});
  chained("sbm.chain.12x.c", {1, 2, Axis::x}, {row("mccor12", 2, 1), row("dbhi", 1, 2)});
  chained("sbm.chain.12y.a", {1, 2, Axis::y}, {row("mccor12", 1, 2)});
  chained("sbm.chain.12y.b", {1, 2, Axis::y}, {m3, row("dbhi", 2, 1)});
  chained("sbm.chain.21x.a", {2, 1, Axis::x}, {row("mccor12", 1, 2), row("dblo", 1, 2)});
  chained("sbm.chain.21x.b", {2, 1, Axis::x}, {row("mccor12", 2, 1), row("dblo", 2, 1)});
  chained("sbm.chain.21y.a", {2, 1, Axis::y}, {row("mccor12", 2, 1)});
  chained("sbm.chain.21y.b", {2, 1, Axis::y}, {m3, row("dbhi", 1, 2)});
  // Two chains on different axes tied by one binary bound.
  auto cross = [&](std::string label, Index first, Index second, std::string bound) {
    std::vector<std::string> rows = chain(first.k, first.l, first.s);
    const auto more = chain(second.k, second.l, second.s);
    rows.insert(rows.end(), more.begin(), more.end());
    const SideCondition den = reach(second.k, second.l, second.s);
    const SideCondition num = reach(first.k, first.l, first.s);
    add(std::move(label), std::move(rows), {std::move(bound)}, {den}, {den, num});
  };
  cross("sbm.cross.a", {1, 2, Axis::x}, {1, 2, Axis::y}, row("dbhi", 2, 1));
  cross("sbm.cross.b", {1, 2, Axis::x}, {2, 1, Axis::y}, row("dbhi", 1, 2));
  cross("sbm.cross.c", {2, 1, Axis::x}, {1, 2, Axis::y}, row("dblo", 1, 2));
  cross("sbm.cross.d", {2, 1, Axis::x}, {2, 1, Axis::y}, row("dblo", 2, 1));
  return out;
}

bool independent(const RatMatrix& m) { return rank(m) == m.rows(); }

}  // namespace

std::vector<CoverFamily> known_covers(FormulationKind kind) {
  switch (kind) {
    case FormulationKind::su: return unary_standard_covers();
    case FormulationKind::ru: return unary_refined_covers();
    case FormulationKind::sbm: return binary_envelope_covers();
    default: break;
  }
  throw Unsupported("no dependence covers are catalogued for " + to_string(kind));
}

RatMatrix augmented_rows(const std::vector<const LinearRow*>& rows, std::size_t num_vars) {
  RatMatrix m(rows.size(), num_vars + 1);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const Term& t : rows[r]->terms) m(r, t.var) = t.coef;
    m(r, num_vars) = rows[r]->rhs;
  }
  return m;
}

namespace {

Circuit circuit_of(const RatMatrix& m, std::vector<std::size_t> rows) {
  const RatMatrix sub = m.select_rows(rows);
  auto p = nullspace_vector(sub);
  if (!p) throw NotDependent("rows are linearly independent");
  Circuit c;
  c.rows = std::move(rows);
  c.multipliers = std::move(*p);
  c.minimal = std::all_of(c.multipliers.begin(), c.multipliers.end(), [](const Rational& v) { return v != 0; });
  if (c.minimal) {
    for (std::size_t drop = 0; drop < c.rows.size() && c.minimal; ++drop) {
      std::vector<std::size_t> rest;
      for (std::size_t r = 0; r < c.rows.size(); ++r) {
        if (r != drop) rest.push_back(r);
      }
      c.minimal = independent(sub.select_rows(rest));
    }
  }
  return c;
}

}  // namespace

Circuit verify_cover(const RelaxationPolytope& poly, const std::vector<std::string>& row_names) {
  std::vector<const LinearRow*> rows;
  for (const std::string& name : row_names) {
    const LinearRow* found = nullptr;
    if (auto r = poly.find_row(name)) found = &poly.rows[*r];
    for (const LinearRow& eq : poly.equalities) {
      if (eq.tag.name() == name) found = &eq;
    }
    if (found == nullptr) throw std::out_of_range("no relaxation row named " + name);
    rows.push_back(found);
  }
  const RatMatrix m = augmented_rows(rows, poly.dimension());
  std::vector<std::size_t> all(rows.size());
  std::iota(all.begin(), all.end(), 0);
  Circuit c = circuit_of(m, all);
  c.names = row_names;
  return c;
}

CoverCertificate certify_cover(const CoverFamily& family, const DerivedParams& params) {
  CoverCertificate cert;
  cert.family = family;
  for (const SideCondition& cond : family.requires_nonzero) cert.conditions_hold &= cond.value(params) != 0;
  for (const SideCondition& cond : family.minimal_if_nonzero) cert.expect_minimal &= cond.value(params) != 0;
  const RelaxationPolytope poly = relax(build_formulation(family.kind, params));
  try {
    cert.circuit = verify_cover(poly, family.rows);
    cert.dependent = true;
  } catch (const NotDependent&) {
    cert.dependent = false;
  }
  return cert;
}

Circuit separate_circuit(const RatMatrix& rows, const SeparationOptions& options) {
  const std::size_t n = rows.rows();
  if (independent(rows)) throw NotDeficient("rows are linearly independent");
  if (options.mode == SeparationMode::subset_search) {
    if (n > options.max_rows) {
      throw TooLarge(std::to_string(n) + " rows exceed the subset-search cap of " + std::to_string(options.max_rows));
    }
    // Smallest dependent subset first; the first hit is a circuit.
    for (std::size_t size = 1; size <= n; ++size) {
      std::vector<bool> pick(n, false);
      std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
      do {
        std::vector<std::size_t> subset;
        for (std::size_t r = 0; r < n; ++r) {
          if (pick[r]) subset.push_back(r);
        }
        if (!independent(rows.select_rows(subset))) return circuit_of(rows, subset);
      } while (std::prev_permutation(pick.begin(), pick.end()));
    }
  }

  // Sparse multipliers p with sign indicators mu (p >= 1) and nu (p <= -1).
  MBLPModel m;
  const Rational& big = options.big_m;
  std::vector<std::size_t> p(n), mu(n), nu(n);
  for (std::size_t r = 0; r < n; ++r) {
    p[r] = m.add_variable(Variable{"p_" + std::to_string(r), VarKind::continuous, Rational(-big), big, {}});
    mu[r] = m.add_variable(Variable{"mu_" + std::to_string(r), VarKind::binary, {}, {}, {}});
    nu[r] = m.add_variable(Variable{"nu_" + std::to_string(r), VarKind::binary, {}, {}, {}});
  }
  for (std::size_t c = 0; c < rows.cols(); ++c) {
    LinearExpr e;
    for (std::size_t r = 0; r < n; ++r) {
      if (rows(r, c) != 0) e.add(p[r], rows(r, c));
    }
    if (!e.terms().empty()) m.add_row(e, Sense::eq, 0, RowTag{"null", {static_cast<int>(c)}, {}});
  }
  LinearExpr support;
  for (std::size_t r = 0; r < n; ++r) {
    const int id = static_cast<int>(r);
    LinearExpr a;
    a.add(p[r], 1).add(mu[r], -(big + 1));
    m.add_row(a, Sense::ge, -big, RowTag{"poslo", {id}, {}});
    LinearExpr b;
    b.add(p[r], 1).add(mu[r], -big);
    m.add_row(b, Sense::le, 0, RowTag{"poshi", {id}, {}});
    LinearExpr c;
    c.add(p[r], 1).add(nu[r], big);
    m.add_row(c, Sense::ge, 0, RowTag{"neglo", {id}, {}});
    LinearExpr d;
    d.add(p[r], 1).add(nu[r], big + 1);
    m.add_row(d, Sense::le, big, RowTag{"neghi", {id}, {}});
    support.add(mu[r], 1).add(nu[r], 1);
  }
  m.add_row(support, Sense::ge, 1, RowTag{"nonzero", {}, {}});
  m.set_objective(support, true);
  const BnBResult res = solve_milp(m);
  if (res.status != MILPStatus::optimal) {
    throw NotDependent("no multipliers within the big-M box " + to_string(big));
  }
  std::vector<std::size_t> subset;
  for (std::size_t r = 0; r < n; ++r) {
    if ((*res.incumbent)[p[r]] != 0) subset.push_back(r);
  }
  Circuit c = circuit_of(rows, subset);
  if (!c.minimal) throw NotDependent("big-M separation returned a non-minimal support");
  return c;
}

DerivedParams pairwise_params(const std::array<Rational, 4>& lb, const std::array<Rational, 4>& ub,
                              const std::array<Rational, 4>& pm) {
  std::vector<Rational> pmv(8, Rational(0));
  // (k, l, s) -> (k * 2 + l) * 2 + s with k != l.
  pmv[2] = pm[0];
  pmv[3] = pm[1];
  pmv[4] = pm[2];
  pmv[5] = pm[3];
  return DerivedParams::from_raw(2, {lb.begin(), lb.end()}, {ub.begin(), ub.end()}, std::move(pmv));
}

}  // namespace idealpack

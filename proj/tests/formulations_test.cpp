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

#include "idealpack/formulations.hpp"

#include <gtest/gtest.h>

#include <set>

#include "idealpack/lp_solver.hpp"
#include "test_support.hpp"

namespace idealpack {
namespace {

using testing::box;
using testing::Gen;
using testing::qv;
using testing::two_squares;

constexpr std::array<FormulationKind, 4> kKinds = {FormulationKind::su, FormulationKind::ru, FormulationKind::sbl,
                                                   FormulationKind::sbm};

DerivedParams square_params() { return DerivedParams::from_instance(two_squares()); }

// Row as a dense >= row over the model's columns.
std::pair<RatVector, Rational> as_ge(const LinearRow& row, std::size_t n) {
  RatVector a(n, Rational(0));
  const Rational sign = row.sense == Sense::le ? -1 : 1;
  for (const Term& t : row.terms) a[t.var] = sign * t.coef;
  return {a, sign * row.rhs};
}

// Random pairwise parameters with LB <= UB.
DerivedParams random_pair_params(Gen& g) {
  std::vector<Rational> lb, ub, pm;
  for (int i = 0; i < 4; ++i) {
    const Rational lo = g.rational(0, 5, 4);
    lb.push_back(lo);
    ub.push_back(lo + g.rational(0, 5, 4));
  }
  for (int i = 0; i < 8; ++i) pm.push_back(g.rational(1, 6, 4));
  return DerivedParams::from_raw(2, lb, ub, pm);
}

TEST(SizeTable, PairwiseFamilyCounts) {
  const DerivedParams p = square_params();
  EXPECT_EQ(family_counts(build_su(p)), (FamilyCounts{4, 8, 1, 4, 0}));
  EXPECT_EQ(family_counts(build_ru(p)), (FamilyCounts{4, 8, 3, 4, 0}));
  EXPECT_EQ(family_counts(build_sbl(p)), (FamilyCounts{4, 8, 0, 2, 0}));
  EXPECT_EQ(family_counts(build_sbm(p)), (FamilyCounts{4, 8, 3, 2, 1}));
}

TEST(SizeTable, StaticBoundsRemoveDynamicRows) {
  FormulationOptions opts;
  opts.static_bounds = true;
  for (FormulationKind kind : kKinds) {
    const MBLPModel m = build_formulation(kind, square_params(), opts);
    EXPECT_EQ(family_counts(m).bounds, 0u);
    for (std::size_t v = 0; v < 4; ++v) {
      EXPECT_EQ(m.variables()[v].lower, Rational(1));
      EXPECT_EQ(m.variables()[v].upper, Rational(9));
    }
  }
}

TEST(SizeTable, CountsScaleWithPairs) {
  const Instance inst = Gen(1).small_instance(4);
  const DerivedParams p = DerivedParams::from_instance(inst);
  EXPECT_EQ(family_counts(build_su(p)), (FamilyCounts{24, 48, 6, 24, 0}));
  EXPECT_EQ(family_counts(build_sbm(p)), (FamilyCounts{24, 48, 18, 12, 6}));
}

TEST(ColumnOrder, CentersThenIndicatorsThenAuxiliaries) {
  const MBLPModel m = build_sbm(square_params());
  std::vector<std::string> names;
  for (const Variable& v : m.variables()) names.push_back(v.name);
  EXPECT_EQ(names, (std::vector<std::string>{"c_1_x", "c_2_x", "c_1_y", "c_2_y", "d_1_2", "d_2_1", "D_1_2"}));
  const MBLPModel su = build_su(square_params());
  EXPECT_EQ(su.variables()[4].name, "d_1_2_x");
  EXPECT_EQ(su.variables()[5].name, "d_1_2_y");
  EXPECT_EQ(su.variables()[6].name, "d_2_1_x");
  EXPECT_EQ(su.variables()[7].name, "d_2_1_y");
}

TEST(StandardUnary, LowerBoundIndicatorCoefficient) {
  const MBLPModel m = build_su(square_params());
  const LinearRow& row = m.rows()[*m.find_row("lb_1_2_x")];
  EXPECT_EQ(row.sense, Sense::ge);
  EXPECT_EQ(row.rhs, 1);
  EXPECT_EQ(row.terms, (std::vector<Term>{{1, 1}, {m.variable("d_1_2_x"), -2}}));
}

TEST(StandardUnary, ActiveIndicatorGivesPrecedence) {
  // With d_1_2_x = 1: c_1x - c_2x <= UB - LB + (LB - PM - UB) = -PM.
  const MBLPModel m = build_su(square_params());
  const LinearRow& row = m.rows()[*m.find_row("prec_1_2_x")];
  Rational constant_part = row.rhs;
  Rational c1 = 0, c2 = 0;
  for (const Term& t : row.terms) {
    if (t.var == m.variable("d_1_2_x")) constant_part -= t.coef;
    if (t.var == 0) c1 = t.coef;
    if (t.var == 1) c2 = t.coef;
  }
  EXPECT_EQ(row.sense, Sense::le);
  EXPECT_EQ(c1, 1);
  EXPECT_EQ(c2, -1);
  EXPECT_EQ(constant_part, -2);
}

TEST(RefinedUnary, PrecedenceStateTable) {
  const DerivedParams p = square_params();
  const MBLPModel m = build_ru(p);
  const LinearRow& row = m.rows()[*m.find_row("prec_1_2_x")];
  const std::size_t kl = m.variable("d_1_2_x");
  const std::size_t lk = m.variable("d_2_1_x");
  auto reduced_rhs = [&](int dkl, int dlk) {
    Rational rhs = row.rhs;
    for (const Term& t : row.terms) {
      if (t.var == kl) rhs -= t.coef * dkl;
      if (t.var == lk) rhs -= t.coef * dlk;
    }
    return rhs;
  };
  // c_1x - c_2x <= rhs in each state.
  EXPECT_EQ(reduced_rhs(1, 0), -p.pm(0, 1, Axis::x));
  EXPECT_EQ(reduced_rhs(0, 0), p.pm(1, 0, Axis::x));
  EXPECT_EQ(reduced_rhs(0, 1), p.ub(0, Axis::x) - p.lb(1, Axis::x));
}

TEST(ComparisonFunctions, GrayCodeAssignment) {
  EXPECT_EQ(gray_code({true, Axis::x}), (BinaryCode{0, 0}));
  EXPECT_EQ(gray_code({true, Axis::y}), (BinaryCode{1, 0}));
  EXPECT_EQ(gray_code({false, Axis::x}), (BinaryCode{1, 1}));
  EXPECT_EQ(gray_code({false, Axis::y}), (BinaryCode{0, 1}));
}

TEST(ComparisonFunctions, BarValues) {
  EXPECT_EQ(bcf_bar({1, 0}, {Rational(1), Rational(0)}), 0);
  EXPECT_EQ(bcf_bar({0, 0}, {Rational(1), Rational(1)}), 2);
  const LinearExpr e = bcf_bar({1, 0}, 0, 1);
  EXPECT_EQ(e.constant(), 1);
  EXPECT_EQ(e.coefficient(0), -1);
  EXPECT_EQ(e.coefficient(1), 1);
}

TEST(ComparisonFunctions, SymbolicFormsMatchTable) {
  // (constant, d_ij, d_ji) per code for the L1 form and (constant, d_ij, d_ji, D) for the product form.
  const std::map<BinaryCode, std::array<int, 3>> bar = {
      {{0, 0}, {0, 1, 1}}, {{1, 0}, {1, -1, 1}}, {{1, 1}, {2, -1, -1}}, {{0, 1}, {1, 1, -1}}};
  const std::map<BinaryCode, std::array<int, 4>> tilde = {
      {{0, 0}, {0, 1, 1, -1}}, {{1, 0}, {1, -1, 0, 1}}, {{1, 1}, {1, 0, 0, -1}}, {{0, 1}, {1, 0, -1, 1}}};
  for (const auto& [code, want] : bar) {
    const LinearExpr e = bcf_bar(code, 0, 1);
    EXPECT_EQ(e.constant(), want[0]);
    EXPECT_EQ(e.coefficient(0), want[1]);
    EXPECT_EQ(e.coefficient(1), want[2]);
  }
  for (const auto& [code, want] : tilde) {
    const LinearExpr e = bcf_tilde(code, 0, 1, 2);
    EXPECT_EQ(e.constant(), want[0]);
    EXPECT_EQ(e.coefficient(0), want[1]);
    EXPECT_EQ(e.coefficient(1), want[2]);
    EXPECT_EQ(e.coefficient(2), want[3]);
  }
}

TEST(ComparisonFunctions, ZeroExactlyAtOwnCode) {
  for (int a0 = 0; a0 < 2; ++a0) {
    for (int a1 = 0; a1 < 2; ++a1) {
      for (int b0 = 0; b0 < 2; ++b0) {
        for (int b1 = 0; b1 < 2; ++b1) {
          const bool same = a0 == b0 && a1 == b1;
          const Rational bar = bcf_bar({a0, a1}, {Rational(b0), Rational(b1)});
          const Rational tilde = bcf_tilde({a0, a1}, Rational(b0), Rational(b1), Rational(b0 * b1));
          EXPECT_EQ(bar == 0, same);
          EXPECT_EQ(tilde, same ? 0 : 1);
          EXPECT_EQ(bar, std::abs(a0 - b0) + std::abs(a1 - b1));
        }
      }
    }
  }
  EXPECT_EQ(bcf_tilde({1, 1}, Rational(1), Rational(1), Rational(1)), 0);
  EXPECT_EQ(bcf_tilde({0, 0}, Rational(1), Rational(1), Rational(1)), 1);
}

TEST(BinaryLinear, CounterexampleRows) {
  const MBLPModel m = build_sbl(square_params());
  const std::vector<std::string> tags = {"lb_1_2_x", "lb_1_2_y", "ub_1_2_x", "ub_1_2_y", "prec_1_2_x", "prec_1_2_y"};
  const std::vector<RatVector> want_a = {qv({"0", "1", "0", "0", "2", "2"}),   qv({"0", "0", "0", "1", "-2", "2"}),
                                         qv({"-1", "0", "0", "0", "2", "2"}),  qv({"0", "0", "-1", "0", "-2", "2"}),
                                         qv({"-1", "1", "0", "0", "10", "10"}), qv({"0", "0", "-1", "1", "-10", "10"})};
  const RatVector want_b = qv({"3", "1", "-7", "-9", "2", "-8"});
  for (std::size_t r = 0; r < tags.size(); ++r) {
    const auto idx = m.find_row(tags[r]);
    ASSERT_TRUE(idx.has_value()) << tags[r];
    const auto [a, b] = as_ge(m.rows()[*idx], m.num_variables());
    EXPECT_EQ(a, want_a[r]) << tags[r];
    EXPECT_EQ(b, want_b[r]) << tags[r];
  }
}

TEST(BinaryLinear, PrintedFifthRowIsNotTightAtVertex) {
  const RatVector printed = qv({"-1", "1", "0", "1", "10", "10"});
  const RatVector vertex = qv({"9", "1", "9", "1", "1/2", "1/2"});
  Rational lhs = 0;
  for (std::size_t j = 0; j < 6; ++j) lhs += printed[j] * vertex[j];
  EXPECT_EQ(lhs, 3);
}

TEST(BinaryLinear, OriginCodeEnforcesHorizontalPrecedence) {
  const MBLPModel m = build_sbl(square_params());
  const LinearRow& row = m.rows()[*m.find_row("prec_1_2_x")];
  Rational rhs = row.rhs;  // d = (0, 0): every comparison term vanishes
  EXPECT_EQ(row.sense, Sense::ge);
  EXPECT_EQ(rhs, 2);
}

TEST(BinaryMcCormick, EnvelopeAtBinaryAndHalfPoints) {
  const MBLPModel m = build_sbm(square_params());
  const LPProblem base = LPProblem::from_model(m);
  auto d_range = [&](const Rational& a, const Rational& b) {
    std::pair<Rational, Rational> out;
    for (bool maximize : {false, true}) {
      LPProblem p = base;
      p.rows.clear();
      for (const LinearRow& r : m.rows()) {
        if (r.tag.family == "mccor3" || r.tag.family == "mccor12") p.rows.push_back(r);
      }
      p.lower[4] = p.upper[4] = a;
      p.lower[5] = p.upper[5] = b;
      p.cost.assign(p.num_vars, Rational(0));
      p.cost[6] = maximize ? -1 : 1;
      const LPSolution s = solve_lp(p);
      EXPECT_EQ(s.status, LPStatus::optimal);
      (maximize ? out.second : out.first) = s.point[6];
    }
    return out;
  };
  EXPECT_EQ(d_range(1, 1), (std::pair<Rational, Rational>{1, 1}));
  EXPECT_EQ(d_range(1, 0), (std::pair<Rational, Rational>{0, 0}));
  EXPECT_EQ(d_range(Rational(1, 2), Rational(1, 2)), (std::pair<Rational, Rational>{0, Rational(1, 2)}));
}

// Substituting d_k_l_s <- 1 - bcf_bar(code, d) into the standard unary rows
// reproduces the binary-linear rows.
TEST(BinaryLinear, DerivableFromStandardUnary) {
  Gen g(77);
  for (int trial = 0; trial < 25; ++trial) {
    const DerivedParams p = random_pair_params(g);
    const MBLPModel su = build_su(p);
    const MBLPModel sb = build_sbl(p);
    for (const LinearRow& row : su.rows()) {
      if (row.tag.family == "disj") continue;
      LinearExpr expr;
      for (const Term& t : row.terms) {
        const std::string& name = su.variables()[t.var].name;
        if (name[0] == 'c') {
          expr.add(sb.variable(name), t.coef);
          continue;
        }
        const int k = name[2] - '0';
        const int l = name[4] - '0';
        const Axis s = name[6] == 'x' ? Axis::x : Axis::y;
        const BinaryCode code = gray_code({k < l, s});
        LinearExpr one_minus_b(Rational(1));
        one_minus_b.add(bcf_bar(code, sb.variable("d_1_2"), sb.variable("d_2_1")), -1);
        expr.add(one_minus_b, t.coef);
      }
      const auto idx = sb.find_row(row.tag.name());
      ASSERT_TRUE(idx.has_value());
      const LinearRow& target = sb.rows()[*idx];
      const Rational sign = (row.sense == target.sense) ? 1 : -1;
      EXPECT_EQ(target.rhs, sign * (row.rhs - expr.constant())) << row.tag.name();
      LinearExpr scaled;
      scaled.add(expr, sign);
      EXPECT_EQ(target.terms, scaled.terms()) << row.tag.name();
    }
  }
}

// Projection of each formulation onto c, with the indicators fixed to an
// integral assignment allowed by the logic rows, equals the polytope those
// indicators describe: the box plus every active precedence, and for the
// refined unary form also "neither precedes" on an axis with both indicators 0.
class Projection : public ::testing::TestWithParam<FormulationKind> {};

LPProblem center_problem(std::vector<LinearRow> rows) {
  LPProblem p;
  p.num_vars = 4;
  p.lower.assign(4, std::nullopt);
  p.upper.assign(4, std::nullopt);
  p.rows = std::move(rows);
  p.cost.assign(4, Rational(0));
  return p;
}

std::optional<Rational> minimize_over(LPProblem p, const RatVector& cost) {
  p.cost = cost;
  const LPSolution s = solve_lp(p);
  if (s.status != LPStatus::optimal) return std::nullopt;
  return s.objective;
}

bool implied_by(const LPProblem& poly, const LinearRow& row) {
  RatVector a(4, Rational(0));
  for (const Term& term : row.terms) a[term.var] = term.coef;
  if (row.sense != Sense::le) {
    const auto lo = minimize_over(poly, a);
    if (!lo || *lo < row.rhs) return false;
  }
  if (row.sense != Sense::ge) {
    RatVector neg = a;
    for (Rational& x : neg) x = -x;
    const auto hi = minimize_over(poly, neg);
    if (!hi || -*hi > row.rhs) return false;
  }
  return true;
}

// c_l - c_k >= rhs over the pairwise center columns (c1x, c2x, c1y, c2y).
LinearRow difference_row(std::size_t k, std::size_t l, Axis s, const Rational& rhs) {
  const std::size_t ck = static_cast<std::size_t>(index(s)) * 2 + k;
  const std::size_t cl = static_cast<std::size_t>(index(s)) * 2 + l;
  LinearRow row;
  row.terms = ck < cl ? std::vector<Term>{{ck, -1}, {cl, 1}} : std::vector<Term>{{cl, 1}, {ck, -1}};
  row.sense = Sense::ge;
  row.rhs = rhs;
  return row;
}

TEST_P(Projection, FixedIndicatorsGiveDisjunctPolytope) {
  const FormulationKind kind = GetParam();
  Gen g(31 + static_cast<int>(kind));
  int checked = 0;
  for (int trial = 0; trial < 6; ++trial) {
    const DerivedParams p = DerivedParams::from_instance(g.small_instance(2));
    const MBLPModel m = build_formulation(kind, p);
    const std::size_t patterns = is_unary(kind) ? 16 : 4;
    for (std::size_t mask = 0; mask < patterns; ++mask) {
      std::vector<Rational> fixed(m.num_variables(), Rational(0));
      // precedes[t]: disjunct t of the Gray order is switched on.
      std::array<bool, 4> on{};
      if (is_unary(kind)) {
        for (std::size_t t = 0; t < 4; ++t) {
          on[t] = (mask >> t) & 1U;
          fixed[4 + t] = on[t] ? 1 : 0;
        }
      } else {
        const BinaryCode code = gray_code(kDisjunctOrder[mask]);
        on[mask] = true;
        fixed[4] = code[0];
        fixed[5] = code[1];
        if (kind == FormulationKind::sbm) fixed[6] = code[0] * code[1];
      }
      std::vector<LinearRow> reduced;
      bool logic_ok = true;
      for (const LinearRow& row : m.rows()) {
        LinearRow r;
        r.sense = row.sense;
        r.rhs = row.rhs;
        r.tag = row.tag;
        for (const Term& term : row.terms) {
          if (term.var < 4) {
            r.terms.push_back(term);
          } else {
            r.rhs -= term.coef * fixed[term.var];
          }
        }
        if (r.terms.empty()) {
          logic_ok &= row.satisfied_by(fixed);
          continue;
        }
        reduced.push_back(std::move(r));
      }
      if (!logic_ok) continue;
      ++checked;
      for (std::size_t v = 0; v < 4; ++v) {
        auto lo = m.variables()[v].lower;
        auto hi = m.variables()[v].upper;
        if (lo) reduced.push_back(LinearRow{{{v, 1}}, Sense::ge, *lo, RowTag{"clo", {}, {}}});
        if (hi) reduced.push_back(LinearRow{{{v, 1}}, Sense::le, *hi, RowTag{"chi", {}, {}}});
      }
      std::vector<LinearRow> target;
      for (std::size_t obj = 0; obj < 2; ++obj) {
        for (Axis s : kAxes) {
          const std::size_t v = static_cast<std::size_t>(index(s)) * 2 + obj;
          target.push_back(LinearRow{{{v, 1}}, Sense::ge, p.lb(obj, s), {}});
          target.push_back(LinearRow{{{v, 1}}, Sense::le, p.ub(obj, s), {}});
        }
      }
      for (std::size_t t = 0; t < 4; ++t) {
        const Disjunct dj = kDisjunctOrder[t];
        const std::size_t k = dj.forward ? 0 : 1;
        const std::size_t l = 1 - k;
        if (on[t]) {
          target.push_back(difference_row(k, l, dj.axis, p.pm(k, l, dj.axis)));
        } else if (kind == FormulationKind::ru && !on[(t + 2) % 4]) {
          // Neither precedes along this axis: c_l + PM_lk >= c_k.
          target.push_back(difference_row(k, l, dj.axis, -p.pm(l, k, dj.axis)));
        }
      }
      const LPProblem from_model = center_problem(reduced);
      const LPProblem from_params = center_problem(target);
      const bool empty_model = !minimize_over(from_model, RatVector(4, Rational(0)));
      const bool empty_params = !minimize_over(from_params, RatVector(4, Rational(0)));
      ASSERT_EQ(empty_model, empty_params) << "mask " << mask;
      if (empty_model) continue;
      for (const LinearRow& row : reduced) EXPECT_TRUE(implied_by(from_params, row)) << row.tag.name();
      for (const LinearRow& row : target) EXPECT_TRUE(implied_by(from_model, row)) << "mask " << mask;
    }
  }
  // One-hot for the standard form, eight three-state patterns for the refined one.
  const int per_trial = kind == FormulationKind::su ? 4 : kind == FormulationKind::ru ? 8 : 4;
  EXPECT_EQ(checked, 6 * per_trial);
}

INSTANTIATE_TEST_SUITE_P(AllKinds, Projection, ::testing::ValuesIn(kKinds),
                         [](const auto& info) { return to_string(info.param); });

TEST(SequencePair, RowCounts) {
  const DerivedParams p = DerivedParams::from_instance(Gen(2).small_instance(3));
  FormulationOptions opts;
  opts.sequence_pair = true;
  EXPECT_EQ(build_su(p, opts).count_family("spu"), 12u);
  EXPECT_EQ(build_ru(p, opts).count_family("spu"), 12u);
  for (FormulationKind kind : {FormulationKind::sbl, FormulationKind::sbm}) {
    const MBLPModel m = build_formulation(kind, p, opts);
    for (const char* fam : {"spbflo", "spbfhi", "spbrlo", "spbrhi"}) EXPECT_EQ(m.count_family(fam), 1u);
  }
  const DerivedParams p4 = DerivedParams::from_instance(Gen(2).small_instance(4));
  EXPECT_EQ(build_su(p4, opts).count_family("spu"), 48u);
  EXPECT_EQ(build_sbl(p4, opts).count_family("spbflo"), 4u);
}

TEST(SequencePair, NeedsThreeObjects) {
  EXPECT_THROW(add_sequence_pair(build_sbl(square_params()), 2), NotApplicable);
  FormulationOptions opts;
  opts.sequence_pair = true;
  EXPECT_EQ(build_sbl(square_params(), opts).rows().size(), build_sbl(square_params()).rows().size());
}

TEST(SequencePair, RejectsBrokenChain) {
  FormulationOptions opts;
  opts.sequence_pair = true;
  const MBLPModel m = build_sbl(DerivedParams::from_instance(Gen(2).small_instance(3)), opts);
  std::vector<Rational> x(m.num_variables(), Rational(0));
  x[m.variable("d_2_3")] = 0;
  x[m.variable("d_3_2")] = 1;
  x[m.variable("d_1_3")] = 1;
  x[m.variable("d_3_1")] = 1;
  const LinearRow& fwd_lo = m.rows()[*m.find_row("spbflo_1_2_3")];
  EXPECT_EQ(fwd_lo.activity(x), -1);
  EXPECT_FALSE(fwd_lo.satisfied_by(x));
  EXPECT_TRUE(m.rows()[*m.find_row("spbrlo_1_2_3")].satisfied_by(x));
}

// Every disjunct assignment compatible with a layout, for pair (i, j).
std::vector<std::size_t> satisfied_disjuncts(const Instance& inst, const PackingSolution& sol, std::size_t i,
                                             std::size_t j) {
  const DerivedParams p = DerivedParams::from_instance(inst);
  std::vector<std::size_t> out;
  for (std::size_t t = 0; t < 4; ++t) {
    const Disjunct d = kDisjunctOrder[t];
    const std::size_t k = d.forward ? i : j;
    const std::size_t l = d.forward ? j : i;
    if (sol.centers[k][index(d.axis)] + p.pm(k, l, d.axis) <= sol.centers[l][index(d.axis)]) out.push_back(t);
  }
  return out;
}

TEST(SequencePair, NeverCutsOffValidLayouts) {
  Gen g(404);
  FormulationOptions opts;
  opts.sequence_pair = true;
  int layouts = 0;
  while (layouts < 200) {
    const Instance inst = g.small_instance(3);
    const DerivedParams p = DerivedParams::from_instance(inst);
    PackingSolution sol;
    sol.centers.resize(3);
    for (std::size_t i = 0; i < 3; ++i) {
      for (Axis s : kAxes) {
        const Rational room = p.ub(i, s) - p.lb(i, s);
        const long steps = mpz_class(room.get_num() / room.get_den()).get_si();
        sol.centers[i][index(s)] = p.lb(i, s) + g.integer(0, steps);
      }
    }
    if (!validate_layout(inst, sol).ok()) continue;
    ++layouts;
    const std::array<std::pair<std::size_t, std::size_t>, 3> pairs = {{{0, 1}, {0, 2}, {1, 2}}};
    std::array<std::vector<std::size_t>, 3> options;
    for (std::size_t q = 0; q < 3; ++q) options[q] = satisfied_disjuncts(inst, sol, pairs[q].first, pairs[q].second);
    for (FormulationKind kind : kKinds) {
      const MBLPModel m = build_formulation(kind, p, opts);
      bool found = false;
      for (std::size_t a : options[0]) {
        for (std::size_t b : options[1]) {
          for (std::size_t c : options[2]) {
            std::vector<Rational> x(m.num_variables(), Rational(0));
            for (std::size_t i = 0; i < 3; ++i) {
              for (Axis s : kAxes) x[m.variable(center_name(static_cast<int>(i) + 1, s))] = sol.centers[i][index(s)];
            }
            const std::array<std::size_t, 3> pick = {a, b, c};
            for (std::size_t q = 0; q < 3; ++q) {
              const int i = static_cast<int>(pairs[q].first) + 1;
              const int j = static_cast<int>(pairs[q].second) + 1;
              if (kind == FormulationKind::ru) {
                for (std::size_t t : options[q]) {
                  const Disjunct d = kDisjunctOrder[t];
                  x[m.variable(d.forward ? unary_name(i, j, d.axis) : unary_name(j, i, d.axis))] = 1;
                }
              } else if (is_unary(kind)) {
                const Disjunct d = kDisjunctOrder[pick[q]];
                x[m.variable(d.forward ? unary_name(i, j, d.axis) : unary_name(j, i, d.axis))] = 1;
              } else {
                const BinaryCode code = gray_code(kDisjunctOrder[pick[q]]);
                x[m.variable(binary_name(i, j))] = code[0];
                x[m.variable(binary_name(j, i))] = code[1];
                if (auto dv = m.find_variable(product_name(i, j))) x[*dv] = code[0] * code[1];
              }
            }
            found |= m.is_feasible(x);
          }
        }
      }
      EXPECT_TRUE(found) << to_string(kind) << " layout " << layouts;
    }
  }
}

TEST(Priorities, SymmetricObjectsTie) {
  const auto pri = branching_priorities(two_squares(), true);
  std::set<Rational> values;
  for (const auto& [name, v] : pri) values.insert(v);
  EXPECT_EQ(pri.size(), 4u);
  EXPECT_EQ(values.size(), 1u);
  const auto bin = branching_priorities(two_squares(), false);
  EXPECT_EQ(bin.size(), 2u);
  EXPECT_EQ(bin.at("d_1_2"), bin.at("d_2_1"));
}

TEST(Priorities, LargerPairDominates) {
  const Instance inst(Region{40, 40}, {box(1, 2, 2), box(2, 2, 2), box(3, 5, 5), box(4, 6, 6)});
  for (bool unary : {true, false}) {
    const auto pri = branching_priorities(inst, unary);
    const std::string small = unary ? unary_name(1, 2, Axis::x) : binary_name(1, 2);
    const std::string large = unary ? unary_name(3, 4, Axis::x) : binary_name(3, 4);
    EXPECT_GT(pri.at(large), pri.at(small));
  }
}

TEST(Priorities, HandEvaluatedThreeObjects) {
  // Object data (dx, dy, clearances x-, y-, x+, y+).
  const Instance inst(Region{40, 40},
                      {box(1, 2, 3, {1, 0, 0, 2}), box(2, 4, 1, {0, 0, 3, 0}), box(3, 1, 2, {0, 1, 0, 0})});
  const auto unary = branching_priorities(inst, true);
  const auto binary = branching_priorities(inst, false);
  // x: clearance sums (1, 3, 0), max 3; dims (2, 4, 1), max 4; areas (6, 4, 2).
  EXPECT_EQ(unary.at(unary_name(1, 2, Axis::x)), 1 + 4 * (2 + 5 * 4));
  EXPECT_EQ(unary.at(unary_name(2, 3, Axis::x)), 0 + 4 * (1 + 5 * 2));
  // y: clearance sums (2, 0, 1), max 2; dims (3, 1, 2), max 3.
  EXPECT_EQ(unary.at(unary_name(1, 3, Axis::y)), 1 + 3 * (2 + 4 * 2));
  EXPECT_EQ(unary.at(unary_name(3, 1, Axis::y)), unary.at(unary_name(1, 3, Axis::y)));
  // Total clearances (3, 3, 1), max 3.
  EXPECT_EQ(binary.at(binary_name(1, 2)), 3 + 4 * 4);
  EXPECT_EQ(binary.at(binary_name(3, 2)), 1 + 4 * 2);
}

TEST(Priorities, AppliedToModelVariables) {
  FormulationOptions opts;
  opts.branch_priorities = true;
  const MBLPModel m = build_strip_packing(Gen(8).small_instance(3), FormulationKind::ru, opts);
  for (const Variable& v : m.variables()) EXPECT_EQ(v.priority.has_value(), v.kind == VarKind::binary) << v.name;
}

TEST(StripPacking, ObjectiveIsHeightOnly) {
  const Instance inst = Gen(12).small_instance(3);
  for (FormulationKind kind : kKinds) {
    const MBLPModel m = build_strip_packing(inst, kind);
    ASSERT_EQ(m.objective().size(), 1u);
    EXPECT_EQ(m.variables()[m.objective()[0].var].name, "h");
    EXPECT_TRUE(m.minimize);
    EXPECT_EQ(m.count_family("hcap"), 3u);
  }
  EXPECT_THROW(build_strip_packing(Instance(Region{10, 10}, {}), FormulationKind::su), std::invalid_argument);
}

TEST(StripPacking, GreedyLayoutIsFeasibleAssignment) {
  Gen g(13);
  FormulationOptions seq;
  seq.sequence_pair = true;
  for (int trial = 0; trial < 30; ++trial) {
    const Instance inst = g.small_instance(static_cast<int>(g.integer(1, 5)));
    const PackingSolution greedy = greedy_initial_layout(inst);
    for (FormulationKind kind : kKinds) {
      for (const FormulationOptions& opts : {FormulationOptions{}, seq}) {
        const MBLPModel m = build_strip_packing(inst, kind, opts);
        const auto x = assignment_from_layout(m, strip_instance(inst), greedy);
        EXPECT_TRUE(m.is_feasible(x)) << to_string(kind);
        EXPECT_EQ(m.objective_value(x), greedy.height);
        const PackingSolution back = layout_from_assignment(m, inst, x);
        EXPECT_EQ(back.centers, greedy.centers);
      }
    }
  }
}

}  // namespace
}  // namespace idealpack

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

#include <gtest/gtest.h>

#include "idealpack/formulations.hpp"
#include "idealpack/idealness.hpp"
#include "test_support.hpp"

namespace idealpack {
namespace {

using testing::Gen;
using testing::q;
using testing::two_squares;

RatVector normalized(RatVector v) {
  const Rational first = v.front();
  for (Rational& x : v) x /= first;
  return v;
}

// Rank test over every proper subset, independent of the circuit code.
bool minimal_by_brute_force(const RatMatrix& m) {
  if (rank(m) == m.rows()) return false;
  for (std::size_t drop = 0; drop < m.rows(); ++drop) {
    std::vector<std::size_t> rest;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r != drop) rest.push_back(r);
    }
    if (rank(m.select_rows(rest)) != rest.size()) return false;
  }
  return true;
}

RatMatrix rows_of(const RelaxationPolytope& poly, const std::vector<std::string>& names) {
  std::vector<const LinearRow*> rows;
  for (const std::string& name : names) {
    if (auto r = poly.find_row(name)) {
      rows.push_back(&poly.rows[*r]);
      continue;
    }
    for (const LinearRow& e : poly.equalities) {
      if (e.tag.name() == name) rows.push_back(&e);
    }
  }
  return augmented_rows(rows, poly.dimension());
}

// Random parameters where a random subset of margins sits exactly on the
// boundary PM = UB - LB.
DerivedParams mixed_boundary_params(std::mt19937_64& rng) {
  const DerivedParams p = sample_pairwise_params(rng, SamplingConfig{});
  std::array<Rational, 4> lb, ub, pm;
  for (std::size_t i = 0; i < 2; ++i) {
    for (Axis s : {Axis::x, Axis::y}) {
      lb[i * 2 + index(s)] = p.lb(i, s);
      ub[i * 2 + index(s)] = p.ub(i, s);
    }
  }
  for (std::size_t t = 0; t < 4; ++t) {
    const std::size_t k = t / 2;
    const Axis s = t % 2 == 0 ? Axis::x : Axis::y;
    pm[t] = rng() % 2 == 0 ? p.pm(k, 1 - k, s) : Rational(ub[(1 - k) * 2 + index(s)] - lb[k * 2 + index(s)]);
  }
  return pairwise_params(lb, ub, pm);
}

TEST(KnownCovers, FamilySizes) {
  EXPECT_EQ(known_covers(FormulationKind::su).size(), 4U);
  EXPECT_EQ(known_covers(FormulationKind::ru).size(), 16U);
  EXPECT_EQ(known_covers(FormulationKind::sbm).size(), 15U);
  EXPECT_THROW(known_covers(FormulationKind::sbl), Unsupported);
  for (const CoverFamily& f : known_covers(FormulationKind::ru)) {
    EXPECT_EQ(f.rows.size(), f.label.rfind("ru.logic", 0) == 0 ? 4U : 5U) << f.label;
  }
}

TEST(KnownCovers, EveryRowNameResolves) {
  const DerivedParams p = DerivedParams::from_instance(two_squares());
  for (FormulationKind kind : {FormulationKind::su, FormulationKind::ru, FormulationKind::sbm}) {
    const RelaxationPolytope poly = relax(build_formulation(kind, p));
    for (const CoverFamily& f : known_covers(kind)) {
      EXPECT_EQ(rows_of(poly, f.rows).rows(), f.rows.size()) << f.label;
    }
  }
}

TEST(VerifyCover, StandardUnaryMultipliersAtTwoSquares) {
  // lb - ub + prec - 6 indic = 0 on (c_1x, c_2x, d_12x | rhs), hand-derived.
  const RelaxationPolytope poly =
      relax(build_formulation(FormulationKind::su, DerivedParams::from_instance(two_squares())));
  const Circuit c = verify_cover(poly, {"lb_1_2_x", "ub_1_2_x", "prec_1_2_x", "indic_1_2_x"});
  EXPECT_TRUE(c.minimal);
  EXPECT_EQ(normalized(c.multipliers), (RatVector{1, -1, 1, -6}));
  EXPECT_EQ(c.names.front(), "lb_1_2_x");
}

TEST(VerifyCover, IndependentRowsThrow) {
  const RelaxationPolytope poly =
      relax(build_formulation(FormulationKind::su, DerivedParams::from_instance(two_squares())));
  EXPECT_THROW(verify_cover(poly, {"lb_1_2_x", "ub_2_1_y"}), NotDependent);
  EXPECT_THROW(verify_cover(poly, {"lb_1_2_x", "nope"}), std::out_of_range);
}

TEST(CertifyCover, DependentOnRandomInteriorParameters) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const DerivedParams p = sample_pairwise_params(rng, SamplingConfig{});
    for (FormulationKind kind : {FormulationKind::su, FormulationKind::ru, FormulationKind::sbm}) {
      for (const CoverFamily& f : known_covers(kind)) {
        const CoverCertificate cert = certify_cover(f, p);
        if (!cert.conditions_hold) continue;
        EXPECT_TRUE(cert.dependent) << f.label;
      }
    }
  }
}

TEST(CertifyCover, MinimalityMatchesSideConditions) {
  std::mt19937_64 rng(43);
  std::size_t non_minimal = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const DerivedParams p = mixed_boundary_params(rng);
    for (FormulationKind kind : {FormulationKind::su, FormulationKind::ru, FormulationKind::sbm}) {
      const RelaxationPolytope poly = relax(build_formulation(kind, p));
      for (const CoverFamily& f : known_covers(kind)) {
        const CoverCertificate cert = certify_cover(f, p);
        if (!cert.conditions_hold) continue;
        ASSERT_TRUE(cert.dependent) << f.label;
        const bool oracle = minimal_by_brute_force(rows_of(poly, f.rows));
        EXPECT_EQ(cert.circuit->minimal, oracle) << f.label;
        EXPECT_EQ(cert.expect_minimal, oracle) << f.label;
        non_minimal += oracle ? 0 : 1;
      }
    }
  }
  EXPECT_GT(non_minimal, 0U);
}

TEST(CertifyCover, StandardUnaryBoundaryIsNotMinimal) {
  std::mt19937_64 rng(3);
  SamplingConfig cfg;
  cfg.boundary = true;
  const DerivedParams p = sample_pairwise_params(rng, cfg);
  for (const CoverFamily& f : known_covers(FormulationKind::su)) {
    const CoverCertificate cert = certify_cover(f, p);
    EXPECT_TRUE(cert.dependent);
    EXPECT_FALSE(cert.expect_minimal);
    EXPECT_FALSE(cert.circuit->minimal);
  }
}

TEST(CertifyCover, CrossFamilyNeedsNonzeroReach) {
  // LB_1y + PM_12y - UB_2y = 0: the second chain of cross.a has zero reach.
  const std::array<Rational, 4> lb = {1, 1, 1, 1};
  const std::array<Rational, 4> ub = {9, 9, 9, 9};
  std::array<Rational, 4> pm = {2, 8, 2, 2};
  const DerivedParams p = pairwise_params(lb, ub, pm);
  const auto families = known_covers(FormulationKind::sbm);
  const auto it = std::find_if(families.begin(), families.end(),
                               [](const CoverFamily& f) { return f.label == "sbm.cross.a"; });
  ASSERT_NE(it, families.end());
  EXPECT_FALSE(certify_cover(*it, p).conditions_hold);
  pm[1] = 3;
  EXPECT_TRUE(certify_cover(*it, pairwise_params(lb, ub, pm)).conditions_hold);
  EXPECT_TRUE(certify_cover(*it, pairwise_params(lb, ub, pm)).dependent);
}

TEST(SeparateCircuit, FindsSmallestDependentSubset) {
  const RatMatrix m = RatMatrix::from_rows({{1, 0, 1}, {2, 0, 2}, {0, 1, 0}});
  for (SeparationMode mode : {SeparationMode::subset_search, SeparationMode::milp}) {
    SeparationOptions opts;
    opts.mode = mode;
    const Circuit c = separate_circuit(m, opts);
    EXPECT_EQ(c.rows, (std::vector<std::size_t>{0, 1}));
    EXPECT_TRUE(c.minimal);
    EXPECT_EQ(normalized(c.multipliers), (RatVector{1, q("-1/2")}));
  }
}

TEST(SeparateCircuit, FullRankThrows) {
  const RatMatrix m = RatMatrix::from_rows({{1, 0, 0}, {0, 1, 0}});
  EXPECT_THROW(separate_circuit(m), NotDeficient);
  SeparationOptions opts;
  opts.mode = SeparationMode::milp;
  EXPECT_THROW(separate_circuit(m, opts), NotDeficient);
}

TEST(SeparateCircuit, ModesAgreeOnSupportSizeForRandomMatrices) {
  Gen g(17);
  for (int trial = 0; trial < 40; ++trial) {
    const auto rows = static_cast<std::size_t>(g.integer(2, 5));
    const auto cols = static_cast<std::size_t>(g.integer(1, rows));
    RatMatrix m = g.matrix(rows, cols, -2, 2);
    if (rank(m) == rows) continue;
    SeparationOptions milp;
    milp.mode = SeparationMode::milp;
    const Circuit a = separate_circuit(m);
    const Circuit b = separate_circuit(m, milp);
    EXPECT_EQ(a.rows.size(), b.rows.size()) << "trial " << trial;
    EXPECT_TRUE(minimal_by_brute_force(m.select_rows(a.rows)));
    EXPECT_TRUE(minimal_by_brute_force(m.select_rows(b.rows)));
  }
}

}  // namespace
}  // namespace idealpack

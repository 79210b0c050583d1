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

#include "idealpack/rational.hpp"

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace idealpack {
namespace {

using testing::Gen;
using testing::q;
using testing::qv;

// The six tight rows of the two-square binary-linear counterexample, in >= form,
// over (c1x, c2x, c1y, c2y, d12, d21).
RatMatrix counterexample_matrix() {
  return RatMatrix::from_rows({qv({"0", "1", "0", "0", "2", "2"}), qv({"0", "0", "0", "1", "-2", "2"}),
                               qv({"-1", "0", "0", "0", "2", "2"}), qv({"0", "0", "-1", "0", "-2", "2"}),
                               qv({"-1", "1", "0", "0", "10", "10"}), qv({"0", "0", "-1", "1", "-10", "10"})});
}

TEST(RationalParse, AcceptsIntegersFractionsAndDecimals) {
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_EQ(parse_rational("-6/4"), Rational(-3, 2));
  EXPECT_EQ(parse_rational("0.125"), Rational(1, 8));
  EXPECT_EQ(parse_rational(" 7/1 "), Rational(7));
  EXPECT_EQ(parse_rational("-42.0625"), Rational(-673, 16));
  EXPECT_EQ(parse_rational("010/08"), Rational(5, 4));
}

TEST(RationalParse, RejectsMalformedText) {
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
}

TEST(RationalFormat, LowestTermsAndDecimals) {
  Rational r(6, 4);
  r.canonicalize();
  EXPECT_EQ(to_string(r), "3/2");
  EXPECT_EQ(to_string(Rational(-4)), "-4");
  EXPECT_TRUE(is_terminating_decimal(Rational(3, 8)));
  EXPECT_FALSE(is_terminating_decimal(Rational(1, 3)));
  EXPECT_EQ(to_decimal_string(Rational(3, 8)), "0.375");
  EXPECT_EQ(to_decimal_string(Rational(-5, 2)), "-2.5");
  EXPECT_EQ(to_decimal_string(Rational(12)), "12");
  EXPECT_THROW(to_decimal_string(Rational(1, 3)), std::invalid_argument);
}

TEST(RationalFormat, RoundTripsRandomValues) {
  Gen g(11);
  for (int i = 0; i < 200; ++i) {
    const Rational r = g.rational(-50, 50, 40);
    EXPECT_EQ(parse_rational(to_string(r)), r);
    if (is_terminating_decimal(r)) EXPECT_EQ(parse_rational(to_decimal_string(r)), r);
  }
}

TEST(Rank, IdentityAndScalarMultiple) {
  EXPECT_EQ(rank(RatMatrix::identity(2)), 2u);
  EXPECT_EQ(rank(RatMatrix::from_rows({qv({"1", "0", "1"}), qv({"2", "0", "2"})})), 1u);
  EXPECT_EQ(rank(RatMatrix(0, 0)), 0u);
  EXPECT_EQ(rank(RatMatrix(3, 2)), 0u);
}

TEST(Rank, CounterexampleMatrixIsFullRank) { EXPECT_EQ(rank(counterexample_matrix()), 6u); }

TEST(Rank, EqualsRankOfTranspose) {
  Gen g(5);
  for (int trial = 0; trial < 60; ++trial) {
    const auto rows = static_cast<std::size_t>(g.integer(1, 6));
    const auto cols = static_cast<std::size_t>(g.integer(1, 6));
    RatMatrix m = g.matrix(rows, cols);
    if (rows > 1 && g.coin()) {
      // Force a dependency: last row = 2 * first row - second row.
      for (std::size_t c = 0; c < cols; ++c) m(rows - 1, c) = 2 * m(0, c) - m(rows > 2 ? 1 : 0, c);
    }
    EXPECT_EQ(rank(m), rank(m.transpose()));
  }
}

TEST(SolveSquare, IdentityReturnsRhs) {
  const RatVector rhs = qv({"3", "-1/2"});
  EXPECT_EQ(solve_square(RatMatrix::identity(2), rhs), rhs);
}

TEST(SolveSquare, CounterexampleVertex) {
  EXPECT_EQ(solve_square(counterexample_matrix(), qv({"3", "1", "-7", "-9", "2", "-8"})),
            qv({"9", "1", "9", "1", "1/2", "1/2"}));
}

TEST(SolveSquare, SingularThrows) {
  EXPECT_THROW(solve_square(RatMatrix::from_rows({qv({"1", "2"}), qv({"1", "2"})}), qv({"1", "1"})), SingularMatrix);
  EXPECT_THROW(solve_square(RatMatrix(2, 3), qv({"1", "1"})), std::invalid_argument);
}

TEST(SolveSquare, RecoversRandomSolutions) {
  Gen g(17);
  int solved = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const auto n = static_cast<std::size_t>(g.integer(1, 6));
    const RatMatrix m = g.matrix(n, n);
    if (rank(m) < n) continue;
    const RatVector x = g.vector(n);
    EXPECT_EQ(solve_square(m, m.multiply(x)), x);
    ++solved;
  }
  EXPECT_GT(solved, 40);
}

TEST(Nullspace, ScalarMultipleRows) {
  const auto p = nullspace_vector(RatMatrix::from_rows({qv({"1", "0"}), qv({"2", "0"})}));
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(*p, qv({"1", "-1/2"}));
}

TEST(Nullspace, FullRankHasNone) { EXPECT_FALSE(nullspace_vector(counterexample_matrix()).has_value()); }

TEST(Nullspace, ThreeBoundRowsCombineToZero) {
  // c_l >= LB_l, c_k <= UB_k, c_k - c_l <= UB_k - LB_l as (A | b) over (c_k, c_l).
  Gen g(23);
  for (int trial = 0; trial < 30; ++trial) {
    const Rational lb = g.rational(0, 5);
    const Rational ub = g.rational(5, 10);
    const RatMatrix m = RatMatrix::from_rows({{0, 1, lb}, {1, 0, ub}, {1, -1, ub - lb}});
    const auto p = nullspace_vector(m);
    ASSERT_TRUE(p.has_value());
    // Hand elimination: row1 - row2 + row3 = 0.
    EXPECT_EQ(*p, qv({"1", "-1", "1"}));
  }
}

TEST(Nullspace, RandomDeficientMatricesAnnihilate) {
  Gen g(29);
  for (int trial = 0; trial < 60; ++trial) {
    const auto rows = static_cast<std::size_t>(g.integer(2, 7));
    const auto cols = static_cast<std::size_t>(g.integer(1, 5));
    const RatMatrix m = g.matrix(rows, cols);
    const auto p = nullspace_vector(m);
    if (rank(m) == rows) {
      EXPECT_FALSE(p.has_value());
      continue;
    }
    ASSERT_TRUE(p.has_value());
    EXPECT_EQ(m.transpose().multiply(*p), RatVector(cols, Rational(0)));
    std::size_t first = 0;
    while ((*p)[first] == 0) ++first;
    EXPECT_EQ((*p)[first], 1);
  }
}

TEST(PrimitiveScaling, ClearsDenominatorsAndCommonFactors) {
  EXPECT_EQ(primitive_integer_scaling(qv({"1", "-1/2"})), qv({"2", "-1"}));
  EXPECT_EQ(primitive_integer_scaling(qv({"4", "6", "0"})), qv({"2", "3", "0"}));
  EXPECT_EQ(primitive_integer_scaling(qv({"0", "0"})), qv({"0", "0"}));
}

}  // namespace
}  // namespace idealpack

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

// Exact rational scalars and dense rational linear algebra.
//
// Every coefficient, bound and solution in the toolkit is a Rational. The
// matrix routines use fraction-free (Bareiss) elimination over the integers
// after clearing denominators row by row, and always pick the first nonzero
// entry of a column as pivot so that certificates are reproducible.

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace idealpack {

// GMP rationals are kept canonical (lowest terms, positive denominator)
// by every mpq_class operator.
using Rational = mpq_class;
using RatVector = std::vector<Rational>;

// Parses "p/q", "p", or a terminating decimal such as "-2.75".
Rational parse_rational(std::string_view text);

// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& value);

// True when the value has a finite decimal expansion.
bool is_terminating_decimal(const Rational& value);

// Exact decimal rendering; requires is_terminating_decimal(value).
std::string to_decimal_string(const Rational& value);

Rational abs(const Rational& value);

class SingularMatrix : public std::runtime_error {
 public:
  SingularMatrix() : std::runtime_error("matrix is singular") {}
};

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  static RatMatrix identity(std::size_t n);
  // Builds from nested rows; all rows must have equal length.
  static RatMatrix from_rows(const std::vector<RatVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<const Rational> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  RatMatrix transpose() const;
  RatMatrix select_rows(std::span<const std::size_t> indices) const;
  RatVector multiply(std::span<const Rational> x) const;

  bool operator==(const RatMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

std::size_t rank(const RatMatrix& m);

// Solves m x = rhs for square nonsingular m. Throws SingularMatrix.
RatVector solve_square(const RatMatrix& m, std::span<const Rational> rhs);

// A nonzero p with m^T p = 0 (a dependency among the rows of m), scaled so
// its first nonzero entry is one; nullopt when the rows are independent.
std::optional<RatVector> nullspace_vector(const RatMatrix& m);

// Scales v by a positive factor so that it becomes a primitive integer
// vector (gcd of entries is one). Zero vectors are returned unchanged.
RatVector primitive_integer_scaling(std::span<const Rational> v);

}  // namespace idealpack

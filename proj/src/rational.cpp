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

#include <algorithm>
#include <cctype>
#include <utility>

namespace idealpack {
namespace {

using IntMatrix = std::vector<std::vector<mpz_class>>;

mpz_class lcm_of_denominators(std::span<const Rational> values) {
  mpz_class l = 1;
  for (const Rational& v : values) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  }
  return l;
}

// Clears denominators row by row; row scaling preserves rank and the
// solution set of a linear system.
IntMatrix to_integer_rows(const RatMatrix& m) {
  IntMatrix out(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const mpz_class scale = lcm_of_denominators(m.row(r));
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rational& v = m(r, c);
      out[r][c] = v.get_num() * (scale / v.get_den());
    }
  }
  return out;
}

// In-place Bareiss forward elimination restricted to the first `pivot_cols`
// columns. Returns the pivot column of each echelon row.
std::vector<std::size_t> bareiss(IntMatrix& a, std::size_t pivot_cols) {
  const std::size_t n = a.size();
  const std::size_t width = n == 0 ? 0 : a[0].size();
  std::vector<std::size_t> pivots;
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < n; ++c) {
    std::size_t p = r;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < n; ++i) {
      for (std::size_t j = c + 1; j < width; ++j) {
        mpz_class v = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto fail = [&]() {
    return std::invalid_argument("not a rational number: '" + std::string(text) + "'");
  };
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); }),
          s.end());
  if (s.empty()) throw fail();
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    return std::all_of(t.begin() + static_cast<std::ptrdiff_t>(i), t.end(),
                       [](unsigned char ch) { return std::isdigit(ch); });
  };
  auto strip_plus = [](std::string t) {
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    return t;
  };
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den)) throw fail();
    mpz_class d(strip_plus(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    Rational q(mpz_class(strip_plus(num), 10), d);
    q.canonicalize();
    return q;
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string whole = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    bool negative = !whole.empty() && whole[0] == '-';
    if (whole == "-" || whole == "+" || whole.empty()) whole += "0";
    if (!valid_int(whole) || frac.empty() ||
        !std::all_of(frac.begin(), frac.end(), [](unsigned char ch) { return std::isdigit(ch); })) {
      throw fail();
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class w(strip_plus(whole), 10);
    mpz_class f(frac, 10);
    mpz_class num = abs(w) * scale + f;
    if (negative) num = -num;
    Rational q(num, scale);
    q.canonicalize();
    return q;
  }
  if (!valid_int(s)) throw fail();
  return Rational(mpz_class(strip_plus(s), 10));
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

bool is_terminating_decimal(const Rational& value) {
  mpz_class d = value.get_den();
  while (mpz_divisible_ui_p(d.get_mpz_t(), 2)) d /= 2;
  while (mpz_divisible_ui_p(d.get_mpz_t(), 5)) d /= 5;
  return d == 1;
}

std::string to_decimal_string(const Rational& value) {
  if (!is_terminating_decimal(value)) {
    throw std::invalid_argument("value has no finite decimal expansion: " + to_string(value));
  }
  if (value.get_den() == 1) return value.get_num().get_str();
  // Smallest k with den | 10^k.
  std::size_t digits = 0;
  mpz_class pow10 = 1;
  while (!mpz_divisible_p(pow10.get_mpz_t(), value.get_den_mpz_t())) {
    pow10 *= 10;
    ++digits;
  }
  mpz_class scaled = abs(value.get_num()) * (pow10 / value.get_den());
  std::string s = scaled.get_str();
  if (s.size() <= digits) s.insert(0, digits - s.size() + 1, '0');
  s.insert(s.size() - digits, ".");
  if (value < 0) s.insert(0, "-");
  return s;
}

Rational abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows) {
  if (rows.empty()) return {};
  RatMatrix m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw std::invalid_argument("ragged matrix rows");
    std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(r * m.cols_));
  }
  return m;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RatMatrix RatMatrix::select_rows(std::span<const std::size_t> indices) const {
  RatMatrix out(indices.size(), cols_);
  for (std::size_t i = 0; i < indices.size(); ++i)
    for (std::size_t c = 0; c < cols_; ++c) out(i, c) = (*this)(indices[i], c);
  return out;
}

RatVector RatMatrix::multiply(std::span<const Rational> x) const {
  if (x.size() != cols_) throw std::invalid_argument("dimension mismatch in multiply");
  RatVector y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) acc += (*this)(r, c) * x[c];
    y[r] = acc;
  }
  return y;
}

std::size_t rank(const RatMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  IntMatrix a = to_integer_rows(m);
  return bareiss(a, m.cols()).size();
}

RatVector solve_square(const RatMatrix& m, std::span<const Rational> rhs) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("solve_square requires a square matrix");
  if (rhs.size() != n) throw std::invalid_argument("rhs length mismatch");
  RatMatrix aug(n, n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n) = rhs[r];
  }
  IntMatrix a = to_integer_rows(aug);
  if (bareiss(a, n).size() < n) throw SingularMatrix();
  RatVector x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational acc(a[i][n]);
    for (std::size_t j = i + 1; j < n; ++j) acc -= Rational(a[i][j]) * x[j];
    x[i] = acc / Rational(a[i][i]);
  }
  return x;
}

std::optional<RatVector> nullspace_vector(const RatMatrix& m) {
  // Gauss-Jordan on m^T; a free column of m^T is a dependent row of m.
  RatMatrix a = m.transpose();
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<std::size_t> pivot_col_of_row;
  std::vector<bool> is_pivot(cols, false);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
    const Rational inv = 1 / a(r, c);
    for (std::size_t j = 0; j < cols; ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = 0; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    pivot_col_of_row.push_back(c);
    is_pivot[c] = true;
    ++r;
  }
  std::size_t free_col = cols;
  for (std::size_t c = 0; c < cols; ++c) {
    if (!is_pivot[c]) {
      free_col = c;
      break;
    }
  }
  if (free_col == cols) return std::nullopt;
  RatVector p(cols);
  p[free_col] = 1;
  for (std::size_t i = 0; i < pivot_col_of_row.size(); ++i) p[pivot_col_of_row[i]] = -a(i, free_col);
  for (const Rational& v : p) {
    if (v != 0) {
      const Rational lead = v;
      for (Rational& e : p) e /= lead;
      break;
    }
  }
  return p;
}

RatVector primitive_integer_scaling(std::span<const Rational> v) {
  RatVector out(v.begin(), v.end());
  mpz_class l = lcm_of_denominators(v);
  mpz_class g = 0;
  for (const Rational& e : v) {
    mpz_class n = e.get_num() * (l / e.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  if (g == 0) return out;
  Rational scale(l, g);
  scale.canonicalize();
  for (Rational& e : out) e *= scale;
  return out;
}

}  // namespace idealpack

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

// Mixed-binary linear programs with exact rational data.

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "idealpack/packing.hpp"
#include "idealpack/rational.hpp"

namespace idealpack {

enum class VarKind { continuous, binary };
enum class Sense { le, ge, eq };
enum class FormulationKind { su, ru, sbl, sbm, generic };

std::string to_string(FormulationKind kind);
FormulationKind parse_formulation_kind(const std::string& text);
std::string to_string(Sense sense);

struct Variable {
  std::string name;
  VarKind kind = VarKind::continuous;
  std::optional<Rational> lower;
  std::optional<Rational> upper;
  std::optional<Rational> priority;

  // Binaries report their implicit [0, 1] box.
  std::optional<Rational> effective_lower() const;
  std::optional<Rational> effective_upper() const;
};

struct Term {
  std::size_t var = 0;
  Rational coef;
  bool operator==(const Term&) const = default;
};

// Constraint family plus 1-based object ids and an optional axis, e.g.
// lb_1_2_x or mccor3_1_2.
struct RowTag {
  std::string family;
  std::vector<int> ids;
  std::optional<Axis> axis;

  std::string name() const;
  bool operator==(const RowTag&) const = default;
};

struct LinearRow {
  std::vector<Term> terms;  // sorted by variable, no zero coefficients
  Sense sense = Sense::ge;
  Rational rhs;
  RowTag tag;

  Rational activity(std::span<const Rational> x) const;
  bool satisfied_by(std::span<const Rational> x) const;
  bool tight_at(std::span<const Rational> x) const;
  bool operator==(const LinearRow&) const = default;
};

// Accumulates coefficients and an affine constant.
class LinearExpr {
 public:
  LinearExpr() = default;
  explicit LinearExpr(Rational constant) : constant_(std::move(constant)) {}

  LinearExpr& add(std::size_t var, const Rational& coef);
  LinearExpr& add(const LinearExpr& other, const Rational& scale = 1);
  LinearExpr& add_constant(const Rational& value);

  const Rational& constant() const { return constant_; }
  std::vector<Term> terms() const;
  Rational coefficient(std::size_t var) const;
  Rational evaluate(std::span<const Rational> x) const;

 private:
  std::map<std::size_t, Rational> coefs_;
  Rational constant_ = 0;
};

struct FormulationOptions {
  bool static_bounds = false;
  bool sequence_pair = false;
  bool branch_priorities = false;
};

class MBLPModel {
 public:
  FormulationKind kind = FormulationKind::generic;
  FormulationOptions options;
  bool minimize = true;

  std::size_t add_variable(Variable v);
  // Moves the affine constant of `expr` to the right-hand side. Rows whose
  // coefficients all vanish are rejected.
  std::size_t add_row(const LinearExpr& expr, Sense sense, const Rational& rhs, RowTag tag);
  void set_objective(const LinearExpr& expr, bool minimize_objective);

  const std::vector<Variable>& variables() const { return variables_; }
  std::vector<Variable>& variables() { return variables_; }
  const std::vector<LinearRow>& rows() const { return rows_; }
  const std::vector<Term>& objective() const { return objective_; }
  const Rational& objective_constant() const { return objective_constant_; }

  std::size_t num_variables() const { return variables_.size(); }
  std::optional<std::size_t> find_variable(const std::string& name) const;
  std::size_t variable(const std::string& name) const;
  std::optional<std::size_t> find_row(const std::string& tag_name) const;
  std::vector<std::size_t> binary_indices() const;
  std::size_t count_family(const std::string& family) const;

  Rational objective_value(std::span<const Rational> x) const;
  // Exact check of rows, bounds and integrality.
  bool is_feasible(std::span<const Rational> x) const;

 private:
  std::vector<Variable> variables_;
  std::vector<LinearRow> rows_;
  std::vector<Term> objective_;
  Rational objective_constant_ = 0;
  std::unordered_map<std::string, std::size_t> by_name_;
};

}  // namespace idealpack

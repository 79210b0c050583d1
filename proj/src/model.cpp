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

#include "idealpack/model.hpp"

#include <stdexcept>

namespace idealpack {

std::string to_string(FormulationKind kind) {
  switch (kind) {
    case FormulationKind::su: return "su";
    case FormulationKind::ru: return "ru";
    case FormulationKind::sbl: return "sbl";
    case FormulationKind::sbm: return "sbm";
    case FormulationKind::generic: return "generic";
  }
  return "generic";
}

FormulationKind parse_formulation_kind(const std::string& text) {
  if (text == "su") return FormulationKind::su;
  if (text == "ru") return FormulationKind::ru;
  if (text == "sbl" || text == "sb-l") return FormulationKind::sbl;
  if (text == "sbm" || text == "sb-m") return FormulationKind::sbm;
  throw std::invalid_argument("unknown formulation '" + text + "' (expected su, ru, sbl or sbm)");
}

std::string to_string(Sense sense) {
  switch (sense) {
    case Sense::le: return "<=";
    case Sense::ge: return ">=";
    case Sense::eq: return "=";
  }
  return "=";
}

std::optional<Rational> Variable::effective_lower() const {
  if (kind == VarKind::binary) return lower ? *lower : Rational(0);
  return lower;
}

std::optional<Rational> Variable::effective_upper() const {
  if (kind == VarKind::binary) return upper ? *upper : Rational(1);
  return upper;
}

std::string RowTag::name() const {
  std::string out = family;
  for (int id : ids) out += "_" + std::to_string(id);
  if (axis) {
    out += "_";
    out += axis_name(*axis);
  }
  return out;
}

Rational LinearRow::activity(std::span<const Rational> x) const {
  Rational acc = 0;
  for (const Term& t : terms) acc += t.coef * x[t.var];
  return acc;
}

bool LinearRow::satisfied_by(std::span<const Rational> x) const {
  const Rational a = activity(x);
  switch (sense) {
    case Sense::le: return a <= rhs;
    case Sense::ge: return a >= rhs;
    case Sense::eq: return a == rhs;
  }
  return false;
}

bool LinearRow::tight_at(std::span<const Rational> x) const { return activity(x) == rhs; }

LinearExpr& LinearExpr::add(std::size_t var, const Rational& coef) {
  if (coef == 0) return *this;
  auto [it, inserted] = coefs_.try_emplace(var, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second == 0) coefs_.erase(it);
  }
  return *this;
}

LinearExpr& LinearExpr::add(const LinearExpr& other, const Rational& scale) {
  for (const auto& [var, coef] : other.coefs_) add(var, coef * scale);
  constant_ += other.constant_ * scale;
  return *this;
}

LinearExpr& LinearExpr::add_constant(const Rational& value) {
  constant_ += value;
  return *this;
}

std::vector<Term> LinearExpr::terms() const {
  std::vector<Term> out;
  out.reserve(coefs_.size());
  for (const auto& [var, coef] : coefs_) out.push_back({var, coef});
  return out;
}

Rational LinearExpr::coefficient(std::size_t var) const {
  auto it = coefs_.find(var);
  return it == coefs_.end() ? Rational(0) : it->second;
}

Rational LinearExpr::evaluate(std::span<const Rational> x) const {
  Rational acc = constant_;
  for (const auto& [var, coef] : coefs_) acc += coef * x[var];
  return acc;
}

std::size_t MBLPModel::add_variable(Variable v) {
  if (by_name_.contains(v.name)) throw std::invalid_argument("duplicate variable name " + v.name);
  const std::size_t idx = variables_.size();
  by_name_.emplace(v.name, idx);
  variables_.push_back(std::move(v));
  return idx;
}

std::size_t MBLPModel::add_row(const LinearExpr& expr, Sense sense, const Rational& rhs, RowTag tag) {
  LinearRow row;
  row.terms = expr.terms();
  if (row.terms.empty()) throw std::invalid_argument("row " + tag.name() + " has no variables");
  for (const Term& t : row.terms) {
    if (t.var >= variables_.size()) throw std::out_of_range("row " + tag.name() + " uses an undeclared variable");
  }
  row.sense = sense;
  row.rhs = rhs - expr.constant();
  row.tag = std::move(tag);
  rows_.push_back(std::move(row));
  return rows_.size() - 1;
}

void MBLPModel::set_objective(const LinearExpr& expr, bool minimize_objective) {
  objective_ = expr.terms();
  objective_constant_ = expr.constant();
  minimize = minimize_objective;
}

std::optional<std::size_t> MBLPModel::find_variable(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

std::size_t MBLPModel::variable(const std::string& name) const {
  auto idx = find_variable(name);
  if (!idx) throw std::out_of_range("no variable named " + name);
  return *idx;
}

std::optional<std::size_t> MBLPModel::find_row(const std::string& tag_name) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r].tag.name() == tag_name) return r;
  }
  return std::nullopt;
}

std::vector<std::size_t> MBLPModel::binary_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < variables_.size(); ++j) {
    if (variables_[j].kind == VarKind::binary) out.push_back(j);
  }
  return out;
}

std::size_t MBLPModel::count_family(const std::string& family) const {
  std::size_t n = 0;
  for (const LinearRow& r : rows_) n += r.tag.family == family ? 1 : 0;
  return n;
}

Rational MBLPModel::objective_value(std::span<const Rational> x) const {
  Rational acc = objective_constant_;
  for (const Term& t : objective_) acc += t.coef * x[t.var];
  return acc;
}

bool MBLPModel::is_feasible(std::span<const Rational> x) const {
  if (x.size() != variables_.size()) return false;
  for (std::size_t j = 0; j < variables_.size(); ++j) {
    const Variable& v = variables_[j];
    if (auto lo = v.effective_lower(); lo && x[j] < *lo) return false;
    if (auto hi = v.effective_upper(); hi && x[j] > *hi) return false;
    if (v.kind == VarKind::binary && x[j] != 0 && x[j] != 1) return false;
  }
  for (const LinearRow& r : rows_) {
    if (!r.satisfied_by(x)) return false;
  }
  return true;
}

}  // namespace idealpack

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

#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "idealpack/model.hpp"
#include "idealpack/packing.hpp"
#include "idealpack/relaxation.hpp"

namespace idealpack {

class NotDependent : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotDeficient : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Unsupported : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A parameter expression that must be nonzero for some property to hold.
struct SideCondition {
  std::string text;
  std::function<Rational(const DerivedParams&)> value;
};

// Row names are those produced by relax() on a pairwise model of objects 1, 2.
struct CoverFamily {
  FormulationKind kind = FormulationKind::generic;
  std::string label;
  std::vector<std::string> rows;
  std::vector<SideCondition> requires_nonzero;    // for dependence at all
  std::vector<SideCondition> minimal_if_nonzero;  // for minimality
};

std::vector<CoverFamily> known_covers(FormulationKind kind);

struct Circuit {
  std::vector<std::size_t> rows;  // indices into the row list that was searched
  std::vector<std::string> names;
  RatVector multipliers;          // (A_T | b_T)^T p = 0, first entry 1
  bool minimal = false;
};

// Rows as (coefficients | rhs) over `width - 1` variables.
RatMatrix augmented_rows(const std::vector<const LinearRow*>& rows, std::size_t num_vars);

// Throws NotDependent when the rows are linearly independent.
Circuit verify_cover(const RelaxationPolytope& poly, const std::vector<std::string>& row_names);

struct CoverCertificate {
  CoverFamily family;
  bool dependent = false;
  std::optional<Circuit> circuit;
  bool conditions_hold = true;    // every requires_nonzero value is nonzero
  bool expect_minimal = true;     // every minimal_if_nonzero value is nonzero
};

CoverCertificate certify_cover(const CoverFamily& family, const DerivedParams& params);

enum class SeparationMode { subset_search, milp };

struct SeparationOptions {
  SeparationMode mode = SeparationMode::subset_search;
  Rational big_m = 1000;
  std::size_t max_rows = 12;  // subset search only
};

// Minimal dependent subset of the rows of `rows` (each row is (a | b)).
// Throws NotDeficient when the rows are independent.
Circuit separate_circuit(const RatMatrix& rows, const SeparationOptions& options = {});

// Pairwise parameters from interval sampling; `pm` holds (k, l, s) for k != l.
DerivedParams pairwise_params(const std::array<Rational, 4>& lb, const std::array<Rational, 4>& ub,
                              const std::array<Rational, 4>& pm);

}  // namespace idealpack

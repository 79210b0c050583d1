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
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "idealpack/model.hpp"
#include "idealpack/oracle.hpp"
#include "idealpack/rational.hpp"

namespace idealpack {

// Continuous relaxation with every variable bound written out as a row.
// Binary lower bounds are "indic" rows for unary formulations and "dblo"
// rows otherwise, suffixed by the name after its first underscore (or
// ".<name>" when there is none); binary upper bounds ("dbhi") are kept only for the binary
// formulations. Continuous bounds become "lo.<name>" / "hi.<name>".
struct RelaxationPolytope {
  FormulationKind kind = FormulationKind::generic;
  std::vector<Variable> variables;  // bounds already folded into rows
  std::vector<LinearRow> rows;      // inequalities
  std::vector<LinearRow> equalities;
  std::vector<std::size_t> binaries;

  std::size_t dimension() const { return variables.size(); }
  std::optional<std::size_t> find_row(const std::string& name) const;
  std::size_t row(const std::string& name) const;
  // All rows as an LP model with no variable bounds.
  MBLPModel as_model() const;
};

RelaxationPolytope relax(const MBLPModel& model);

class OutOfRange : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Sum of 1 - |2y - 1| over the listed coordinates; each must lie in [0, 1].
Rational penalty(std::span<const Rational> point, std::span<const std::size_t> binaries);

struct ExtremePoint {
  RatVector point;
  std::vector<std::size_t> tight_set;  // inequality rows tight at `point`
  std::vector<std::size_t> basis;      // first independent tight subset found
  Rational penalty;

  bool degenerate() const { return tight_set.size() > basis.size(); }
};

struct EnumerationOptions {
  std::size_t max_dimension = 12;
};

// Visits each vertex once, in order of discovery. Throws TooLarge when the
// dimension exceeds the cap.
void for_each_extreme_point(const RelaxationPolytope& poly, const std::function<void(const ExtremePoint&)>& visit,
                            const EnumerationOptions& options = {});

std::vector<ExtremePoint> enumerate_extreme_points(const RelaxationPolytope& poly,
                                                   const EnumerationOptions& options = {});

}  // namespace idealpack

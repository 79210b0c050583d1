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

#include <optional>

#include "idealpack/formulations.hpp"
#include "idealpack/milp.hpp"

namespace idealpack {

struct StripSolveResult {
  MBLPModel model;
  PackingSolution greedy;
  BnBResult bnb;
  std::optional<PackingSolution> layout;  // from the incumbent
  ValidationReport validation;            // of `layout` against the capped strip
};

// Greedy layout, model build, optional warm start from the greedy layout,
// branch and bound.
StripSolveResult solve_strip(const Instance& inst, FormulationKind kind, const FormulationOptions& formulation,
                             SolveOptions solve, bool warm_start = true);

}  // namespace idealpack

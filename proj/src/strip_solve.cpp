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

#include "idealpack/strip_solve.hpp"

namespace idealpack {

StripSolveResult solve_strip(const Instance& inst, FormulationKind kind, const FormulationOptions& formulation,
                             SolveOptions solve, bool warm_start) {
  StripSolveResult out;
  out.greedy = greedy_initial_layout(inst);
  out.model = build_strip_packing(inst, kind, formulation);
  const Instance capped = strip_instance(inst);
  if (warm_start) solve.warm_start = assignment_from_layout(out.model, capped, out.greedy);
  out.bnb = solve_milp(out.model, solve);
  if (out.bnb.incumbent) {
    out.layout = layout_from_assignment(out.model, capped, *out.bnb.incumbent);
    out.validation = validate_layout(capped, *out.layout);
  }
  return out;
}

}  // namespace idealpack

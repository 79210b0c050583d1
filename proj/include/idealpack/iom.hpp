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
#include <optional>
#include <string>
#include <vector>

#include "idealpack/covers.hpp"
#include "idealpack/milp.hpp"
#include "idealpack/model.hpp"
#include "idealpack/relaxation.hpp"

namespace idealpack {

// Row indices into RelaxationPolytope::rows; equalities never appear.
using CoverSet = std::vector<std::size_t>;

// Resolves row names against the polytope. Equality rows are dropped since
// they are tight everywhere.
CoverSet resolve_cover(const RelaxationPolytope& poly, const std::vector<std::string>& names);

struct IomOptions {
  // Scalar big-M for every tightness row. When unset, each row gets the
  // largest slack it can reach over the variable box implied by the polytope.
  std::optional<Rational> big_m;
  SolveOptions milp;
  bool separate = true;
  SeparationOptions separation;
  std::size_t max_rounds = 200;
};

// Maximize sum(phi) s.t. phi <= 2y, phi <= 2 - 2y, feasibility, the big-M
// tightness mirror, sum(eta) = dim - rank(equalities) and one cardinality cut
// per cover.
struct IomModel {
  MBLPModel model;
  std::vector<std::size_t> x;    // polytope variables, same order
  std::vector<std::size_t> phi;  // one per relaxed binary
  std::vector<std::size_t> eta;  // one per inequality row
  RatVector big_m;               // per inequality row
  std::size_t cover_rows = 0;
};

IomModel build_iom(const RelaxationPolytope& poly, const std::vector<CoverSet>& covers,
                   const IomOptions& options = {});

// Implied [min, max] of each variable over the polytope; nullopt when unbounded.
std::vector<std::pair<std::optional<Rational>, std::optional<Rational>>> implied_box(
    const RelaxationPolytope& poly);

struct IomResult {
  MILPStatus status = MILPStatus::no_solution;
  std::optional<Rational> objective;
  RatVector point;
  std::vector<std::size_t> tight;  // inequality rows with eta = 1
  bool verified_extreme = false;   // rank of tight rows plus equalities is full
  std::size_t rounds = 0;
  std::size_t nodes = 0;
  std::vector<Circuit> added_covers;  // rows index the polytope's inequalities
  RatVector big_m;
};

// Solves the program, adding a separated circuit whenever the tight set it
// returns is rank deficient.
IomResult solve_iom(const RelaxationPolytope& poly, std::vector<CoverSet> covers, const IomOptions& options = {});

}  // namespace idealpack

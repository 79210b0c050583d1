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

// Exact LP-based branch and bound over the binary columns of an MBLPModel.

#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "idealpack/model.hpp"
#include "idealpack/rational.hpp"

namespace idealpack {

enum class NodeOrder { best_bound, depth_first };
enum class BranchRule { most_fractional, priority_then_most_fractional };

std::string to_string(NodeOrder order);
std::string to_string(BranchRule rule);
NodeOrder parse_node_order(const std::string& text);
BranchRule parse_branch_rule(const std::string& text);

struct SolveOptions {
  std::size_t node_limit = 100000;
  BranchRule rule = BranchRule::most_fractional;
  NodeOrder order = NodeOrder::best_bound;
  // Full variable assignment; installed as the first incumbent when feasible.
  std::optional<std::vector<Rational>> warm_start;
  std::optional<double> time_limit_seconds;
  // One JSON object per processed node when set.
  std::ostream* log = nullptr;
};

// bounded: a limit stopped the search with an incumbent in hand.
enum class MILPStatus { optimal, bounded, infeasible, unbounded, no_solution };
std::string to_string(MILPStatus status);

struct BnBResult {
  MILPStatus status = MILPStatus::infeasible;
  std::optional<std::vector<Rational>> incumbent;
  std::optional<Rational> incumbent_objective;  // model sense
  std::optional<Rational> best_bound;           // model sense
  std::size_t node_count = 0;
  std::size_t lp_iterations = 0;
  bool node_limit_reached = false;
  bool time_limit_reached = false;
  bool warm_start_used = false;

  // |incumbent - bound| / max(1, |incumbent|); zero when optimal.
  std::optional<Rational> gap() const;
};

BnBResult solve_milp(const MBLPModel& model, const SolveOptions& options = {});

}  // namespace idealpack

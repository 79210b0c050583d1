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

// CPLEX-style LP text.
//
// Rows whose data all have terminating decimal expansions are written as
// decimals. Any other row (or the objective) is multiplied by the least
// common multiple of its denominators and a "\ scale <name> <factor>" comment
// records the factor. A bound without a terminating expansion becomes a
// scaled one-term row named bound.lo.<var> or bound.hi.<var>. Comments also
// carry the variable order, formulation kind, options and branching
// priorities, so parse_lp_text(export_lp_text(m)) rebuilds m exactly.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "idealpack/model.hpp"

namespace idealpack {

class LpParseError : public std::runtime_error {
 public:
  LpParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

std::string export_lp_text(const MBLPModel& model);

// Reads the dialect written by export_lp_text. Throws LpParseError.
MBLPModel parse_lp_text(std::string_view text);

// Inverse of RowTag::name(): trailing x/y becomes the axis, trailing integers
// the ids, and the rest the family.
RowTag parse_row_tag(const std::string& name);

}  // namespace idealpack

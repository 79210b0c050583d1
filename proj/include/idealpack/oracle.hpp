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

// Minimum strip height by brute force over the disjunction: every choice of
// one separating term per object pair gives an LP over the centers and h.

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "idealpack/packing.hpp"

namespace idealpack {

class TooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleResult {
  std::optional<Rational> height;  // nullopt when no assignment is feasible
  std::optional<PackingSolution> layout;
  std::uint64_t assignments = 0;
  std::uint64_t feasible_assignments = 0;
};

// Centers are boxed by the instance's own region. Throws TooLarge when
// 4^(N choose 2) exceeds `cap`.
OracleResult disjunction_oracle(const Instance& inst, std::uint64_t cap = 4096);

}  // namespace idealpack

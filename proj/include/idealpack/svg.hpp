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

#include <string>

#include "idealpack/packing.hpp"

namespace idealpack {

struct SvgOptions {
  Rational pixels_per_unit = 6;
  bool labels = true;
};

// One <rect class="object"> per object and one <polygon class="clearance"> per
// nonzero clearance side. The y axis points up; the strip's origin is the
// lower-left corner and the drawing height is the larger of the solution
// height and the highest clearance top.
std::string render_svg(const Instance& inst, const PackingSolution& sol, const SvgOptions& options = {});

}  // namespace idealpack

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

#include "idealpack/svg.hpp"

#include <sstream>
#include <stdexcept>

namespace idealpack {
namespace {

// Exact when the value terminates, otherwise six decimals.
std::string coord(const Rational& value) {
  if (is_terminating_decimal(value)) return to_decimal_string(value);
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(6);
  out << value.get_d();
  return out.str();
}

struct Box {
  Rational x0, y0, x1, y1;
};

}  // namespace

std::string render_svg(const Instance& inst, const PackingSolution& sol, const SvgOptions& options) {
  if (sol.centers.size() != inst.size()) throw std::invalid_argument("layout and instance sizes differ");
  const Rational& k = options.pixels_per_unit;
  Rational top = sol.height;
  for (std::size_t i = 0; i < inst.size(); ++i) {
    const Rational t = clearance_top(inst, sol, i);
    if (t > top) top = t;
  }
  const Rational width = inst.region().width;
  auto px = [&](const Rational& x) { return coord(x * k); };
  auto py = [&](const Rational& y) { return coord((top - y) * k); };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << px(width) << "\" height=\"" << coord(top * k)
      << "\" viewBox=\"0 0 " << px(width) << " " << coord(top * k) << "\">\n";
  out << "  <rect class=\"strip\" x=\"0\" y=\"0\" width=\"" << px(width) << "\" height=\"" << coord(top * k)
      << "\" fill=\"white\" stroke=\"black\"/>\n";
  out << "  <line class=\"height\" x1=\"0\" y1=\"" << py(sol.height) << "\" x2=\"" << px(width) << "\" y2=\""
      << py(sol.height) << "\" stroke=\"red\" stroke-dasharray=\"4 2\"/>\n";

  for (std::size_t i = 0; i < inst.size(); ++i) {
    const ObjectSpec& o = inst.object(i);
    const Rational& cx = sol.centers[i][0];
    const Rational& cy = sol.centers[i][1];
    const Box body{cx - o.dims[0] / 2, cy - o.dims[1] / 2, cx + o.dims[0] / 2, cy + o.dims[1] / 2};
    // Sides in clearance order (x-, y-, x+, y+).
    const Box sides[4] = {
        {body.x0 - o.clear[0], body.y0, body.x0, body.y1},
        {body.x0, body.y0 - o.clear[1], body.x1, body.y0},
        {body.x1, body.y0, body.x1 + o.clear[2], body.y1},
        {body.x0, body.y1, body.x1, body.y1 + o.clear[3]},
    };
    static const char* const kSideNames[4] = {"x-", "y-", "x+", "y+"};
    for (int side = 0; side < 4; ++side) {
      if (o.clear[side] == 0) continue;
      const Box& b = sides[side];
      out << "  <polygon class=\"clearance\" data-id=\"" << o.id << "\" data-side=\"" << kSideNames[side]
          << "\" points=\"" << px(b.x0) << "," << py(b.y0) << " " << px(b.x1) << "," << py(b.y0) << " " << px(b.x1)
          << "," << py(b.y1) << " " << px(b.x0) << "," << py(b.y1)
          << "\" fill=\"#9ecae1\" fill-opacity=\"0.5\" stroke=\"none\"/>\n";
    }
    out << "  <rect class=\"object\" data-id=\"" << o.id << "\" x=\"" << px(body.x0) << "\" y=\"" << py(body.y1)
        << "\" width=\"" << px(o.dims[0]) << "\" height=\"" << px(o.dims[1])
        << "\" fill=\"#fdae6b\" stroke=\"black\"/>\n";
    if (options.labels) {
      out << "  <text x=\"" << px(cx) << "\" y=\"" << py(cy)
          << "\" font-size=\"10\" text-anchor=\"middle\" dominant-baseline=\"middle\">" << o.id << "</text>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace idealpack

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

// Documents cross the boundary as JSON text; the Python package decodes them.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "idealpack/formulations.hpp"
#include "idealpack/idealness.hpp"
#include "idealpack/json_io.hpp"
#include "idealpack/lp_format.hpp"
#include "idealpack/oracle.hpp"
#include "idealpack/strip_solve.hpp"
#include "idealpack/svg.hpp"

namespace py = pybind11;
namespace ip = idealpack;

namespace {

ip::Instance instance(const std::string& text) { return ip::instance_from_json(ip::Json::parse(text)); }

ip::DerivedParams pairwise(const std::string& instance_text, const std::string& params_text, bool two_squares) {
  if (two_squares) return ip::DerivedParams::from_instance(ip::two_squares_instance());
  if (!instance_text.empty()) return ip::DerivedParams::from_instance(instance(instance_text));
  if (!params_text.empty()) return ip::params_from_json(ip::Json::parse(params_text));
  throw std::invalid_argument("give an instance, parameters or two_squares=True");
}

std::string generate(std::uint64_t seed, int n, int grid) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  ip::GenConfig cfg;
  cfg.grid_denominator = grid;
  return ip::instance_to_json(ip::generate_instance(seed, n, cfg)).dump();
}

std::string solve(const std::string& inst_text, const std::string& kind, bool sequence_pair, bool branch,
                  bool static_bounds, std::size_t node_limit, bool warm_start) {
  const ip::Instance inst = instance(inst_text);
  ip::FormulationOptions fopts{static_bounds, sequence_pair, branch};
  ip::SolveOptions sopts;
  sopts.node_limit = node_limit;
  if (branch) sopts.rule = ip::BranchRule::priority_then_most_fractional;
  ip::StripSolveResult r;
  {
    py::gil_scoped_release release;
    r = ip::solve_strip(inst, ip::parse_formulation_kind(kind), fopts, sopts, warm_start);
  }
  ip::Json doc = {{"formulation", kind},
                  {"greedy_height", ip::rational_json(r.greedy.height)},
                  {"result", ip::bnb_to_json(r.bnb)},
                  {"layout", r.layout ? ip::solution_to_json(*r.layout) : ip::Json(nullptr)},
                  {"validation", r.layout ? ip::validation_to_json(r.validation) : ip::Json(nullptr)}};
  return doc.dump();
}

std::string check_ideal(const std::string& kind, const std::string& mode, const std::string& inst_text,
                        const std::string& params_text, bool two_squares) {
  const ip::FormulationKind k = ip::parse_formulation_kind(kind);
  const ip::DerivedParams p = pairwise(inst_text, params_text, two_squares);
  py::gil_scoped_release release;
  if (mode == "enumeration") return ip::idealness_to_json(ip::check_pairwise_ideal(k, p)).dump();
  if (mode == "iom") return ip::idealness_to_json(ip::check_pairwise_ideal_iom(k, p)).dump();
  throw std::invalid_argument("mode must be 'enumeration' or 'iom'");
}

std::string campaign(const std::string& kind, std::size_t samples, std::uint64_t seed, const std::string& epsilon,
                     int grid, bool boundary) {
  ip::CampaignConfig cfg;
  cfg.samples = samples;
  cfg.seed = seed;
  cfg.sampling.epsilon = ip::parse_rational(epsilon);
  cfg.sampling.grid_denominator = grid;
  cfg.sampling.boundary = boundary;
  const ip::FormulationKind k = ip::parse_formulation_kind(kind);
  py::gil_scoped_release release;
  return ip::campaign_to_json(ip::parametric_campaign(k, cfg)).dump();
}

std::string oracle(const std::string& inst_text) {
  return ip::oracle_to_json(ip::disjunction_oracle(instance(inst_text))).dump();
}

std::string export_lp(const std::string& inst_text, const std::string& kind, bool sequence_pair, bool branch,
                      bool static_bounds) {
  ip::FormulationOptions fopts{static_bounds, sequence_pair, branch};
  return ip::export_lp_text(ip::build_strip_packing(instance(inst_text), ip::parse_formulation_kind(kind), fopts));
}

std::string render(const std::string& inst_text, const std::string& layout_text, const std::string& scale) {
  const ip::Instance inst = instance(inst_text);
  const ip::PackingSolution sol = layout_text.empty() ? ip::greedy_initial_layout(inst)
                                                      : ip::solution_from_json(ip::Json::parse(layout_text));
  ip::SvgOptions opts;
  opts.pixels_per_unit = ip::parse_rational(scale);
  return ip::render_svg(inst, sol, opts);
}

py::dict family_counts(const std::string& kind) {
  const ip::MBLPModel m = ip::build_formulation(ip::parse_formulation_kind(kind),
                                                ip::DerivedParams::from_instance(ip::two_squares_instance()));
  const ip::FamilyCounts c = ip::family_counts(m);
  py::dict out;
  out["precedence"] = c.precedence;
  out["bounds"] = c.bounds;
  out["logic"] = c.logic;
  out["binaries"] = c.binaries;
  out["continuous_aux"] = c.continuous_aux;
  return out;
}

}  // namespace

PYBIND11_MODULE(_idealpack, m) {
  m.doc() = "Exact strip packing formulations and pairwise idealness checks";
  py::register_exception<ip::JsonFormatError>(m, "JsonFormatError", PyExc_ValueError);
  py::register_exception<ip::InvalidInstance>(m, "InvalidInstance", PyExc_ValueError);
  py::register_exception<ip::TooLarge>(m, "TooLarge", PyExc_RuntimeError);

  m.def("generate_instance", &generate, py::arg("seed"), py::arg("n"), py::arg("grid") = 1);
  m.def("solve", &solve, py::arg("instance"), py::arg("formulation") = "su", py::arg("sequence_pair") = false,
        py::arg("branch") = false, py::arg("static_bounds") = false, py::arg("node_limit") = 100000,
        py::arg("warm_start") = true);
  m.def("check_ideal", &check_ideal, py::arg("kind"), py::arg("mode") = "enumeration", py::arg("instance") = "",
        py::arg("params") = "", py::arg("two_squares") = false);
  m.def("campaign", &campaign, py::arg("kind"), py::arg("samples") = 100, py::arg("seed") = 1,
        py::arg("epsilon") = "1", py::arg("grid") = 4, py::arg("boundary") = false);
  m.def("oracle", &oracle, py::arg("instance"));
  m.def("export_lp", &export_lp, py::arg("instance"), py::arg("formulation") = "su",
        py::arg("sequence_pair") = false, py::arg("branch") = false, py::arg("static_bounds") = false);
  m.def("render_svg", &render, py::arg("instance"), py::arg("layout") = "", py::arg("scale") = "6");
  m.def("family_counts", &family_counts, py::arg("kind"));
}

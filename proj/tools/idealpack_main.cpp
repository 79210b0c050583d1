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

// idealpack command-line tool.
//
// Exit codes: 0 success or ideal, 1 hard error, 2 fractional vertex found,
// 3 a node or time limit stopped the search.

#include <CLI11.hpp>
#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "idealpack/covers.hpp"
#include "idealpack/formulations.hpp"
#include "idealpack/idealness.hpp"
#include "idealpack/json_io.hpp"
#include "idealpack/lp_format.hpp"
#include "idealpack/oracle.hpp"
#include "idealpack/strip_solve.hpp"
#include "idealpack/svg.hpp"

namespace ip = idealpack;
namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitWitness = 2;
constexpr int kExitLimit = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// JSON config files. Top-level keys are global options; an object under a
// subcommand's name holds that subcommand's options.
class JsonConfig : public CLI::Config {
 public:
  std::string to_config(const CLI::App* app, bool default_also, bool, std::string) const override {
    return ip::to_text(dump(app, default_also));
  }

  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    ip::Json doc;
    try {
      doc = ip::Json::parse(input);
    } catch (const ip::Json::parse_error& e) {
      throw CLI::ConversionError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw CLI::ConversionError("config must be a JSON object");
    std::vector<CLI::ConfigItem> items;
    collect(doc, {}, items);
    return items;
  }

 private:
  static std::string scalar(const ip::Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    return v.dump();
  }

  static void collect(const ip::Json& obj, const std::vector<std::string>& parents,
                      std::vector<CLI::ConfigItem>& items) {
    for (const auto& [key, value] : obj.items()) {
      if (value.is_null()) continue;
      if (value.is_object()) {
        std::vector<std::string> next = parents;
        next.push_back(key);
        collect(value, next, items);
        continue;
      }
      CLI::ConfigItem item;
      item.parents = parents;
      item.name = key;
      if (value.is_array()) {
        for (const ip::Json& v : value) item.inputs.push_back(scalar(v));
      } else {
        item.inputs.push_back(scalar(value));
      }
      items.push_back(std::move(item));
    }
  }

  static ip::Json dump(const CLI::App* app, bool default_also) {
    ip::Json out = ip::Json::object();
    for (const CLI::Option* opt : app->get_options()) {
      if (opt->get_lnames().empty() || opt->get_lnames().front() == "help" || !opt->get_configurable()) continue;
      const std::string name = opt->get_lnames().front();
      if (opt->count() > 0) {
        const auto& results = opt->results();
        out[name] = results.size() == 1 ? ip::Json(results.front()) : ip::Json(results);
      } else if (default_also && !opt->get_default_str().empty()) {
        out[name] = opt->get_default_str();
      }
    }
    for (const CLI::App* sub : app->get_subcommands({})) {
      ip::Json inner = dump(sub, default_also);
      if (!inner.empty()) out[sub->get_name()] = std::move(inner);
    }
    return out;
  }
};

// Writes to a sibling temporary file and renames it over the target.
void write_atomic(const std::string& path, const std::string& text) {
  const fs::path target(path);
  const fs::path tmp = target.string() + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << text;
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw std::runtime_error("cannot move output into place at " + path + ": " + ec.message());
  }
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    write_atomic(path, text);
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ip::Json read_json(const std::string& path) {
  try {
    return ip::Json::parse(read_file(path));
  } catch (const ip::Json::parse_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

ip::Instance read_instance(const std::string& path) { return ip::instance_from_json(read_json(path)); }

ip::FormulationKind formulation(const std::string& text) { return ip::parse_formulation_kind(text); }

std::string point_text(const ip::RatVector& p) {
  std::string out = "(";
  for (std::size_t j = 0; j < p.size(); ++j) out += (j ? ", " : "") + ip::to_string(p[j]);
  return out + ")";
}

const std::vector<std::string> kKindNames = {"su", "ru", "sbl", "sbm"};

// ---------------------------------------------------------------- generate

struct GenerateArgs {
  int objects = 0;
  std::uint64_t seed = 1;
  int grid = 1;
  std::string width = "100";
  double clearance_probability = 0.5;
  std::string out;
};

int run_generate(const GenerateArgs& a) {
  if (a.objects < 1) throw UsageError("--objects must be at least 1");
  if (a.grid < 1) throw UsageError("--grid must be at least 1");
  ip::GenConfig cfg;
  cfg.strip_width = ip::parse_rational(a.width);
  cfg.grid_denominator = a.grid;
  cfg.clearance_probability = a.clearance_probability;
  const ip::Instance inst = ip::generate_instance(a.seed, a.objects, cfg);
  emit(a.out, ip::to_text(ip::instance_to_json(inst)));

  ip::Rational lo[2] = {inst.object(0).dims[0], inst.object(0).dims[1]};
  ip::Rational hi[2] = {lo[0], lo[1]};
  std::size_t clearances = 0;
  for (const ip::ObjectSpec& o : inst.objects()) {
    for (int s = 0; s < 2; ++s) {
      if (o.dims[s] < lo[s]) lo[s] = o.dims[s];
      if (o.dims[s] > hi[s]) hi[s] = o.dims[s];
    }
    for (const ip::Rational& c : o.clear) clearances += c != 0 ? 1 : 0;
  }
  std::cerr << "generated " << inst.size() << " objects in a strip of width " << ip::to_string(inst.region().width)
            << "; dx in [" << ip::to_string(lo[0]) << ", " << ip::to_string(hi[0]) << "], dy in ["
            << ip::to_string(lo[1]) << ", " << ip::to_string(hi[1]) << "], " << clearances
            << " nonzero clearances\n";
  return kExitOk;
}

// ------------------------------------------------------------------- solve

struct SolveArgs {
  std::string instance;
  std::string formulation = "su";
  bool sequence_pair = false;
  bool branch = false;
  bool static_bounds = false;
  std::size_t node_limit = 100000;
  double time_limit = 0;
  std::string order = "best-bound";
  bool no_warm_start = false;
  std::string out;
  std::string log;
  std::string render;
  std::string export_lp;
  std::string model_json;
};

int run_solve(const SolveArgs& a) {
  const ip::Instance inst = read_instance(a.instance);
  const ip::FormulationKind kind = formulation(a.formulation);
  ip::FormulationOptions fopts;
  fopts.sequence_pair = a.sequence_pair;
  fopts.branch_priorities = a.branch;
  fopts.static_bounds = a.static_bounds;
  ip::SolveOptions sopts;
  sopts.node_limit = a.node_limit;
  sopts.order = ip::parse_node_order(a.order);
  if (a.branch) sopts.rule = ip::BranchRule::priority_then_most_fractional;
  if (a.time_limit > 0) sopts.time_limit_seconds = a.time_limit;

  std::ostringstream log;
  if (!a.log.empty()) sopts.log = &log;
  const ip::StripSolveResult r = ip::solve_strip(inst, kind, fopts, sopts, !a.no_warm_start);

  if (!a.log.empty()) write_atomic(a.log, log.str());
  if (!a.export_lp.empty()) write_atomic(a.export_lp, ip::export_lp_text(r.model));
  if (!a.model_json.empty()) write_atomic(a.model_json, ip::to_text(ip::model_to_json(r.model)));
  if (!a.render.empty() && r.layout) write_atomic(a.render, ip::render_svg(inst, *r.layout));

  ip::Json doc = {{"command", "solve"},
                  {"instance", a.instance},
                  {"objects", inst.size()},
                  {"formulation", ip::to_string(kind)},
                  {"options",
                   {{"static_bounds", fopts.static_bounds},
                    {"sequence_pair", fopts.sequence_pair},
                    {"branch_priorities", fopts.branch_priorities},
                    {"node_limit", a.node_limit},
                    {"node_order", ip::to_string(sopts.order)},
                    {"warm_start", !a.no_warm_start}}},
                  {"variables", r.model.num_variables()},
                  {"rows", r.model.rows().size()},
                  {"greedy_height", ip::rational_json(r.greedy.height)},
                  {"result", ip::bnb_to_json(r.bnb)},
                  {"layout", r.layout ? ip::solution_to_json(*r.layout) : ip::Json(nullptr)},
                  {"validation", r.layout ? ip::validation_to_json(r.validation) : ip::Json(nullptr)}};
  emit(a.out, ip::to_text(doc));

  std::cerr << ip::to_string(kind) << ": " << ip::to_string(r.bnb.status);
  if (r.bnb.incumbent_objective) std::cerr << ", h = " << ip::to_string(*r.bnb.incumbent_objective);
  std::cerr << ", greedy h = " << ip::to_string(r.greedy.height) << ", nodes " << r.bnb.node_count;
  if (const auto gap = r.bnb.gap()) std::cerr << ", gap " << ip::to_string(*gap);
  std::cerr << "\n";

  if (r.layout && !r.validation.ok()) {
    std::cerr << "error: incumbent layout fails validation\n";
    return kExitError;
  }
  switch (r.bnb.status) {
    case ip::MILPStatus::optimal: return kExitOk;
    case ip::MILPStatus::bounded:
    case ip::MILPStatus::no_solution: return kExitLimit;
    case ip::MILPStatus::infeasible:
    case ip::MILPStatus::unbounded: return kExitError;
  }
  return kExitError;
}

// ------------------------------------------------------------- check-ideal

struct CheckArgs {
  std::string kind = "sbl";
  std::string mode = "enumeration";
  bool two_squares = false;
  std::string instance;
  std::string params;
  std::size_t campaign = 0;
  std::size_t samples = 500;
  std::string epsilon = "1";
  std::string region = "10";
  int grid = 4;
  std::uint64_t seed = 1;
  bool boundary = false;
  std::string big_m;
  std::string separation = "subset";
  std::size_t node_limit = 100000;
  std::string out;
};

int run_check_ideal(const CheckArgs& a) {
  const ip::FormulationKind kind = formulation(a.kind);
  const std::string mode = a.campaign > 0 ? "campaign" : a.mode;
  if (mode == "campaign") {
    ip::CampaignConfig cfg;
    cfg.samples = a.campaign > 0 ? a.campaign : a.samples;
    cfg.seed = a.seed;
    cfg.sampling.epsilon = ip::parse_rational(a.epsilon);
    cfg.sampling.region = ip::parse_rational(a.region);
    cfg.sampling.grid_denominator = a.grid;
    cfg.sampling.boundary = a.boundary;
    const ip::CampaignReport rep = ip::parametric_campaign(kind, cfg);
    emit(a.out, ip::to_text(ip::campaign_to_json(rep)));
    std::cerr << ip::to_string(kind) << " campaign: " << rep.samples << " samples, " << rep.fractional_samples
              << " with fractional vertices, " << rep.vertices << " vertices (" << rep.degenerate_vertices
              << " degenerate), " << rep.non_minimal_cover_samples << " samples with non-minimal covers\n";
    if (!rep.witnesses.empty()) {
      const auto& w = rep.witnesses.front();
      std::cerr << "first witness: penalty " << ip::to_string(w.max_penalty) << " at " << point_text(w.witness->point)
                << "\n";
    }
    return rep.fractional_samples == 0 ? kExitOk : kExitWitness;
  }

  const int sources = (a.two_squares ? 1 : 0) + (a.instance.empty() ? 0 : 1) + (a.params.empty() ? 0 : 1);
  if (sources != 1) throw UsageError("give exactly one of --two-squares, --instance or --params");
  std::string label;
  ip::DerivedParams params;
  if (a.two_squares) {
    params = ip::DerivedParams::from_instance(ip::two_squares_instance());
    label = "two-squares";
  } else if (!a.instance.empty()) {
    params = ip::DerivedParams::from_instance(read_instance(a.instance));
    label = a.instance;
  } else {
    params = ip::params_from_json(read_json(a.params));
    label = a.params;
  }

  ip::IdealnessReport rep;
  if (mode == "enumeration") {
    rep = ip::check_pairwise_ideal(kind, params);
  } else if (mode == "iom") {
    ip::IomOptions opts;
    if (!a.big_m.empty()) opts.big_m = ip::parse_rational(a.big_m);
    opts.separation.mode = a.separation == "milp" ? ip::SeparationMode::milp : ip::SeparationMode::subset_search;
    opts.milp.node_limit = a.node_limit;
    rep = ip::check_pairwise_ideal_iom(kind, params, opts);
  } else {
    throw UsageError("unknown mode '" + mode + "'");
  }
  emit(a.out, ip::to_text(ip::idealness_to_json(rep)));
  std::cerr << ip::to_string(kind) << " " << label << " (" << ip::to_string(rep.method)
            << "): " << ip::to_string(rep.verdict) << ", max penalty " << ip::to_string(rep.max_penalty);
  if (rep.method == ip::IdealnessMethod::enumeration) {
    std::cerr << ", " << rep.vertex_count << " vertices, " << rep.fractional_count << " fractional";
  }
  if (rep.witness) std::cerr << ", witness " << point_text(rep.witness->point);
  std::cerr << "\n";
  if (rep.iom && rep.iom->status != ip::MILPStatus::optimal) return kExitLimit;
  return rep.verdict == ip::Verdict::ideal ? kExitOk : kExitWitness;
}

// ----------------------------------------------------------- verify-lemmas

struct LemmaArgs {
  std::string kind = "all";
  std::size_t draws = 100;
  std::uint64_t seed = 1;
  std::string out;
};

int run_verify_lemmas(const LemmaArgs& a) {
  std::vector<ip::FormulationKind> kinds;
  if (a.kind == "all") {
    kinds = {ip::FormulationKind::su, ip::FormulationKind::ru, ip::FormulationKind::sbm};
  } else {
    kinds = {formulation(a.kind)};
  }
  ip::Json families = ip::Json::array();
  bool all_ok = true;
  for (ip::FormulationKind kind : kinds) {
    for (const ip::FamilyTally& t : ip::tally_cover_families(kind, a.draws, a.seed)) {
      all_ok &= t.ok();
      std::cout << (t.ok() ? "ok   " : "FAIL ") << t.family.label << ": dependent " << t.dependent << "/" << t.draws
                << ", minimal " << t.minimal << "/" << t.dependent;
      if (t.conditions_held < t.draws) {
        std::cout << ", side condition zero on " << (t.draws - t.conditions_held) << " draws";
      }
      if (t.dependence_failures) std::cout << ", " << t.dependence_failures << " unexpected independent draws";
      if (t.minimality_mismatches) std::cout << ", " << t.minimality_mismatches << " minimality mismatches";
      std::cout << "\n";
      families.push_back({{"family", t.family.label},
                          {"kind", ip::to_string(kind)},
                          {"draws", t.draws},
                          {"conditions_held", t.conditions_held},
                          {"dependent", t.dependent},
                          {"minimal", t.minimal},
                          {"expected_minimal", t.expected_minimal},
                          {"dependence_failures", t.dependence_failures},
                          {"minimality_mismatches", t.minimality_mismatches},
                          {"ok", t.ok()},
                          {"example", t.example ? ip::certificate_to_json(*t.example, t.example_params)
                                                : ip::Json(nullptr)},
                          {"example_params", t.example ? ip::params_to_json(t.example_params) : ip::Json(nullptr)}});
    }
  }
  if (!a.out.empty()) {
    write_atomic(a.out, ip::to_text({{"command", "verify-lemmas"},
                                     {"draws", a.draws},
                                     {"seed", a.seed},
                                     {"ok", all_ok},
                                     {"families", std::move(families)}}));
  }
  return all_ok ? kExitOk : kExitError;
}

// ---------------------------------------------------------- oracle-compare

struct CompareArgs {
  std::string instance;
  int objects = 0;
  std::uint64_t seed = 1;
  std::vector<std::string> formulations = kKindNames;
  std::size_t node_limit = 100000;
  std::uint64_t cap = 4096;
  std::string out;
};

int run_oracle_compare(const CompareArgs& a) {
  if (a.instance.empty() == (a.objects == 0)) throw UsageError("give exactly one of --instance or --objects");
  const ip::Instance inst = a.instance.empty() ? ip::generate_instance(a.seed, a.objects) : read_instance(a.instance);
  const ip::OracleResult oracle = ip::disjunction_oracle(inst, a.cap);
  ip::Json runs = ip::Json::array();
  bool agree = true;
  bool limited = false;
  std::cerr << "oracle: h = " << (oracle.height ? ip::to_string(*oracle.height) : "infeasible") << " over "
            << oracle.assignments << " assignments\n";
  for (const std::string& name : a.formulations) {
    const ip::FormulationKind kind = formulation(name);
    ip::SolveOptions sopts;
    sopts.node_limit = a.node_limit;
    const ip::StripSolveResult r = ip::solve_strip(inst, kind, {}, sopts);
    const bool optimal = r.bnb.status == ip::MILPStatus::optimal;
    const bool match = optimal && oracle.height && r.bnb.incumbent_objective == oracle.height;
    limited |= !optimal && (r.bnb.node_limit_reached || r.bnb.time_limit_reached);
    if (optimal && !match) agree = false;
    std::cerr << ip::to_string(kind) << ": "
              << (r.bnb.incumbent_objective ? ip::to_string(*r.bnb.incumbent_objective) : "none") << " ("
              << ip::to_string(r.bnb.status) << ", " << r.bnb.node_count << " nodes) "
              << (match ? "matches" : "differs") << "\n";
    runs.push_back({{"formulation", ip::to_string(kind)}, {"result", ip::bnb_to_json(r.bnb)}, {"matches", match}});
  }
  emit(a.out, ip::to_text({{"command", "oracle-compare"},
                           {"instance", ip::instance_to_json(inst)},
                           {"oracle", ip::oracle_to_json(oracle)},
                           {"runs", std::move(runs)},
                           {"agree", agree && !limited}}));
  if (!agree) return kExitError;
  return limited ? kExitLimit : kExitOk;
}

// ------------------------------------------------------------------ render

struct RenderArgs {
  std::string instance;
  std::string layout;
  std::string scale = "6";
  bool no_labels = false;
  std::string out;
};

int run_render(const RenderArgs& a) {
  const ip::Instance inst = read_instance(a.instance);
  ip::PackingSolution sol;
  if (a.layout.empty()) {
    sol = ip::greedy_initial_layout(inst);
  } else {
    const ip::Json doc = read_json(a.layout);
    // Accepts a bare layout or a solve result that carries one.
    const ip::Json& layout = doc.contains("layout") ? doc.at("layout") : doc;
    if (layout.is_null()) throw std::runtime_error(a.layout + " holds no layout");
    sol = ip::solution_from_json(layout);
  }
  ip::SvgOptions opts;
  opts.pixels_per_unit = ip::parse_rational(a.scale);
  if (opts.pixels_per_unit <= 0) throw UsageError("--scale must be positive");
  opts.labels = !a.no_labels;
  emit(a.out, ip::render_svg(inst, sol, opts));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact strip packing formulations and pairwise idealness checks"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "JSON file with option values; command-line flags take precedence");
  app.config_formatter(std::make_shared<JsonConfig>());
  app.footer("Exit codes: 0 ok or ideal, 1 error, 2 fractional vertex found, 3 node or time limit reached.");

  const auto kinds = CLI::IsMember(kKindNames);

  GenerateArgs gen;
  CLI::App* g = app.add_subcommand("generate", "Generate a random strip packing instance");
  g->add_option("-n,--objects", gen.objects, "Number of objects")->required();
  g->add_option("--seed", gen.seed, "Random seed")->capture_default_str();
  g->add_option("--grid", gen.grid, "Round lengths to multiples of 1/GRID")->capture_default_str();
  g->add_option("--width", gen.width, "Strip width")->capture_default_str();
  g->add_option("--clearance-probability", gen.clearance_probability, "Chance that a side gets a clearance")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));
  g->add_option("-o,--out", gen.out, "Instance JSON path (stdout when omitted)");

  SolveArgs solve;
  CLI::App* s = app.add_subcommand("solve", "Solve the strip packing problem by branch and bound");
  s->add_option("-i,--instance", solve.instance, "Instance JSON")->required()->check(CLI::ExistingFile);
  s->add_option("-f,--formulation", solve.formulation, "Formulation")->check(kinds)->capture_default_str();
  s->add_flag("--seq", solve.sequence_pair, "Add sequence-pair rows");
  s->add_flag("--branch", solve.branch, "Use branching priorities");
  s->add_flag("--static-bounds", solve.static_bounds, "Replace the first two row families with static bounds");
  s->add_option("--node-limit", solve.node_limit, "Maximum number of nodes")->capture_default_str();
  s->add_option("--time-limit", solve.time_limit, "Wall-clock limit in seconds (0 for none)");
  s->add_option("--order", solve.order, "Node selection")
      ->check(CLI::IsMember({"best-bound", "depth-first"}))
      ->capture_default_str();
  s->add_flag("--no-warm-start", solve.no_warm_start, "Do not start from the greedy layout");
  s->add_option("-o,--out", solve.out, "Result JSON path (stdout when omitted)");
  s->add_option("--log", solve.log, "JSON-lines node log path");
  s->add_option("--render", solve.render, "SVG path for the final layout");
  s->add_option("--export-lp", solve.export_lp, "LP text path for the model");
  s->add_option("--model-json", solve.model_json, "JSON path for the model");

  CheckArgs check;
  CLI::App* c = app.add_subcommand("check-ideal", "Check whether a pairwise relaxation has fractional vertices");
  c->add_option("-k,--kind,-f,--formulation", check.kind, "Formulation")->check(kinds)->capture_default_str();
  c->add_option("--mode", check.mode, "enumeration, iom or campaign")
      ->check(CLI::IsMember({"enumeration", "iom", "campaign"}))
      ->capture_default_str();
  c->add_flag("--two-squares", check.two_squares, "Use two 2x2 objects in a 10x10 region");
  c->add_option("-i,--instance", check.instance, "Two-object instance JSON")->check(CLI::ExistingFile);
  c->add_option("--params", check.params, "Parameter JSON with LB, UB and PM")->check(CLI::ExistingFile);
  c->add_option("--campaign", check.campaign, "Run a sampling campaign with this many samples");
  c->add_option("--samples", check.samples, "Campaign samples")->capture_default_str();
  c->add_option("--eps", check.epsilon, "Campaign margin epsilon")->capture_default_str();
  c->add_option("--region", check.region, "Campaign region size")->capture_default_str();
  c->add_option("--grid", check.grid, "Campaign grid denominator")->capture_default_str()->check(CLI::PositiveNumber);
  c->add_option("--seed", check.seed, "Campaign seed")->capture_default_str();
  c->add_flag("--boundary", check.boundary, "Campaign with PM = UB - LB exactly");
  c->add_option("--big-m", check.big_m, "Scalar big-M for the IOM tightness rows");
  c->add_option("--separation", check.separation, "Circuit separation: subset or milp")
      ->check(CLI::IsMember({"subset", "milp"}))
      ->capture_default_str();
  c->add_option("--node-limit", check.node_limit, "IOM node limit")->capture_default_str();
  c->add_option("-o,--out", check.out, "Report JSON path (stdout when omitted)");

  LemmaArgs lemmas;
  CLI::App* v = app.add_subcommand("verify-lemmas", "Certify the catalogued dependence covers on random parameters");
  v->add_option("-k,--kind,-f,--formulation", lemmas.kind, "su, ru, sbm or all")
      ->check(CLI::IsMember({"su", "ru", "sbm", "all"}))
      ->capture_default_str();
  v->add_option("--draws", lemmas.draws, "Random parameter draws per family")->capture_default_str();
  v->add_option("--seed", lemmas.seed, "Random seed")->capture_default_str();
  v->add_option("-o,--out", lemmas.out, "Certificate JSON path");

  CompareArgs compare;
  CLI::App* o = app.add_subcommand("oracle-compare", "Compare branch and bound against disjunct enumeration");
  o->add_option("-i,--instance", compare.instance, "Instance JSON")->check(CLI::ExistingFile);
  o->add_option("-n,--objects", compare.objects, "Generate an instance with this many objects");
  o->add_option("--seed", compare.seed, "Generator seed")->capture_default_str();
  o->add_option("-f,--formulations", compare.formulations, "Formulations to run")->check(kinds);
  o->add_option("--node-limit", compare.node_limit, "Maximum nodes per solve")->capture_default_str();
  o->add_option("--cap", compare.cap, "Largest number of disjunct assignments to enumerate")->capture_default_str();
  o->add_option("-o,--out", compare.out, "Report JSON path (stdout when omitted)");

  RenderArgs render;
  CLI::App* r = app.add_subcommand("render", "Draw a layout as SVG");
  r->add_option("-i,--instance", render.instance, "Instance JSON")->required()->check(CLI::ExistingFile);
  r->add_option("--layout", render.layout, "Layout or solve result JSON (greedy layout when omitted)")
      ->check(CLI::ExistingFile);
  r->add_option("--scale", render.scale, "Pixels per unit")->capture_default_str();
  r->add_flag("--no-labels", render.no_labels, "Omit object ids");
  r->add_option("-o,--out", render.out, "SVG path (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitError;
  }

  try {
    if (g->parsed()) return run_generate(gen);
    if (s->parsed()) return run_solve(solve);
    if (c->parsed()) return run_check_ideal(check);
    if (v->parsed()) return run_verify_lemmas(lemmas);
    if (o->parsed()) return run_oracle_compare(compare);
    if (r->parsed()) return run_render(render);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

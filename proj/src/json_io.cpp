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

#include "idealpack/json_io.hpp"

#include <utility>

namespace idealpack {
namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw JsonFormatError(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <typename T>
Json optional_json(const std::optional<T>& value) {
  if (!value) return nullptr;
  if constexpr (std::is_same_v<T, Rational>) {
    return rational_json(*value);
  } else {
    return *value;
  }
}

Json vector_json(const RatVector& values) {
  Json out = Json::array();
  for (const Rational& v : values) out.push_back(rational_json(v));
  return out;
}

Json named_point(const RatVector& point, const std::vector<std::string>& names) {
  Json out = Json::object();
  for (std::size_t j = 0; j < point.size(); ++j) {
    out[j < names.size() ? names[j] : "x" + std::to_string(j)] = rational_json(point[j]);
  }
  return out;
}

Json row_names(const std::vector<std::size_t>& rows, const std::vector<std::string>& names) {
  Json out = Json::array();
  for (std::size_t r : rows) out.push_back(r < names.size() ? names[r] : std::to_string(r));
  return out;
}

Json terms_json(const std::vector<Term>& terms, const MBLPModel& model) {
  Json out = Json::array();
  for (const Term& t : terms) out.push_back({{"var", model.variables()[t.var].name}, {"coef", rational_json(t.coef)}});
  return out;
}

}  // namespace

Json rational_json(const Rational& value) { return to_string(value); }

Rational rational_from_json(const Json& j) {
  try {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
  } catch (const std::exception& e) {
    throw JsonFormatError(std::string("bad rational: ") + e.what());
  }
  throw JsonFormatError("expected a rational string, got " + j.dump());
}

Json instance_to_json(const Instance& inst) {
  Json objects = Json::array();
  for (const ObjectSpec& o : inst.objects()) {
    Json clear = Json::array();
    for (const Rational& c : o.clear) clear.push_back(rational_json(c));
    objects.push_back({{"id", o.id},
                       {"d", {rational_json(o.dims[0]), rational_json(o.dims[1])}},
                       {"clear", std::move(clear)}});
  }
  return {{"region", {{"w", rational_json(inst.region().width)}, {"h", rational_json(inst.region().height)}}},
          {"objects", std::move(objects)}};
}

Instance instance_from_json(const Json& j) {
  const Json& region = field(j, "region");
  Region r{rational_from_json(field(region, "w")), rational_from_json(field(region, "h"))};
  std::vector<ObjectSpec> objs;
  for (const Json& o : field(j, "objects")) {
    ObjectSpec spec;
    const Json& id = field(o, "id");
    if (!id.is_number_integer()) throw JsonFormatError("object id must be an integer");
    spec.id = id.get<int>();
    const Json& d = field(o, "d");
    if (!d.is_array() || d.size() != 2) throw JsonFormatError("object d must hold two values");
    spec.dims = {rational_from_json(d[0]), rational_from_json(d[1])};
    if (o.contains("clear")) {
      const Json& c = o.at("clear");
      if (!c.is_array() || c.size() != 4) throw JsonFormatError("object clear must hold four values");
      for (std::size_t k = 0; k < 4; ++k) spec.clear[k] = rational_from_json(c[k]);
    }
    objs.push_back(std::move(spec));
  }
  return Instance(std::move(r), std::move(objs));
}

Json params_to_json(const DerivedParams& params) {
  Json lb = Json::object();
  Json ub = Json::object();
  Json pm = Json::object();
  const std::size_t n = params.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (Axis s : {Axis::x, Axis::y}) {
      const std::string key = std::to_string(i + 1) + axis_name(s);
      lb[key] = rational_json(params.lb(i, s));
      ub[key] = rational_json(params.ub(i, s));
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      if (k == l) continue;
      for (Axis s : {Axis::x, Axis::y}) {
        pm[std::to_string(k + 1) + "," + std::to_string(l + 1) + axis_name(s)] = rational_json(params.pm(k, l, s));
      }
    }
  }
  return {{"LB", std::move(lb)}, {"UB", std::move(ub)}, {"PM", std::move(pm)}};
}

DerivedParams params_from_json(const Json& j) {
  const Json& lb = field(j, "LB");
  const Json& ub = field(j, "UB");
  const Json& pm = field(j, "PM");
  if (!lb.is_object() || lb.size() % 2 != 0 || lb.empty()) throw JsonFormatError("LB needs an x and y entry per object");
  const std::size_t n = lb.size() / 2;
  std::vector<Rational> lbv;
  std::vector<Rational> ubv;
  std::vector<Rational> pmv(n * n * 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (Axis s : {Axis::x, Axis::y}) {
      const std::string key = std::to_string(i + 1) + axis_name(s);
      lbv.push_back(rational_from_json(field(lb, key.c_str())));
      ubv.push_back(rational_from_json(field(ub, key.c_str())));
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      if (k == l) continue;
      for (Axis s : {Axis::x, Axis::y}) {
        const std::string key = std::to_string(k + 1) + "," + std::to_string(l + 1) + axis_name(s);
        pmv[(k * n + l) * 2 + index(s)] = rational_from_json(field(pm, key.c_str()));
      }
    }
  }
  return DerivedParams::from_raw(n, std::move(lbv), std::move(ubv), std::move(pmv));
}

Json model_to_json(const MBLPModel& model) {
  Json vars = Json::array();
  for (const Variable& v : model.variables()) {
    vars.push_back({{"name", v.name},
                    {"kind", v.kind == VarKind::binary ? "binary" : "continuous"},
                    {"lower", optional_json(v.lower)},
                    {"upper", optional_json(v.upper)},
                    {"priority", optional_json(v.priority)}});
  }
  Json rows = Json::array();
  for (const LinearRow& r : model.rows()) {
    rows.push_back({{"name", r.tag.name()},
                    {"terms", terms_json(r.terms, model)},
                    {"sense", to_string(r.sense)},
                    {"rhs", rational_json(r.rhs)}});
  }
  return {{"kind", to_string(model.kind)},
          {"options",
           {{"static_bounds", model.options.static_bounds},
            {"sequence_pair", model.options.sequence_pair},
            {"branch_priorities", model.options.branch_priorities}}},
          {"sense", model.minimize ? "minimize" : "maximize"},
          {"objective", {{"terms", terms_json(model.objective(), model)},
                         {"constant", rational_json(model.objective_constant())}}},
          {"variables", std::move(vars)},
          {"rows", std::move(rows)}};
}

Json solution_to_json(const PackingSolution& sol) {
  Json centers = Json::array();
  for (const auto& c : sol.centers) centers.push_back({rational_json(c[0]), rational_json(c[1])});
  return {{"height", rational_json(sol.height)}, {"centers", std::move(centers)}};
}

PackingSolution solution_from_json(const Json& j) {
  PackingSolution sol;
  sol.height = rational_from_json(field(j, "height"));
  for (const Json& c : field(j, "centers")) {
    if (!c.is_array() || c.size() != 2) throw JsonFormatError("center must hold two values");
    sol.centers.push_back({rational_from_json(c[0]), rational_from_json(c[1])});
  }
  return sol;
}

Json validation_to_json(const ValidationReport& report) {
  Json list = Json::array();
  for (const Violation& v : report.violations) {
    Json item = {{"kind", v.kind == Violation::Kind::bound ? "bound" : "overlap"}, {"first", v.first_id}};
    if (v.kind == Violation::Kind::overlap) {
      item["second"] = v.second_id;
    } else {
      item["axis"] = std::string(1, axis_name(v.axis));
    }
    item["message"] = v.message;
    list.push_back(std::move(item));
  }
  return {{"ok", report.ok()}, {"violations", std::move(list)}};
}

Json bnb_to_json(const BnBResult& result) {
  return {{"status", to_string(result.status)},
          {"objective", optional_json(result.incumbent_objective)},
          {"bound", optional_json(result.best_bound)},
          {"gap", optional_json(result.gap())},
          {"nodes", result.node_count},
          {"lp_iterations", result.lp_iterations},
          {"node_limit_reached", result.node_limit_reached},
          {"time_limit_reached", result.time_limit_reached},
          {"warm_start_used", result.warm_start_used}};
}

Json oracle_to_json(const OracleResult& result) {
  return {{"height", optional_json(result.height)},
          {"assignments", result.assignments},
          {"feasible_assignments", result.feasible_assignments},
          {"layout", result.layout ? solution_to_json(*result.layout) : Json(nullptr)}};
}

Json circuit_to_json(const Circuit& circuit) {
  Json rows = Json::array();
  for (std::size_t k = 0; k < circuit.rows.size(); ++k) {
    rows.push_back(k < circuit.names.size() ? Json(circuit.names[k]) : Json(circuit.rows[k]));
  }
  return {{"rows", std::move(rows)}, {"multipliers", vector_json(circuit.multipliers)}, {"minimal", circuit.minimal}};
}

Json certificate_to_json(const CoverCertificate& cert, const DerivedParams& params) {
  auto conditions = [&](const std::vector<SideCondition>& list) {
    Json out = Json::array();
    for (const SideCondition& c : list) {
      out.push_back({{"expression", c.text}, {"value", rational_json(c.value(params))}});
    }
    return out;
  };
  return {{"family", cert.family.label},
          {"kind", to_string(cert.family.kind)},
          {"rows", cert.family.rows},
          {"dependent", cert.dependent},
          {"conditions_hold", cert.conditions_hold},
          {"expect_minimal", cert.expect_minimal},
          {"requires_nonzero", conditions(cert.family.requires_nonzero)},
          {"minimal_if_nonzero", conditions(cert.family.minimal_if_nonzero)},
          {"circuit", cert.circuit ? circuit_to_json(*cert.circuit) : Json(nullptr)}};
}

Json idealness_to_json(const IdealnessReport& report) {
  Json out = {{"kind", to_string(report.kind)},
              {"method", to_string(report.method)},
              {"verdict", to_string(report.verdict)},
              {"max_penalty", rational_json(report.max_penalty)},
              {"vertex_count", report.vertex_count},
              {"degenerate_count", report.degenerate_count},
              {"fractional_count", report.fractional_count},
              {"params", params_to_json(report.params)},
              {"variables", report.variable_names}};
  if (report.witness) {
    const ExtremePoint& w = *report.witness;
    out["witness"] = {{"point", named_point(w.point, report.variable_names)},
                      {"penalty", rational_json(w.penalty)},
                      {"tight_rows", row_names(w.tight_set, report.row_names)},
                      {"basis", row_names(w.basis, report.row_names)},
                      {"degenerate", w.degenerate()}};
  } else {
    out["witness"] = nullptr;
  }
  if (report.iom) {
    const IomResult& r = *report.iom;
    Json covers = Json::array();
    for (const Circuit& c : r.added_covers) {
      Json j = circuit_to_json(c);
      if (c.names.empty()) j["rows"] = row_names(c.rows, report.row_names);
      covers.push_back(std::move(j));
    }
    out["iom"] = {{"status", to_string(r.status)},
                  {"objective", optional_json(r.objective)},
                  {"point", named_point(r.point, report.variable_names)},
                  {"tight_rows", row_names(r.tight, report.row_names)},
                  {"verified_extreme", r.verified_extreme},
                  {"rounds", r.rounds},
                  {"nodes", r.nodes},
                  {"added_covers", std::move(covers)},
                  {"big_m", vector_json(r.big_m)}};
  }
  return out;
}

Json campaign_to_json(const CampaignReport& report) {
  Json witnesses = Json::array();
  for (const IdealnessReport& w : report.witnesses) witnesses.push_back(idealness_to_json(w));
  return {{"kind", to_string(report.kind)},
          {"config",
           {{"samples", report.config.samples},
            {"seed", report.config.seed},
            {"region", rational_json(report.config.sampling.region)},
            {"epsilon", rational_json(report.config.sampling.epsilon)},
            {"grid_denominator", report.config.sampling.grid_denominator},
            {"boundary", report.config.sampling.boundary}}},
          {"verdict", report.fractional_samples == 0 ? "ideal" : "fractional-vertex-found"},
          {"samples", report.samples},
          {"fractional_samples", report.fractional_samples},
          {"vertices", report.vertices},
          {"degenerate_vertices", report.degenerate_vertices},
          {"non_minimal_cover_samples", report.non_minimal_cover_samples},
          {"witnesses_reverified", report.witnesses_reverified},
          {"witnesses", std::move(witnesses)}};
}

std::string to_text(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace idealpack

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

#include "idealpack/lp_format.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <tuple>
#include <vector>

namespace idealpack {

namespace {

const char* const kBoundLower = "bound.lo.";
const char* const kBoundUpper = "bound.hi.";

mpz_class lcm_of_denominators(const std::vector<const Rational*>& values) {
  mpz_class l = 1;
  for (const Rational* v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v->get_den_mpz_t());
  return l;
}

bool all_terminating(const std::vector<const Rational*>& values) {
  return std::all_of(values.begin(), values.end(), [](const Rational* v) { return is_terminating_decimal(*v); });
}

std::string number(const Rational& v) { return to_decimal_string(v); }

// Renders "3 x - 2.5 y" with every coefficient written out.
std::string linear_text(const std::vector<Term>& terms, const MBLPModel& m, const Rational& scale) {
  std::string out;
  for (const Term& t : terms) {
    const Rational c = t.coef * scale;
    if (out.empty()) {
      out += c < 0 ? "- " : "";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    out += number(abs(c)) + " " + m.variables()[t.var].name;
  }
  return out;
}

const char* sense_text(Sense s) {
  switch (s) {
    case Sense::le: return "<=";
    case Sense::ge: return ">=";
    case Sense::eq: return "=";
  }
  return "=";
}

struct PendingRow {
  std::string name;
  std::vector<Term> terms;
  Sense sense;
  Rational rhs;
};

}  // namespace

std::string export_lp_text(const MBLPModel& model) {
  std::ostringstream head;
  std::ostringstream body;
  head << "\\ idealpack LP export\n";
  head << "\\ kind " << to_string(model.kind) << "\n";
  head << "\\ options static_bounds=" << model.options.static_bounds
       << " sequence_pair=" << model.options.sequence_pair
       << " branch_priorities=" << model.options.branch_priorities << "\n";
  if (model.num_variables() == 0 && model.rows().empty()) {
    head << "End\n";
    return head.str();
  }
  head << "\\ variables";
  for (const Variable& v : model.variables()) head << " " << v.name;
  head << "\n";
  for (const Variable& v : model.variables()) {
    if (v.priority) head << "\\ priority " << v.name << " " << to_string(*v.priority) << "\n";
  }

  // Objective.
  std::vector<const Rational*> obj_values;
  for (const Term& t : model.objective()) obj_values.push_back(&t.coef);
  obj_values.push_back(&model.objective_constant());
  Rational obj_scale = 1;
  if (!all_terminating(obj_values)) {
    obj_scale = Rational(lcm_of_denominators(obj_values));
    head << "\\ scale obj " << to_string(obj_scale) << "\n";
  }
  body << (model.minimize ? "Minimize\n" : "Maximize\n");
  body << " obj:";
  const std::string obj_text = linear_text(model.objective(), model, obj_scale);
  if (!obj_text.empty()) body << " " << obj_text;
  if (model.objective_constant() != 0) {
    const Rational c = model.objective_constant() * obj_scale;
    body << (c < 0 ? " - " : (obj_text.empty() ? " " : " + ")) << number(abs(c));
  }
  body << "\n";

  // Rows, then bounds that need scaling.
  std::vector<PendingRow> rows;
  for (const LinearRow& r : model.rows()) rows.push_back(PendingRow{r.tag.name(), r.terms, r.sense, r.rhs});
  std::vector<std::string> bound_lines;
  for (std::size_t j = 0; j < model.num_variables(); ++j) {
    const Variable& v = model.variables()[j];
    if (v.kind == VarKind::binary && !v.lower && !v.upper) continue;
    std::optional<Rational> lo = v.lower;
    std::optional<Rational> hi = v.upper;
    if (lo && !is_terminating_decimal(*lo)) {
      rows.push_back(PendingRow{kBoundLower + v.name, {Term{j, 1}}, Sense::ge, *lo});
      lo.reset();
    }
    if (hi && !is_terminating_decimal(*hi)) {
      rows.push_back(PendingRow{kBoundUpper + v.name, {Term{j, 1}}, Sense::le, *hi});
      hi.reset();
    }
    if (lo && hi) {
      bound_lines.push_back(" " + number(*lo) + " <= " + v.name + " <= " + number(*hi));
    } else if (lo) {
      bound_lines.push_back(" " + v.name + " >= " + number(*lo));
    } else if (hi) {
      bound_lines.push_back(" -inf <= " + v.name + " <= " + number(*hi));
    } else if (v.kind == VarKind::continuous) {
      bound_lines.push_back(" " + v.name + " free");
    }
  }
  body << "Subject To\n";
  for (const PendingRow& r : rows) {
    std::vector<const Rational*> values;
    for (const Term& t : r.terms) values.push_back(&t.coef);
    values.push_back(&r.rhs);
    Rational scale = 1;
    if (!all_terminating(values)) {
      scale = Rational(lcm_of_denominators(values));
      head << "\\ scale " << r.name << " " << to_string(scale) << "\n";
    }
    body << " " << r.name << ": " << linear_text(r.terms, model, scale) << " " << sense_text(r.sense) << " "
         << number(r.rhs * scale) << "\n";
  }
  body << "Bounds\n";
  for (const std::string& line : bound_lines) body << line << "\n";
  std::vector<std::string> binaries;
  for (const Variable& v : model.variables()) {
    if (v.kind == VarKind::binary) binaries.push_back(v.name);
  }
  if (!binaries.empty()) {
    body << "Binaries\n";
    for (const std::string& b : binaries) body << " " << b << "\n";
  }
  body << "End\n";
  return head.str() + body.str();
}

RowTag parse_row_tag(const std::string& name) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= name.size(); ++i) {
    if (i == name.size() || name[i] == '_') {
      parts.push_back(name.substr(start, i - start));
      start = i + 1;
    }
  }
  RowTag tag;
  std::size_t end = parts.size();
  if (end > 1 && (parts[end - 1] == "x" || parts[end - 1] == "y")) {
    tag.axis = parts[end - 1] == "x" ? Axis::x : Axis::y;
    --end;
  }
  auto is_id = [](const std::string& s) {
    return !s.empty() && s.size() < 9 && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }) &&
           (s == "0" || s[0] != '0');
  };
  std::size_t first_id = end;
  while (first_id > 1 && is_id(parts[first_id - 1])) --first_id;
  for (std::size_t i = 0; i < first_id; ++i) {
    if (i > 0) tag.family += "_";
    tag.family += parts[i];
  }
  for (std::size_t i = first_id; i < end; ++i) tag.ids.push_back(std::stoi(parts[i]));
  return tag;
}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

struct Parser {
  std::size_t line_no = 0;
  std::map<std::string, std::size_t> index;
  MBLPModel model;

  [[noreturn]] void fail(const std::string& what) const { throw LpParseError(line_no, what); }

  Rational value(const std::string& tok) const {
    try {
      return parse_rational(tok);
    } catch (const std::exception&) {
      fail("bad number '" + tok + "'");
    }
  }

  std::size_t var(const std::string& name) {
    auto it = index.find(name);
    if (it != index.end()) return it->second;
    const std::size_t j = model.add_variable(Variable{name, VarKind::continuous, {}, {}, {}});
    index.emplace(name, j);
    return j;
  }

  // Parses "[-] c v (+|-) c v ... [(+|-) c]" into terms and a constant.
  LinearExpr linear(const std::vector<std::string>& toks, std::size_t from, std::size_t to) {
    LinearExpr e;
    Rational sign = 1;
    for (std::size_t i = from; i < to; ++i) {
      const std::string& t = toks[i];
      if (t == "+" || t == "-") {
        sign = t == "-" ? -1 : 1;
        continue;
      }
      const Rational c = value(t);
      if (i + 1 < to && toks[i + 1] != "+" && toks[i + 1] != "-") {
        e.add(var(toks[i + 1]), sign * c);
        ++i;
      } else {
        e.add_constant(sign * c);
      }
      sign = 1;
    }
    return e;
  }
};

}  // namespace

MBLPModel parse_lp_text(std::string_view text) {
  Parser p;
  std::map<std::string, Rational> scales;
  std::map<std::string, Rational> priorities;
  std::vector<std::tuple<std::size_t, bool, Rational>> bound_rows;
  enum class Section { none, objective, constraints, bounds, binaries, end } section = Section::none;
  std::istringstream in{std::string(text)};
  std::string raw;
  bool saw_end = false;
  while (std::getline(in, raw)) {
    ++p.line_no;
    const std::string line = trim(raw);
    if (line.empty()) continue;
    if (line[0] == '\\') {
      const auto toks = split_ws(line.substr(1));
      if (toks.empty()) continue;
      if (toks[0] == "kind" && toks.size() == 2) {
        p.model.kind = toks[1] == to_string(FormulationKind::generic) ? FormulationKind::generic
                                                                      : parse_formulation_kind(toks[1]);
      } else if (toks[0] == "options") {
        for (std::size_t i = 1; i < toks.size(); ++i) {
          const auto eq = toks[i].find('=');
          if (eq == std::string::npos) p.fail("bad option '" + toks[i] + "'");
          const bool on = toks[i].substr(eq + 1) == "1";
          const std::string key = toks[i].substr(0, eq);
          if (key == "static_bounds") p.model.options.static_bounds = on;
          if (key == "sequence_pair") p.model.options.sequence_pair = on;
          if (key == "branch_priorities") p.model.options.branch_priorities = on;
        }
      } else if (toks[0] == "variables") {
        for (std::size_t i = 1; i < toks.size(); ++i) p.var(toks[i]);
      } else if (toks[0] == "priority" && toks.size() == 3) {
        priorities[toks[1]] = p.value(toks[2]);
      } else if (toks[0] == "scale" && toks.size() == 3) {
        scales[toks[1]] = p.value(toks[2]);
      }
      continue;
    }
    const std::string key = lower(line);
    if (key == "minimize" || key == "maximize") {
      p.model.minimize = key == "minimize";
      section = Section::objective;
      continue;
    }
    if (key == "subject to") {
      section = Section::constraints;
      continue;
    }
    if (key == "bounds") {
      section = Section::bounds;
      continue;
    }
    if (key == "binaries" || key == "binary") {
      section = Section::binaries;
      continue;
    }
    if (key == "end") {
      section = Section::end;
      saw_end = true;
      continue;
    }
    switch (section) {
      case Section::objective: {
        const auto colon = line.find(':');
        const auto toks = split_ws(colon == std::string::npos ? line : line.substr(colon + 1));
        const Rational scale = scales.count("obj") ? scales["obj"] : Rational(1);
        LinearExpr e = p.linear(toks, 0, toks.size());
        LinearExpr scaled;
        scaled.add(e, 1 / scale);
        p.model.set_objective(scaled, p.model.minimize);
        break;
      }
      case Section::constraints: {
        const auto colon = line.find(':');
        if (colon == std::string::npos) p.fail("constraint without a name");
        const std::string name = trim(std::string_view(line).substr(0, colon));
        const auto toks = split_ws(line.substr(colon + 1));
        const auto op = std::find_if(toks.begin(), toks.end(),
                                     [](const std::string& t) { return t == "<=" || t == ">=" || t == "="; });
        if (op == toks.end() || op + 2 != toks.end()) p.fail("constraint needs one sense and a right-hand side");
        const auto at = static_cast<std::size_t>(op - toks.begin());
        const Sense sense = *op == "<=" ? Sense::le : *op == ">=" ? Sense::ge : Sense::eq;
        const Rational scale = scales.count(name) ? scales[name] : Rational(1);
        const LinearExpr lhs = p.linear(toks, 0, at);
        if (lhs.constant() != 0) p.fail("constant on the left-hand side");
        Rational rhs = p.value(toks.back()) / scale;
        const std::vector<Term> terms = lhs.terms();
        const bool bound_row = name.rfind(kBoundLower, 0) == 0 || name.rfind(kBoundUpper, 0) == 0;
        if (bound_row) {
          if (terms.size() != 1) p.fail("bound row must have one term");
          bound_rows.emplace_back(terms[0].var, name.rfind(kBoundLower, 0) == 0, rhs * scale / terms[0].coef);
          break;
        }
        LinearExpr e;
        e.add(lhs, 1 / scale);
        p.model.add_row(e, sense, rhs, parse_row_tag(name));
        break;
      }
      case Section::bounds: {
        const auto toks = split_ws(line);
        auto bound = [&](const std::string& t) -> std::optional<Rational> {
          if (t == "-inf" || t == "+inf" || t == "inf") return std::nullopt;
          return p.value(t);
        };
        if (toks.size() == 2 && lower(toks[1]) == "free") {
          Variable& v = p.model.variables()[p.var(toks[0])];
          v.lower.reset();
          v.upper.reset();
        } else if (toks.size() == 3 && toks[1] == ">=") {
          p.model.variables()[p.var(toks[0])].lower = bound(toks[2]);
        } else if (toks.size() == 3 && toks[1] == "<=") {
          p.model.variables()[p.var(toks[0])].upper = bound(toks[2]);
        } else if (toks.size() == 5 && toks[1] == "<=" && toks[3] == "<=") {
          Variable& v = p.model.variables()[p.var(toks[2])];
          v.lower = bound(toks[0]);
          v.upper = bound(toks[4]);
        } else {
          p.fail("unrecognised bound '" + line + "'");
        }
        break;
      }
      case Section::binaries:
        for (const std::string& name : split_ws(line)) {
          p.model.variables()[p.var(name)].kind = VarKind::binary;
        }
        break;
      case Section::none:
      case Section::end:
        p.fail("text outside any section");
    }
  }
  if (!saw_end) p.fail("missing End");
  for (const auto& [name, pr] : priorities) {
    p.model.variables()[p.var(name)].priority = pr;
  }
  for (const auto& [var, is_lower, value] : bound_rows) {
    Variable& v = p.model.variables()[var];
    (is_lower ? v.lower : v.upper) = value;
  }
  return p.model;
}

}  // namespace idealpack

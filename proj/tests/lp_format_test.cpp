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

#include <gtest/gtest.h>

#include <sstream>

#include "idealpack/formulations.hpp"
#include "test_support.hpp"

namespace idealpack {
namespace {

using testing::Gen;
using testing::q;
using testing::two_squares;

std::size_t lines_in_section(const std::string& text, const std::string& section) {
  std::istringstream in(text);
  std::string line;
  bool inside = false;
  std::size_t count = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] != ' ') {
      inside = line == section;
      continue;
    }
    count += inside ? 1 : 0;
  }
  return count;
}

void expect_same_model(const MBLPModel& a, const MBLPModel& b) {
  ASSERT_EQ(a.num_variables(), b.num_variables());
  for (std::size_t j = 0; j < a.num_variables(); ++j) {
    const Variable& u = a.variables()[j];
    const Variable& v = b.variables()[j];
    EXPECT_EQ(u.name, v.name);
    EXPECT_EQ(u.kind, v.kind) << u.name;
    EXPECT_EQ(u.lower, v.lower) << u.name;
    EXPECT_EQ(u.upper, v.upper) << u.name;
    EXPECT_EQ(u.priority, v.priority) << u.name;
  }
  ASSERT_EQ(a.rows().size(), b.rows().size());
  for (std::size_t r = 0; r < a.rows().size(); ++r) {
    EXPECT_EQ(a.rows()[r].terms, b.rows()[r].terms) << r;
    EXPECT_EQ(a.rows()[r].sense, b.rows()[r].sense) << r;
    EXPECT_EQ(a.rows()[r].rhs, b.rows()[r].rhs) << r;
    EXPECT_EQ(a.rows()[r].tag.name(), b.rows()[r].tag.name()) << r;
  }
  EXPECT_EQ(a.objective(), b.objective());
  EXPECT_EQ(a.objective_constant(), b.objective_constant());
  EXPECT_EQ(a.minimize, b.minimize);
  EXPECT_EQ(a.kind, b.kind);
}

TEST(ExportLp, EmptyModelIsHeaderAndEnd) {
  const std::string text = export_lp_text(MBLPModel{});
  EXPECT_EQ(text,
            "\\ idealpack LP export\n\\ kind generic\n"
            "\\ options static_bounds=0 sequence_pair=0 branch_priorities=0\nEnd\n");
  expect_same_model(parse_lp_text(text), MBLPModel{});
}

TEST(ExportLp, StandardUnaryPairCounts) {
  const MBLPModel m = build_su(DerivedParams::from_instance(two_squares()));
  const std::string text = export_lp_text(m);
  EXPECT_EQ(lines_in_section(text, "Subject To"), 13U);
  EXPECT_EQ(lines_in_section(text, "Binaries"), 4U);
  EXPECT_NE(text.find(" disj_1_2: 1 d_1_2_x + 1 d_1_2_y + 1 d_2_1_x + 1 d_2_1_y = 1\n"), std::string::npos);
}

TEST(ExportLp, RoundTripIsIdenticalForEveryFormulation) {
  const Instance inst = two_squares();
  for (FormulationKind kind : {FormulationKind::su, FormulationKind::ru, FormulationKind::sbl, FormulationKind::sbm}) {
    for (bool extras : {false, true}) {
      FormulationOptions opts;
      opts.static_bounds = extras;
      opts.sequence_pair = extras;
      opts.branch_priorities = extras;
      const MBLPModel m = build_strip_packing(inst, kind, opts);
      const std::string text = export_lp_text(m);
      const MBLPModel back = parse_lp_text(text);
      expect_same_model(m, back);
      EXPECT_EQ(export_lp_text(back), text) << to_string(kind);
    }
  }
}

TEST(ExportLp, NonTerminatingRowsAreScaled) {
  MBLPModel m;
  const std::size_t x = m.add_variable(Variable{"x", VarKind::continuous, q("1/3"), q("5/2"), {}});
  const std::size_t y = m.add_variable(Variable{"y", VarKind::binary, {}, {}, q("7/3")});
  LinearExpr e;
  e.add(x, q("1/3")).add(y, q("-1/6"));
  m.add_row(e, Sense::le, q("1/4"), RowTag{"mix", {1}, Axis::y});
  LinearExpr obj;
  obj.add(x, q("2/7"));
  m.set_objective(obj, false);
  const std::string text = export_lp_text(m);
  EXPECT_NE(text.find("\\ scale mix_1_y 12\n"), std::string::npos);
  EXPECT_NE(text.find(" mix_1_y: 4 x - 2 y <= 3\n"), std::string::npos);
  EXPECT_NE(text.find("\\ scale obj 7\n"), std::string::npos);
  EXPECT_NE(text.find(" bound.lo.x: 3 x >= 1\n"), std::string::npos);
  EXPECT_NE(text.find(" -inf <= x <= 2.5\n"), std::string::npos);
  EXPECT_NE(text.find("\\ priority y 7/3\n"), std::string::npos);
  const MBLPModel back = parse_lp_text(text);
  expect_same_model(m, back);
  EXPECT_EQ(export_lp_text(back), text);
}

TEST(ExportLp, RandomModelsRoundTrip) {
  Gen g(31);
  for (int trial = 0; trial < 80; ++trial) {
    MBLPModel m;
    const auto n = static_cast<std::size_t>(g.integer(1, 4));
    for (std::size_t j = 0; j < n; ++j) {
      Variable v{"v" + std::to_string(j), g.coin() ? VarKind::binary : VarKind::continuous, {}, {}, {}};
      if (v.kind == VarKind::continuous) {
        if (g.coin()) v.lower = g.rational(-3, 0);
        if (g.coin()) v.upper = g.rational(1, 4);
      }
      if (g.coin()) v.priority = g.rational(0, 5);
      m.add_variable(std::move(v));
    }
    const auto rows = g.integer(0, 4);
    for (int r = 0; r < rows; ++r) {
      LinearExpr e;
      for (std::size_t j = 0; j < n; ++j) {
        if (g.coin()) e.add(j, g.rational(-4, 4));
      }
      if (e.terms().empty()) continue;
      const Sense s = std::array{Sense::le, Sense::ge, Sense::eq}[static_cast<std::size_t>(g.integer(0, 2))];
      m.add_row(e, s, g.rational(-5, 5), RowTag{"row", {r + 1}, {}});
    }
    LinearExpr obj(g.rational(-2, 2));
    for (std::size_t j = 0; j < n; ++j) obj.add(j, g.rational(-3, 3));
    m.set_objective(obj, g.coin());
    const std::string text = export_lp_text(m);
    const MBLPModel back = parse_lp_text(text);
    expect_same_model(m, back);
    EXPECT_EQ(export_lp_text(back), text) << text;
  }
}

TEST(ParseRowTag, InvertsName) {
  for (const RowTag& t : {RowTag{"lb", {1, 2}, Axis::x}, RowTag{"disj", {1, 2}, {}}, RowTag{"hcap", {3}, {}},
                          RowTag{"extreme", {}, {}}, RowTag{"spbflo", {1, 2, 3}, Axis::y}, RowTag{"lb", {}, Axis::x}}) {
    EXPECT_EQ(parse_row_tag(t.name()), t) << t.name();
  }
  EXPECT_EQ(parse_row_tag("tight.lb_1_2_x").name(), "tight.lb_1_2_x");
  EXPECT_EQ(parse_row_tag("x"), (RowTag{"x", {}, {}}));
}

TEST(ParseLp, Errors) {
  EXPECT_THROW(parse_lp_text("Minimize\n obj: 1 x\n"), LpParseError);
  EXPECT_THROW(parse_lp_text("Subject To\n c1: 1 x\nEnd\n"), LpParseError);
  EXPECT_THROW(parse_lp_text("Subject To\n c1: 1.2.3 x >= 1\nEnd\n"), LpParseError);
  EXPECT_THROW(parse_lp_text(" loose: 1 x >= 1\nEnd\n"), LpParseError);
  try {
    parse_lp_text("Minimize\n obj: 1 x\nBounds\n x between 1\nEnd\n");
    FAIL() << "expected a parse error";
  } catch (const LpParseError& e) {
    EXPECT_EQ(e.line(), 4U);
  }
}

TEST(ParseLp, AcceptsHandWrittenLp) {
  const MBLPModel m = parse_lp_text(
      "Maximize\n obj: 2 a + 3 b\nSubject To\n cap: 1 a + 1 b <= 4\nBounds\n 0 <= a <= 3\nBinaries\n b\nEnd\n");
  ASSERT_EQ(m.num_variables(), 2U);
  EXPECT_FALSE(m.minimize);
  EXPECT_EQ(m.variables()[1].kind, VarKind::binary);
  EXPECT_EQ(m.variables()[0].upper, Rational(3));
  EXPECT_EQ(m.rows().front().rhs, 4);
}

}  // namespace
}  // namespace idealpack

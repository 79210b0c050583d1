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

// Exact bounded-variable simplex over the rationals.
//
// Every row a.x (sense) b gets a logical column s = a.x whose bounds encode
// the sense, so the working system is a sparse condensed tableau expressing
// the basic columns in terms of the nonbasic ones. Infeasible starts are
// repaired by a dual simplex pass; optimality is reached by primal simplex.
// Both passes price by largest violation and fall back to Bland's
// least-index rule after a run of degenerate pivots, which rules out
// cycling. The engine keeps its tableau so that a
// copy can be re-solved after a bound change (branch-and-bound children).

#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <vector>

#include "idealpack/model.hpp"
#include "idealpack/rational.hpp"

namespace idealpack {

using Clock = std::chrono::steady_clock;
using Deadline = std::optional<Clock::time_point>;

enum class LPStatus { optimal, infeasible, unbounded, time_limit };
std::string to_string(LPStatus status);

// Minimization form of an LP; binaries are relaxed to their [0, 1] box.
struct LPProblem {
  std::size_t num_vars = 0;
  std::vector<std::optional<Rational>> lower;
  std::vector<std::optional<Rational>> upper;
  std::vector<LinearRow> rows;
  RatVector cost;
  Rational cost_constant = 0;
  bool maximize = false;  // cost holds the negated objective when set

  static LPProblem from_model(const MBLPModel& model);
};

struct TightBound {
  std::size_t var = 0;
  bool upper = false;
  bool operator==(const TightBound&) const = default;
};

struct LPSolution {
  LPStatus status = LPStatus::infeasible;
  RatVector point;
  Rational objective;  // in the model's own sense
  std::vector<std::size_t> tight_rows;
  std::vector<TightBound> tight_bounds;
  // Multipliers for the minimization form: cost = A^T row_duals + bound_duals.
  RatVector row_duals;
  RatVector bound_duals;
  std::size_t iterations = 0;
};

class SimplexEngine {
 public:
  explicit SimplexEngine(const LPProblem& problem);

  LPStatus solve(const Deadline& deadline = std::nullopt);
  void set_bounds(std::size_t var, std::optional<Rational> lower, std::optional<Rational> upper);

  LPStatus status() const { return status_; }
  Rational objective() const;  // minimization form
  LPSolution solution() const;
  const Rational& value(std::size_t var) const { return val_[var]; }
  std::size_t iterations() const { return iterations_; }

 private:
  bool can_increase(std::size_t var) const;
  bool can_decrease(std::size_t var) const;
  bool below(std::size_t var) const;
  bool above(std::size_t var) const;
  bool dual_feasible() const;
  void move_nonbasic(std::size_t col, const Rational& delta);
  void pivot(std::size_t row, std::size_t col);
  LPStatus dual_phase(bool use_costs, const Deadline& deadline);
  LPStatus primal_phase(const Deadline& deadline);

  struct Entry {
    std::size_t col;
    Rational value;
  };
  using SparseRow = std::vector<Entry>;  // sorted by column, no zeros

  // Nullptr when the entry is zero.
  const Rational* entry(std::size_t r, std::size_t c) const;

  bool maximize_ = false;
  Rational cost_constant_ = 0;
  std::size_t n_ = 0;  // structural columns (also the nonbasic count)
  std::size_t m_ = 0;  // rows
  std::vector<bool> has_lo_;
  std::vector<bool> has_hi_;
  RatVector lo_;
  RatVector hi_;
  RatVector cost_;
  RatVector val_;
  std::vector<SparseRow> tab_;
  RatVector d_;
  std::vector<std::size_t> basic_;
  std::vector<std::size_t> nonbasic_;
  std::vector<std::ptrdiff_t> row_of_;  // -1 when nonbasic
  std::vector<std::size_t> col_of_;
  LPStatus status_ = LPStatus::infeasible;
  std::size_t iterations_ = 0;
};

LPSolution solve_lp(const MBLPModel& model, const Deadline& deadline = std::nullopt);
LPSolution solve_lp(const LPProblem& problem, const Deadline& deadline = std::nullopt);

// Independent optimality check: dual feasibility, complementary slackness
// and equal objectives, all in exact arithmetic.
bool verify_dual_certificate(const LPProblem& problem, const LPSolution& solution);

}  // namespace idealpack

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

#include "idealpack/lp_solver.hpp"

#include <algorithm>
#include <limits>

namespace idealpack {
namespace {

bool expired(const Deadline& deadline) { return deadline && Clock::now() >= *deadline; }

int cmp_abs(const Rational& a, const Rational& b) { return cmp(abs(a), abs(b)); }

// Consecutive degenerate pivots tolerated before switching to least-index rules.
constexpr std::size_t kBlandAfter = 40;

}  // namespace

std::string to_string(LPStatus status) {
  switch (status) {
    case LPStatus::optimal: return "optimal";
    case LPStatus::infeasible: return "infeasible";
    case LPStatus::unbounded: return "unbounded";
    case LPStatus::time_limit: return "time_limit";
  }
  return "unknown";
}

LPProblem LPProblem::from_model(const MBLPModel& model) {
  LPProblem p;
  p.num_vars = model.num_variables();
  p.lower.reserve(p.num_vars);
  p.upper.reserve(p.num_vars);
  for (const Variable& v : model.variables()) {
    p.lower.push_back(v.effective_lower());
    p.upper.push_back(v.effective_upper());
  }
  p.rows = model.rows();
  p.cost.assign(p.num_vars, Rational(0));
  p.maximize = !model.minimize;
  const Rational sign = p.maximize ? -1 : 1;
  for (const Term& t : model.objective()) p.cost[t.var] = sign * t.coef;
  p.cost_constant = sign * model.objective_constant();
  return p;
}

SimplexEngine::SimplexEngine(const LPProblem& problem)
    : maximize_(problem.maximize),
      cost_constant_(problem.cost_constant),
      n_(problem.num_vars),
      m_(problem.rows.size()) {
  const std::size_t total = n_ + m_;
  has_lo_.assign(total, false);
  has_hi_.assign(total, false);
  lo_.assign(total, Rational(0));
  hi_.assign(total, Rational(0));
  cost_.assign(total, Rational(0));
  val_.assign(total, Rational(0));
  for (std::size_t j = 0; j < n_; ++j) {
    if (problem.lower[j]) {
      has_lo_[j] = true;
      lo_[j] = *problem.lower[j];
    }
    if (problem.upper[j]) {
      has_hi_[j] = true;
      hi_[j] = *problem.upper[j];
    }
    cost_[j] = problem.cost[j];
    if (has_lo_[j]) {
      val_[j] = lo_[j];
    } else if (has_hi_[j]) {
      val_[j] = hi_[j];
    }
  }
  tab_.assign(m_, SparseRow{});
  basic_.resize(m_);
  nonbasic_.resize(n_);
  row_of_.assign(total, -1);
  col_of_.assign(total, 0);
  for (std::size_t j = 0; j < n_; ++j) {
    nonbasic_[j] = j;
    col_of_[j] = j;
  }
  for (std::size_t r = 0; r < m_; ++r) {
    const LinearRow& row = problem.rows[r];
    const std::size_t s = n_ + r;
    if (row.sense != Sense::le) {
      has_lo_[s] = true;
      lo_[s] = row.rhs;
    }
    if (row.sense != Sense::ge) {
      has_hi_[s] = true;
      hi_[s] = row.rhs;
    }
    Rational activity = 0;
    for (const Term& term : row.terms) {
      tab_[r].push_back({term.var, term.coef});
      activity += term.coef * val_[term.var];
    }
    val_[s] = activity;
    basic_[r] = s;
    row_of_[s] = static_cast<std::ptrdiff_t>(r);
  }
  d_.assign(n_, Rational(0));
  for (std::size_t j = 0; j < n_; ++j) d_[j] = cost_[j];
}

bool SimplexEngine::can_increase(std::size_t var) const { return !has_hi_[var] || val_[var] < hi_[var]; }
bool SimplexEngine::can_decrease(std::size_t var) const { return !has_lo_[var] || val_[var] > lo_[var]; }
bool SimplexEngine::below(std::size_t var) const { return has_lo_[var] && val_[var] < lo_[var]; }
bool SimplexEngine::above(std::size_t var) const { return has_hi_[var] && val_[var] > hi_[var]; }

bool SimplexEngine::dual_feasible() const {
  for (std::size_t k = 0; k < n_; ++k) {
    const std::size_t q = nonbasic_[k];
    const int sign = sgn(d_[k]);
    if (sign < 0 && can_increase(q)) return false;
    if (sign > 0 && can_decrease(q)) return false;
  }
  return true;
}

const Rational* SimplexEngine::entry(std::size_t r, std::size_t c) const {
  const SparseRow& row = tab_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::size_t col) { return e.col < col; });
  return it != row.end() && it->col == c ? &it->value : nullptr;
}

void SimplexEngine::move_nonbasic(std::size_t col, const Rational& delta) {
  if (delta == 0) return;
  val_[nonbasic_[col]] += delta;
  for (std::size_t r = 0; r < m_; ++r) {
    if (const Rational* a = entry(r, col)) val_[basic_[r]] += *a * delta;
  }
}

void SimplexEngine::pivot(std::size_t row, std::size_t col) {
  SparseRow& prow = tab_[row];
  const Rational inv = 1 / *entry(row, col);
  const Rational neg_inv = -inv;
  for (Entry& e : prow) e.value = e.col == col ? inv : Rational(e.value * neg_inv);
  SparseRow merged;
  for (std::size_t r = 0; r < m_; ++r) {
    if (r == row) continue;
    const Rational* hit = entry(r, col);
    if (hit == nullptr) continue;
    const Rational f = *hit;
    // row_r <- (row_r without col) + f * prow, where prow[col] = inv.
    const SparseRow& cur = tab_[r];
    merged.clear();
    merged.reserve(cur.size() + prow.size());
    auto a = cur.begin();
    auto b = prow.begin();
    while (a != cur.end() || b != prow.end()) {
      if (b == prow.end() || (a != cur.end() && a->col < b->col)) {
        if (a->col != col) merged.push_back(*a);
        ++a;
      } else if (a == cur.end() || b->col < a->col) {
        merged.push_back({b->col, f * b->value});
        ++b;
      } else {
        Rational v = b->col == col ? Rational(f * b->value) : Rational(a->value + f * b->value);
        if (v != 0) merged.push_back({b->col, std::move(v)});
        ++a;
        ++b;
      }
    }
    tab_[r].swap(merged);
  }
  const Rational f = d_[col];
  if (f != 0) {
    for (const Entry& e : prow) {
      if (e.col == col) {
        d_[col] = f * inv;
      } else {
        d_[e.col] += f * e.value;
      }
    }
  }
  const std::size_t leaving = basic_[row];
  const std::size_t entering = nonbasic_[col];
  basic_[row] = entering;
  nonbasic_[col] = leaving;
  row_of_[entering] = static_cast<std::ptrdiff_t>(row);
  row_of_[leaving] = -1;
  col_of_[leaving] = col;
  ++iterations_;
}

LPStatus SimplexEngine::dual_phase(bool use_costs, const Deadline& deadline) {
  // Without costs every step is degenerate, so least-index rules apply throughout.
  std::size_t degenerate_run = use_costs ? 0 : kBlandAfter;
  for (;;) {
    if (expired(deadline)) return LPStatus::time_limit;
    const bool bland = degenerate_run >= kBlandAfter;
    std::size_t row = m_;
    Rational worst;
    for (std::size_t r = 0; r < m_; ++r) {
      const std::size_t b = basic_[r];
      Rational gap;
      if (below(b)) {
        gap = lo_[b] - val_[b];
      } else if (above(b)) {
        gap = val_[b] - hi_[b];
      } else {
        continue;
      }
      const bool better = row == m_ || (bland ? b < basic_[row] : (gap > worst || (gap == worst && b < basic_[row])));
      if (better) {
        row = r;
        worst = std::move(gap);
      }
    }
    if (row == m_) return LPStatus::optimal;
    const std::size_t leaving = basic_[row];
    const bool increase = below(leaving);
    std::size_t best = n_;
    Rational best_ratio;
    for (const Entry& e : tab_[row]) {
      const std::size_t k = e.col;
      const Rational& a = e.value;
      const std::size_t q = nonbasic_[k];
      const bool up = (a > 0) == increase;
      if (up ? !can_increase(q) : !can_decrease(q)) continue;
      Rational ratio = use_costs ? Rational(abs(d_[k]) / abs(a)) : Rational(0);
      if (best == n_ || ratio < best_ratio || (ratio == best_ratio && q < nonbasic_[best])) {
        best = k;
        best_ratio = std::move(ratio);
      }
    }
    if (best == n_) return LPStatus::infeasible;
    if (use_costs) degenerate_run = best_ratio == 0 ? degenerate_run + 1 : 0;
    const Rational& target = increase ? lo_[leaving] : hi_[leaving];
    const Rational delta = (target - val_[leaving]) / *entry(row, best);
    move_nonbasic(best, delta);
    val_[leaving] = target;
    pivot(row, best);
  }
}

LPStatus SimplexEngine::primal_phase(const Deadline& deadline) {
  std::size_t degenerate_run = 0;
  for (;;) {
    if (expired(deadline)) return LPStatus::time_limit;
    const bool bland = degenerate_run >= kBlandAfter;
    std::size_t enter = n_;
    for (std::size_t k = 0; k < n_; ++k) {
      const std::size_t q = nonbasic_[k];
      const int sign = sgn(d_[k]);
      const bool improving = (sign < 0 && can_increase(q)) || (sign > 0 && can_decrease(q));
      if (!improving) continue;
      if (enter == n_) {
        enter = k;
      } else if (bland) {
        if (q < nonbasic_[enter]) enter = k;
      } else {
        const int cmp = cmp_abs(d_[k], d_[enter]);
        if (cmp > 0 || (cmp == 0 && q < nonbasic_[enter])) enter = k;
      }
    }
    if (enter == n_) return LPStatus::optimal;
    const std::size_t q = nonbasic_[enter];
    const int dir = sgn(d_[enter]) < 0 ? 1 : -1;
    // Candidate step lengths; `m_` marks the entering column's own bound.
    std::optional<Rational> step;
    std::size_t leave_row = m_;
    std::size_t leave_var = std::numeric_limits<std::size_t>::max();
    if (dir > 0 && has_hi_[q]) {
      step = hi_[q] - val_[q];
      leave_var = q;
    } else if (dir < 0 && has_lo_[q]) {
      step = val_[q] - lo_[q];
      leave_var = q;
    }
    for (std::size_t r = 0; r < m_; ++r) {
      const Rational* hit = entry(r, enter);
      if (hit == nullptr) continue;
      const Rational& a = *hit;
      const std::size_t b = basic_[r];
      const bool rising = (a > 0) == (dir > 0);
      Rational limit;
      if (rising && has_hi_[b]) {
        limit = (hi_[b] - val_[b]) / abs(a);
      } else if (!rising && has_lo_[b]) {
        limit = (val_[b] - lo_[b]) / abs(a);
      } else {
        continue;
      }
      if (!step || limit < *step || (limit == *step && b < leave_var)) {
        step = std::move(limit);
        leave_row = r;
        leave_var = b;
      }
    }
    if (!step) return LPStatus::unbounded;
    degenerate_run = *step == 0 ? degenerate_run + 1 : 0;
    move_nonbasic(enter, dir > 0 ? *step : Rational(-*step));
    if (leave_row == m_) {
      ++iterations_;
      continue;
    }
    const std::size_t b = basic_[leave_row];
    const bool rising = (*entry(leave_row, enter) > 0) == (dir > 0);
    val_[b] = rising ? hi_[b] : lo_[b];
    pivot(leave_row, enter);
  }
}

LPStatus SimplexEngine::solve(const Deadline& deadline) {
  for (std::size_t v = 0; v < n_ + m_; ++v) {
    if (has_lo_[v] && has_hi_[v] && lo_[v] > hi_[v]) return status_ = LPStatus::infeasible;
  }
  bool infeasible_basis = false;
  for (std::size_t r = 0; r < m_ && !infeasible_basis; ++r) {
    infeasible_basis = below(basic_[r]) || above(basic_[r]);
  }
  if (infeasible_basis) {
    status_ = dual_phase(dual_feasible(), deadline);
    if (status_ != LPStatus::optimal) return status_;
  }
  status_ = primal_phase(deadline);
  return status_;
}

void SimplexEngine::set_bounds(std::size_t var, std::optional<Rational> lower, std::optional<Rational> upper) {
  has_lo_[var] = lower.has_value();
  has_hi_[var] = upper.has_value();
  lo_[var] = lower ? *lower : Rational(0);
  hi_[var] = upper ? *upper : Rational(0);
  if (row_of_[var] >= 0) return;
  const std::size_t col = col_of_[var];
  Rational target = val_[var];
  if (has_lo_[var] && (target < lo_[var] || sgn(d_[col]) > 0)) target = lo_[var];
  if (has_hi_[var] && (target > hi_[var] || sgn(d_[col]) < 0)) target = hi_[var];
  move_nonbasic(col, target - val_[var]);
}

Rational SimplexEngine::objective() const {
  Rational acc = cost_constant_;
  for (std::size_t j = 0; j < n_; ++j) {
    if (cost_[j] != 0) acc += cost_[j] * val_[j];
  }
  return acc;
}

LPSolution SimplexEngine::solution() const {
  LPSolution sol;
  sol.status = status_;
  sol.iterations = iterations_;
  if (status_ != LPStatus::optimal) return sol;
  sol.point.assign(val_.begin(), val_.begin() + static_cast<std::ptrdiff_t>(n_));
  const Rational obj = objective();
  sol.objective = maximize_ ? Rational(-obj) : obj;
  for (std::size_t r = 0; r < m_; ++r) {
    const std::size_t s = n_ + r;
    if ((has_lo_[s] && val_[s] == lo_[s]) || (has_hi_[s] && val_[s] == hi_[s])) sol.tight_rows.push_back(r);
  }
  for (std::size_t j = 0; j < n_; ++j) {
    if (has_lo_[j] && val_[j] == lo_[j]) sol.tight_bounds.push_back({j, false});
    if (has_hi_[j] && val_[j] == hi_[j]) sol.tight_bounds.push_back({j, true});
  }
  sol.row_duals.assign(m_, Rational(0));
  sol.bound_duals.assign(n_, Rational(0));
  for (std::size_t r = 0; r < m_; ++r) {
    const std::size_t s = n_ + r;
    if (row_of_[s] < 0) sol.row_duals[r] = d_[col_of_[s]];
  }
  for (std::size_t j = 0; j < n_; ++j) {
    if (row_of_[j] < 0) sol.bound_duals[j] = d_[col_of_[j]];
  }
  return sol;
}

LPSolution solve_lp(const LPProblem& problem, const Deadline& deadline) {
  SimplexEngine engine(problem);
  engine.solve(deadline);
  return engine.solution();
}

LPSolution solve_lp(const MBLPModel& model, const Deadline& deadline) {
  return solve_lp(LPProblem::from_model(model), deadline);
}

bool verify_dual_certificate(const LPProblem& problem, const LPSolution& solution) {
  if (solution.status != LPStatus::optimal) return false;
  const std::size_t n = problem.num_vars;
  const auto& x = solution.point;
  const auto& y = solution.row_duals;
  const auto& rb = solution.bound_duals;
  if (x.size() != n || y.size() != problem.rows.size() || rb.size() != n) return false;
  RatVector residual = problem.cost;
  Rational dual_obj = problem.cost_constant;
  for (std::size_t i = 0; i < problem.rows.size(); ++i) {
    const LinearRow& row = problem.rows[i];
    if (!row.satisfied_by(x)) return false;
    if (y[i] == 0) continue;
    if (y[i] > 0 && row.sense == Sense::le) return false;
    if (y[i] < 0 && row.sense == Sense::ge) return false;
    if (!row.tight_at(x)) return false;
    for (const Term& t : row.terms) residual[t.var] -= y[i] * t.coef;
    dual_obj += y[i] * row.rhs;
  }
  Rational primal_obj = problem.cost_constant;
  for (std::size_t j = 0; j < n; ++j) {
    if (problem.lower[j] && x[j] < *problem.lower[j]) return false;
    if (problem.upper[j] && x[j] > *problem.upper[j]) return false;
    primal_obj += problem.cost[j] * x[j];
    residual[j] -= rb[j];
    if (residual[j] != 0) return false;
    if (rb[j] > 0) {
      if (!problem.lower[j] || x[j] != *problem.lower[j]) return false;
      dual_obj += rb[j] * *problem.lower[j];
    } else if (rb[j] < 0) {
      if (!problem.upper[j] || x[j] != *problem.upper[j]) return false;
      dual_obj += rb[j] * *problem.upper[j];
    }
  }
  return dual_obj == primal_obj;
}

}  // namespace idealpack

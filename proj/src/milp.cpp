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

#include "idealpack/milp.hpp"

#include <deque>
#include <map>
#include <memory>
#include <nlohmann/json.hpp>
#include <stdexcept>

#include "idealpack/lp_solver.hpp"

namespace idealpack {

std::string to_string(NodeOrder order) {
  return order == NodeOrder::best_bound ? "best-bound" : "depth-first";
}

std::string to_string(BranchRule rule) {
  return rule == BranchRule::most_fractional ? "most-fractional" : "priority";
}

NodeOrder parse_node_order(const std::string& text) {
  if (text == "best-bound" || text == "best_bound") return NodeOrder::best_bound;
  if (text == "depth-first" || text == "depth_first") return NodeOrder::depth_first;
  throw std::invalid_argument("unknown node order '" + text + "' (expected best-bound or depth-first)");
}

BranchRule parse_branch_rule(const std::string& text) {
  if (text == "most-fractional" || text == "most_fractional") return BranchRule::most_fractional;
  if (text == "priority" || text == "priority-then-most-fractional") return BranchRule::priority_then_most_fractional;
  throw std::invalid_argument("unknown branching rule '" + text + "' (expected most-fractional or priority)");
}

std::string to_string(MILPStatus status) {
  switch (status) {
    case MILPStatus::optimal: return "optimal";
    case MILPStatus::bounded: return "bounded";
    case MILPStatus::infeasible: return "infeasible";
    case MILPStatus::unbounded: return "unbounded";
    case MILPStatus::no_solution: return "no_solution";
  }
  return "unknown";
}

std::optional<Rational> BnBResult::gap() const {
  if (!incumbent_objective || !best_bound) return std::nullopt;
  Rational denom = abs(*incumbent_objective);
  if (denom < 1) denom = 1;
  return abs(*incumbent_objective - *best_bound) / denom;
}

namespace {

struct Node {
  std::size_t id = 0;
  std::size_t depth = 0;
  Rational bound;  // parent LP value, minimization form
  std::shared_ptr<const SimplexEngine> parent;
  std::size_t var = 0;
  std::optional<Rational> lower;
  std::optional<Rational> upper;
};

Rational fractionality(const Rational& v) {
  // Distance to the nearest integer, for values in [0, 1].
  return v < Rational(1, 2) ? v : Rational(1 - v);
}

class BranchAndBound {
 public:
  BranchAndBound(const MBLPModel& model, const SolveOptions& options)
      : model_(model), options_(options), problem_(LPProblem::from_model(model)), binaries_(model.binary_indices()) {
    if (options.time_limit_seconds) {
      deadline_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                     std::chrono::duration<double>(*options.time_limit_seconds));
    }
  }

  BnBResult run() {
    install_warm_start();
    auto root = std::make_shared<SimplexEngine>(problem_);
    process(nullptr, root);
    while (!open_.empty()) {
      if (result_.node_count >= options_.node_limit) {
        result_.node_limit_reached = true;
        break;
      }
      if (deadline_ && Clock::now() >= *deadline_) {
        result_.time_limit_reached = true;
        break;
      }
      Node node = pop();
      if (incumbent_value_ && node.bound >= *incumbent_value_) {
        log(node.id, node.depth, node.bound, std::nullopt, "pruned");
        continue;
      }
      auto engine = std::make_shared<SimplexEngine>(*node.parent);
      node.parent.reset();
      engine->set_bounds(node.var, node.lower, node.upper);
      process(&node, engine);
    }
    return finish();
  }

 private:
  void install_warm_start() {
    if (!options_.warm_start) return;
    const auto& x = *options_.warm_start;
    if (x.size() != model_.num_variables() || !model_.is_feasible(x)) return;
    result_.warm_start_used = true;
    incumbent_ = x;
    incumbent_value_ = min_form(model_.objective_value(x));
  }

  Rational min_form(const Rational& v) const { return model_.minimize ? v : Rational(-v); }
  Rational model_form(const Rational& v) const { return model_.minimize ? v : Rational(-v); }

  // Solves one node's LP and either records an incumbent or enqueues children.
  void process(const Node* node, const std::shared_ptr<SimplexEngine>& engine) {
    const std::size_t node_id = node ? node->id : next_id_++;
    const std::size_t depth = node ? node->depth : 0;
    ++result_.node_count;
    const std::size_t before = engine->iterations();
    const LPStatus status = engine->solve(deadline_);
    result_.lp_iterations += engine->iterations() - before;
    const Rational shown = node ? node->bound : Rational(0);
    switch (status) {
      case LPStatus::time_limit:
        result_.time_limit_reached = true;
        // The node stays open so its bound still counts.
        if (node != nullptr) {
          unsolved_bounds_.push_back(node->bound);
        } else {
          root_unsolved_ = true;
        }
        log(node_id, depth, shown, std::nullopt, "time_limit");
        return;
      case LPStatus::infeasible:
        log(node_id, depth, shown, std::nullopt, "infeasible");
        return;
      case LPStatus::unbounded:
        if (node == nullptr) root_unbounded_ = true;
        log(node_id, depth, shown, std::nullopt, "unbounded");
        return;
      case LPStatus::optimal: break;
    }
    const Rational value = engine->objective();
    if (incumbent_value_ && value >= *incumbent_value_) {
      log(node_id, depth, value, std::nullopt, "pruned");
      return;
    }
    const std::optional<std::size_t> var = choose_branch(*engine);
    if (!var) {
      std::vector<Rational> x(problem_.num_vars);
      for (std::size_t j = 0; j < problem_.num_vars; ++j) x[j] = engine->value(j);
      incumbent_ = std::move(x);
      incumbent_value_ = value;
      log(node_id, depth, value, std::nullopt, "integral");
      return;
    }
    log(node_id, depth, value, *var, "branched");
    std::shared_ptr<const SimplexEngine> parent = engine;
    const Rational& frac = engine->value(*var);
    Node down{next_id_++, depth + 1, value, parent, *var, problem_.lower[*var], Rational(0)};
    Node up{next_id_++, depth + 1, value, parent, *var, Rational(1), problem_.upper[*var]};
    // Depth-first explores the nearer rounding first.
    if (frac >= Rational(1, 2)) {
      push(std::move(down));
      push(std::move(up));
    } else {
      push(std::move(up));
      push(std::move(down));
    }
  }

  std::optional<std::size_t> choose_branch(const SimplexEngine& engine) const {
    std::optional<std::size_t> best;
    Rational best_frac;
    const bool by_priority = options_.rule == BranchRule::priority_then_most_fractional;
    for (std::size_t j : binaries_) {
      const Rational& v = engine.value(j);
      if (v.get_den() == 1) continue;
      Rational f = fractionality(v);
      if (!best) {
        best = j;
        best_frac = std::move(f);
        continue;
      }
      if (by_priority) {
        const auto& pj = model_.variables()[j].priority;
        const auto& pb = model_.variables()[*best].priority;
        if (pj != pb) {
          if (pj && (!pb || *pj > *pb)) {
            best = j;
            best_frac = std::move(f);
          }
          continue;
        }
      }
      if (f > best_frac) {
        best = j;
        best_frac = std::move(f);
      }
    }
    return best;
  }

  void push(Node node) {
    if (options_.order == NodeOrder::depth_first) {
      open_.push_back(std::move(node));
      return;
    }
    // Stable insertion keeps FIFO order among equal bounds.
    auto it = std::upper_bound(open_.begin(), open_.end(), node.bound,
                               [](const Rational& b, const Node& n) { return b < n.bound; });
    open_.insert(it, std::move(node));
  }

  Node pop() {
    if (options_.order == NodeOrder::depth_first) {
      Node n = std::move(open_.back());
      open_.pop_back();
      return n;
    }
    Node n = std::move(open_.front());
    open_.pop_front();
    return n;
  }

  void log(std::size_t id, std::size_t depth, const Rational& bound, std::optional<std::size_t> var,
           const char* status) const {
    if (options_.log == nullptr) return;
    nlohmann::ordered_json j;
    j["node"] = id;
    j["depth"] = depth;
    j["bound"] = idealpack::to_string(model_form(bound));
    j["incumbent"] = incumbent_value_ ? nlohmann::ordered_json(idealpack::to_string(model_form(*incumbent_value_)))
                                      : nlohmann::ordered_json(nullptr);
    j["branch_var"] = var ? nlohmann::ordered_json(model_.variables()[*var].name) : nlohmann::ordered_json(nullptr);
    j["status"] = status;
    *options_.log << j.dump() << '\n';
  }

  BnBResult finish() {
    if (incumbent_) {
      result_.incumbent = incumbent_;
      result_.incumbent_objective = model_form(*incumbent_value_);
    }
    const bool limited = result_.node_limit_reached || result_.time_limit_reached;
    std::optional<Rational> bound;
    auto lower = [&](const Rational& b) {
      if (!bound || b < *bound) bound = b;
    };
    for (const Node& n : open_) lower(n.bound);
    for (const Rational& b : unsolved_bounds_) lower(b);
    if (limited) {
      if (root_unsolved_) bound.reset();
      if (incumbent_value_ && bound && *incumbent_value_ < *bound) bound = incumbent_value_;
      result_.status = incumbent_ ? MILPStatus::bounded : MILPStatus::no_solution;
    } else if (root_unbounded_) {
      result_.status = MILPStatus::unbounded;
    } else if (incumbent_) {
      result_.status = MILPStatus::optimal;
      bound = incumbent_value_;
    } else {
      result_.status = MILPStatus::infeasible;
    }
    if (bound) result_.best_bound = model_form(*bound);
    return result_;
  }

  const MBLPModel& model_;
  const SolveOptions& options_;
  LPProblem problem_;
  std::vector<std::size_t> binaries_;
  Deadline deadline_;
  std::deque<Node> open_;
  std::vector<Rational> unsolved_bounds_;
  bool root_unsolved_ = false;
  bool root_unbounded_ = false;
  std::optional<std::vector<Rational>> incumbent_;
  std::optional<Rational> incumbent_value_;
  std::size_t next_id_ = 0;
  BnBResult result_;
};

}  // namespace

BnBResult solve_milp(const MBLPModel& model, const SolveOptions& options) {
  return BranchAndBound(model, options).run();
}

}  // namespace idealpack

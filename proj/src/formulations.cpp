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

#include "idealpack/formulations.hpp"

#include <algorithm>

namespace idealpack {
namespace {

Rational min_of(const Rational& a, const Rational& b) { return a < b ? a : b; }
Rational max_of(const Rational& a, const Rational& b) { return a < b ? b : a; }

int id_of(std::size_t index) { return static_cast<int>(index) + 1; }

RowTag tag(std::string family, std::vector<int> ids, std::optional<Axis> axis = std::nullopt) {
  return RowTag{std::move(family), std::move(ids), axis};
}

// Shared scaffolding: center columns and the per-disjunct (k, l) lookup.
class Builder {
 public:
  Builder(FormulationKind kind, const DerivedParams& params, const FormulationOptions& opts)
      : p_(params), n_(params.size()) {
    m_.kind = kind;
    m_.options = opts;
    const bool bounded = opts.static_bounds || kind == FormulationKind::sbl;
    centers_.resize(n_ * 2);
    for (Axis s : kAxes) {
      for (std::size_t i = 0; i < n_; ++i) {
        Variable v;
        v.name = center_name(id_of(i), s);
        if (bounded) {
          v.lower = p_.lb(i, s);
          v.upper = p_.ub(i, s);
        }
        centers_[i * 2 + index(s)] = m_.add_variable(std::move(v));
      }
    }
  }

  std::size_t c(std::size_t i, Axis s) const { return centers_[i * 2 + index(s)]; }
  std::size_t binary(const std::string& name) {
    Variable v;
    v.name = name;
    v.kind = VarKind::binary;
    return m_.add_variable(std::move(v));
  }

  const DerivedParams& p() const { return p_; }
  std::size_t n() const { return n_; }
  MBLPModel& model() { return m_; }
  bool dynamic_bounds() const { return !m_.options.static_bounds; }

  MBLPModel finish() {
    if (m_.options.sequence_pair && n_ >= 3) return add_sequence_pair(std::move(m_), n_);
    return std::move(m_);
  }

 private:
  const DerivedParams& p_;
  std::size_t n_;
  MBLPModel m_;
  std::vector<std::size_t> centers_;
};

struct PairDisjunct {
  std::size_t k;
  std::size_t l;
  Axis s;
};

PairDisjunct resolve(std::size_t i, std::size_t j, const Disjunct& d) {
  return d.forward ? PairDisjunct{i, j, d.axis} : PairDisjunct{j, i, d.axis};
}

// Dynamic bound rows shared by SU and RU.
void add_unary_lower(Builder& b, const PairDisjunct& t, std::size_t delta) {
  const DerivedParams& p = b.p();
  const Rational& pm = p.pm(t.k, t.l, t.s);
  LinearExpr lb;
  lb.add(b.c(t.l, t.s), 1).add(delta, -(p.lb(t.k, t.s) + pm - p.lb(t.l, t.s)));
  b.model().add_row(lb, Sense::ge, p.lb(t.l, t.s), tag("lb", {id_of(t.k), id_of(t.l)}, t.s));
}

void add_unary_upper(Builder& b, const PairDisjunct& t, std::size_t delta) {
  const DerivedParams& p = b.p();
  const Rational& pm = p.pm(t.k, t.l, t.s);
  LinearExpr ub;
  ub.add(b.c(t.k, t.s), 1).add(delta, -(p.ub(t.l, t.s) - pm - p.ub(t.k, t.s)));
  b.model().add_row(ub, Sense::le, p.ub(t.k, t.s), tag("ub", {id_of(t.k), id_of(t.l)}, t.s));
}

MBLPModel build_unary(FormulationKind kind, const DerivedParams& params, const FormulationOptions& opts) {
  Builder b(kind, params, opts);
  const std::size_t n = b.n();
  struct PairVars {
    std::size_t i, j;
    std::array<std::size_t, 4> delta;
  };
  std::vector<PairVars> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      PairVars pv{i, j, {}};
      for (std::size_t t = 0; t < 4; ++t) {
        const PairDisjunct d = resolve(i, j, kDisjunctOrder[t]);
        pv.delta[t] = b.binary(unary_name(id_of(d.k), id_of(d.l), d.s));
      }
      pairs.push_back(pv);
    }
  }
  const DerivedParams& p = params;
  MBLPModel& m = b.model();
  for (const PairVars& pv : pairs) {
    if (b.dynamic_bounds()) {
      for (std::size_t t = 0; t < 4; ++t) add_unary_lower(b, resolve(pv.i, pv.j, kDisjunctOrder[t]), pv.delta[t]);
      for (std::size_t t = 0; t < 4; ++t) add_unary_upper(b, resolve(pv.i, pv.j, kDisjunctOrder[t]), pv.delta[t]);
    }
    for (std::size_t t = 0; t < 4; ++t) {
      const PairDisjunct d = resolve(pv.i, pv.j, kDisjunctOrder[t]);
      const Rational& pm_kl = p.pm(d.k, d.l, d.s);
      LinearExpr row;
      row.add(b.c(d.k, d.s), 1).add(b.c(d.l, d.s), -1);
      if (kind == FormulationKind::su) {
        row.add(pv.delta[t], -(p.lb(d.l, d.s) - pm_kl - p.ub(d.k, d.s)));
        m.add_row(row, Sense::le, p.ub(d.k, d.s) - p.lb(d.l, d.s), tag("prec", {id_of(d.k), id_of(d.l)}, d.s));
      } else {
        // The reverse disjunct (l,k,s) sits two slots away in Gray order.
        const std::size_t rev = pv.delta[(t + 2) % 4];
        const Rational& pm_lk = p.pm(d.l, d.k, d.s);
        row.add(pv.delta[t], pm_lk + pm_kl).add(rev, -(p.ub(d.k, d.s) - pm_lk - p.lb(d.l, d.s)));
        m.add_row(row, Sense::le, pm_lk, tag("prec", {id_of(d.k), id_of(d.l)}, d.s));
      }
    }
    if (kind == FormulationKind::ru) {
      for (Axis s : kAxes) {
        const std::size_t t = s == Axis::x ? 0 : 1;
        LinearExpr row;
        row.add(pv.delta[t], 1).add(pv.delta[t + 2], 1);
        m.add_row(row, Sense::le, 1, tag("tight", {id_of(pv.i), id_of(pv.j)}, s));
      }
    }
    LinearExpr disj;
    for (std::size_t v : pv.delta) disj.add(v, 1);
    m.add_row(disj, kind == FormulationKind::su ? Sense::eq : Sense::ge, 1, tag("disj", {id_of(pv.i), id_of(pv.j)}));
  }
  return b.finish();
}

MBLPModel build_binary(FormulationKind kind, const DerivedParams& params, const FormulationOptions& opts) {
  Builder b(kind, params, opts);
  const std::size_t n = b.n();
  const bool mccormick = kind == FormulationKind::sbm;
  struct PairVars {
    std::size_t i, j, ij, ji, big_d;
  };
  std::vector<PairVars> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      PairVars pv{i, j, 0, 0, 0};
      pv.ij = b.binary(binary_name(id_of(i), id_of(j)));
      pv.ji = b.binary(binary_name(id_of(j), id_of(i)));
      pairs.push_back(pv);
    }
  }
  MBLPModel& m = b.model();
  if (mccormick) {
    for (PairVars& pv : pairs) {
      Variable v;
      v.name = product_name(id_of(pv.i), id_of(pv.j));
      v.lower = 0;
      pv.big_d = m.add_variable(std::move(v));
    }
  }
  const DerivedParams& p = params;
  for (const PairVars& pv : pairs) {
    std::array<LinearExpr, 4> cmp;
    for (std::size_t t = 0; t < 4; ++t) {
      const BinaryCode code = gray_code(kDisjunctOrder[t]);
      cmp[t] = mccormick ? bcf_tilde(code, pv.ij, pv.ji, pv.big_d) : bcf_bar(code, pv.ij, pv.ji);
    }
    if (b.dynamic_bounds()) {
      for (std::size_t t = 0; t < 4; ++t) {
        const PairDisjunct d = resolve(pv.i, pv.j, kDisjunctOrder[t]);
        const Rational top = p.lb(d.k, d.s) + p.pm(d.k, d.l, d.s);
        LinearExpr row;
        row.add(b.c(d.l, d.s), 1).add(cmp[t], top - p.lb(d.l, d.s));
        m.add_row(row, Sense::ge, top, tag("lb", {id_of(d.k), id_of(d.l)}, d.s));
      }
      for (std::size_t t = 0; t < 4; ++t) {
        const PairDisjunct d = resolve(pv.i, pv.j, kDisjunctOrder[t]);
        const Rational bottom = p.ub(d.l, d.s) - p.pm(d.k, d.l, d.s);
        LinearExpr row;
        row.add(b.c(d.k, d.s), 1).add(cmp[t], bottom - p.ub(d.k, d.s));
        m.add_row(row, Sense::le, bottom, tag("ub", {id_of(d.k), id_of(d.l)}, d.s));
      }
    }
    for (std::size_t t = 0; t < 4; ++t) {
      const PairDisjunct d = resolve(pv.i, pv.j, kDisjunctOrder[t]);
      const Rational& pm = p.pm(d.k, d.l, d.s);
      LinearExpr row;
      row.add(b.c(d.l, d.s), 1).add(b.c(d.k, d.s), -1).add(cmp[t], -(p.lb(d.l, d.s) - pm - p.ub(d.k, d.s)));
      m.add_row(row, Sense::ge, pm, tag("prec", {id_of(d.k), id_of(d.l)}, d.s));
    }
    if (mccormick) {
      const int i = id_of(pv.i);
      const int j = id_of(pv.j);
      LinearExpr m3;
      m3.add(pv.ij, 1).add(pv.ji, 1).add(pv.big_d, -1);
      m.add_row(m3, Sense::le, 1, tag("mccor3", {i, j}));
      LinearExpr m1;
      m1.add(pv.ij, 1).add(pv.big_d, -1);
      m.add_row(m1, Sense::ge, 0, tag("mccor12", {i, j}));
      LinearExpr m2;
      m2.add(pv.ji, 1).add(pv.big_d, -1);
      m.add_row(m2, Sense::ge, 0, tag("mccor12", {j, i}));
    }
  }
  return b.finish();
}

}  // namespace

BinaryCode gray_code(const Disjunct& d) {
  if (d.forward) return d.axis == Axis::x ? BinaryCode{0, 0} : BinaryCode{1, 0};
  return d.axis == Axis::x ? BinaryCode{1, 1} : BinaryCode{0, 1};
}

Rational bcf_bar(const BinaryCode& a, const std::array<Rational, 2>& b) {
  Rational out = 0;
  for (std::size_t t = 0; t < 2; ++t) out += a[t] == 1 ? Rational(1 - b[t]) : b[t];
  return out;
}

LinearExpr bcf_bar(const BinaryCode& a, std::size_t var_ij, std::size_t var_ji) {
  LinearExpr e;
  const std::array<std::size_t, 2> vars = {var_ij, var_ji};
  for (std::size_t t = 0; t < 2; ++t) {
    if (a[t] == 1) {
      e.add_constant(1).add(vars[t], -1);
    } else {
      e.add(vars[t], 1);
    }
  }
  return e;
}

Rational bcf_tilde(const BinaryCode& a, const Rational& d_ij, const Rational& d_ji, const Rational& big_d) {
  // 1 - prod_t (1 - |a_t - b_t|) with the product d_ij * d_ji replaced by D.
  const bool ij = a[0] == 1;
  const bool ji = a[1] == 1;
  if (!ij && !ji) return d_ij + d_ji - big_d;
  if (ij && !ji) return 1 - d_ij + big_d;
  if (ij && ji) return 1 - big_d;
  return 1 - d_ji + big_d;
}

LinearExpr bcf_tilde(const BinaryCode& a, std::size_t var_ij, std::size_t var_ji, std::size_t var_big_d) {
  const bool ij = a[0] == 1;
  const bool ji = a[1] == 1;
  LinearExpr e;
  if (!ij && !ji) {
    e.add(var_ij, 1).add(var_ji, 1).add(var_big_d, -1);
  } else if (ij && !ji) {
    e.add_constant(1).add(var_ij, -1).add(var_big_d, 1);
  } else if (ij && ji) {
    e.add_constant(1).add(var_big_d, -1);
  } else {
    e.add_constant(1).add(var_ji, -1).add(var_big_d, 1);
  }
  return e;
}

std::string center_name(int id, Axis s) { return "c_" + std::to_string(id) + "_" + axis_name(s); }

std::string unary_name(int k, int l, Axis s) {
  return "d_" + std::to_string(k) + "_" + std::to_string(l) + "_" + axis_name(s);
}

std::string binary_name(int k, int l) { return "d_" + std::to_string(k) + "_" + std::to_string(l); }

std::string product_name(int i, int j) { return "D_" + std::to_string(i) + "_" + std::to_string(j); }

MBLPModel build_su(const DerivedParams& params, const FormulationOptions& opts) {
  return build_unary(FormulationKind::su, params, opts);
}

MBLPModel build_ru(const DerivedParams& params, const FormulationOptions& opts) {
  return build_unary(FormulationKind::ru, params, opts);
}

MBLPModel build_sbl(const DerivedParams& params, const FormulationOptions& opts) {
  return build_binary(FormulationKind::sbl, params, opts);
}

MBLPModel build_sbm(const DerivedParams& params, const FormulationOptions& opts) {
  return build_binary(FormulationKind::sbm, params, opts);
}

MBLPModel build_formulation(FormulationKind kind, const DerivedParams& params, const FormulationOptions& opts) {
  switch (kind) {
    case FormulationKind::su: return build_su(params, opts);
    case FormulationKind::ru: return build_ru(params, opts);
    case FormulationKind::sbl: return build_sbl(params, opts);
    case FormulationKind::sbm: return build_sbm(params, opts);
    case FormulationKind::generic: break;
  }
  throw std::invalid_argument("no builder for formulation " + to_string(kind));
}

bool is_unary(FormulationKind kind) { return kind == FormulationKind::su || kind == FormulationKind::ru; }

MBLPModel add_sequence_pair(MBLPModel model, std::size_t n_objects) {
  if (n_objects < 3) throw NotApplicable("sequence-pair rows need at least three objects");
  auto var = [&](const std::string& name) { return model.variable(name); };
  if (is_unary(model.kind)) {
    for (int a = 1; a <= static_cast<int>(n_objects); ++a) {
      for (int b = a + 1; b <= static_cast<int>(n_objects); ++b) {
        for (int c = b + 1; c <= static_cast<int>(n_objects); ++c) {
          std::array<int, 3> perm = {a, b, c};
          do {
            const auto [i, j, k] = perm;
            for (Axis s : kAxes) {
              LinearExpr row;
              row.add(var(unary_name(i, j, s)), 1).add(var(unary_name(j, k, s)), 1).add(var(unary_name(i, k, s)), -1);
              model.add_row(row, Sense::le, 1, tag("spu", {i, j, k}, s));
            }
          } while (std::next_permutation(perm.begin(), perm.end()));
        }
      }
    }
    return model;
  }
  if (model.kind != FormulationKind::sbl && model.kind != FormulationKind::sbm) {
    throw NotApplicable("sequence-pair rows need a packing formulation");
  }
  for (int i = 1; i <= static_cast<int>(n_objects); ++i) {
    for (int j = i + 1; j <= static_cast<int>(n_objects); ++j) {
      for (int k = j + 1; k <= static_cast<int>(n_objects); ++k) {
        LinearExpr fwd;
        fwd.add(var(binary_name(i, j)), 1).add(var(binary_name(j, k)), 1).add(var(binary_name(i, k)), -1);
        LinearExpr rev;
        rev.add(var(binary_name(j, i)), 1).add(var(binary_name(k, j)), 1).add(var(binary_name(k, i)), -1);
        model.add_row(fwd, Sense::ge, 0, tag("spbflo", {i, j, k}));
        model.add_row(fwd, Sense::le, 1, tag("spbfhi", {i, j, k}));
        model.add_row(rev, Sense::ge, 0, tag("spbrlo", {i, j, k}));
        model.add_row(rev, Sense::le, 1, tag("spbrhi", {i, j, k}));
      }
    }
  }
  return model;
}

std::map<std::string, Rational> branching_priorities(const Instance& inst, bool unary) {
  const std::size_t n = inst.size();
  auto clear_sum = [&](std::size_t i, Axis s) -> Rational {
    return inst.object(i).clear_plus(s) + inst.object(i).clear_minus(s);
  };
  auto area = [&](std::size_t i) -> Rational { return inst.object(i).dim(Axis::x) * inst.object(i).dim(Axis::y); };
  std::map<std::string, Rational> out;
  if (unary) {
    for (Axis s : kAxes) {
      Rational max_clear = 0;
      Rational max_dim = 0;
      for (std::size_t k = 0; k < n; ++k) {
        max_clear = max_of(max_clear, clear_sum(k, s));
        max_dim = max_of(max_dim, inst.object(k).dim(s));
      }
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (i == j) continue;
          const Rational inner = min_of(inst.object(i).dim(s), inst.object(j).dim(s)) +
                                 (max_dim + 1) * min_of(area(i), area(j));
          out[unary_name(id_of(i), id_of(j), s)] =
              min_of(clear_sum(i, s), clear_sum(j, s)) + (max_clear + 1) * inner;
        }
      }
    }
    return out;
  }
  auto total_clear = [&](std::size_t i) -> Rational { return clear_sum(i, Axis::x) + clear_sum(i, Axis::y); };
  Rational max_clear = 0;
  for (std::size_t k = 0; k < n; ++k) max_clear = max_of(max_clear, total_clear(k));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      out[binary_name(id_of(i), id_of(j))] =
          min_of(total_clear(i), total_clear(j)) + (max_clear + 1) * min_of(area(i), area(j));
    }
  }
  return out;
}

void apply_branching_priorities(MBLPModel& model, const Instance& inst) {
  const auto priorities = branching_priorities(inst, is_unary(model.kind));
  for (const auto& [name, value] : priorities) {
    if (auto idx = model.find_variable(name)) model.variables()[*idx].priority = value;
  }
}

Instance strip_instance(const Instance& inst) {
  if (inst.size() == 0) throw std::invalid_argument("strip packing needs at least one object");
  return inst.with_height(greedy_initial_layout(inst).height);
}

MBLPModel build_strip_packing(const Instance& inst, FormulationKind kind, const FormulationOptions& opts) {
  const Instance capped = strip_instance(inst);
  const DerivedParams params = DerivedParams::from_instance(capped);
  MBLPModel m = build_formulation(kind, params, opts);
  for (std::size_t i = 0; i < capped.size(); ++i) {
    for (Axis s : kAxes) {
      Variable& v = m.variables()[m.variable(center_name(id_of(i), s))];
      v.lower = params.lb(i, s);
      v.upper = params.ub(i, s);
    }
  }
  Variable h;
  h.name = "h";
  for (const ObjectSpec& o : capped.objects()) {
    if (!h.lower || o.extent(Axis::y) > *h.lower) h.lower = o.extent(Axis::y);
  }
  const std::size_t hv = m.add_variable(std::move(h));
  for (std::size_t i = 0; i < capped.size(); ++i) {
    const ObjectSpec& o = capped.object(i);
    LinearExpr row;
    row.add(hv, 1).add(m.variable(center_name(id_of(i), Axis::y)), -1);
    m.add_row(row, Sense::ge, o.dim(Axis::y) / 2 + o.clear_plus(Axis::y), tag("hcap", {id_of(i)}));
  }
  LinearExpr obj;
  obj.add(hv, 1);
  m.set_objective(obj, true);
  if (opts.branch_priorities) apply_branching_priorities(m, capped);
  return m;
}

std::vector<Rational> assignment_from_layout(const MBLPModel& model, const Instance& inst,
                                             const PackingSolution& layout) {
  const std::size_t n = inst.size();
  if (layout.centers.size() != n) throw std::invalid_argument("layout size does not match the instance");
  const DerivedParams p = DerivedParams::from_instance(inst);
  std::vector<Rational> x(model.num_variables());
  for (std::size_t i = 0; i < n; ++i) {
    for (Axis s : kAxes) x[model.variable(center_name(id_of(i), s))] = layout.centers[i][index(s)];
  }
  if (auto hv = model.find_variable("h")) {
    Rational top = 0;
    for (std::size_t i = 0; i < n; ++i) top = max_of(top, clearance_top(inst, layout, i));
    x[*hv] = top;
  }
  auto precedes = [&](const PairDisjunct& d) {
    return layout.centers[d.k][index(d.s)] + p.pm(d.k, d.l, d.s) <= layout.centers[d.l][index(d.s)];
  };
  // Vertical separations first, then horizontal.
  const std::array<std::size_t, 4> preference = {1, 3, 0, 2};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (model.kind == FormulationKind::ru) {
        for (const Disjunct& dj : kDisjunctOrder) {
          const PairDisjunct d = resolve(i, j, dj);
          x[model.variable(unary_name(id_of(d.k), id_of(d.l), d.s))] = precedes(d) ? 1 : 0;
        }
        continue;
      }
      std::optional<std::size_t> chosen;
      for (std::size_t t : preference) {
        if (precedes(resolve(i, j, kDisjunctOrder[t]))) {
          chosen = t;
          break;
        }
      }
      if (!chosen) {
        throw std::invalid_argument("objects " + std::to_string(id_of(i)) + " and " + std::to_string(id_of(j)) +
                                    " are not separated in the layout");
      }
      if (model.kind == FormulationKind::su) {
        for (std::size_t t = 0; t < 4; ++t) {
          const PairDisjunct d = resolve(i, j, kDisjunctOrder[t]);
          x[model.variable(unary_name(id_of(d.k), id_of(d.l), d.s))] = t == *chosen ? 1 : 0;
        }
      } else {
        const BinaryCode code = gray_code(kDisjunctOrder[*chosen]);
        x[model.variable(binary_name(id_of(i), id_of(j)))] = code[0];
        x[model.variable(binary_name(id_of(j), id_of(i)))] = code[1];
        if (auto dv = model.find_variable(product_name(id_of(i), id_of(j)))) x[*dv] = code[0] * code[1];
      }
    }
  }
  return x;
}

PackingSolution layout_from_assignment(const MBLPModel& model, const Instance& inst,
                                       const std::vector<Rational>& x) {
  PackingSolution sol;
  sol.centers.resize(inst.size());
  for (std::size_t i = 0; i < inst.size(); ++i) {
    for (Axis s : kAxes) sol.centers[i][index(s)] = x.at(model.variable(center_name(id_of(i), s)));
  }
  if (auto hv = model.find_variable("h")) {
    sol.height = x.at(*hv);
  } else {
    sol.height = 0;
    for (std::size_t i = 0; i < inst.size(); ++i) sol.height = max_of(sol.height, clearance_top(inst, sol, i));
  }
  return sol;
}

FamilyCounts family_counts(const MBLPModel& model) {
  FamilyCounts c;
  c.precedence = model.count_family("prec");
  c.bounds = model.count_family("lb") + model.count_family("ub");
  c.logic = model.count_family("disj") + model.count_family("tight") + model.count_family("mccor3") +
            model.count_family("mccor12");
  for (const Variable& v : model.variables()) {
    if (v.kind == VarKind::binary) {
      ++c.binaries;
    } else if (!v.name.empty() && v.name[0] == 'D') {
      ++c.continuous_aux;
    }
  }
  return c;
}

}  // namespace idealpack

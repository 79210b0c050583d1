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

#include "idealpack/idealness.hpp"

#include <algorithm>

#include "idealpack/covers.hpp"
#include "idealpack/formulations.hpp"

namespace idealpack {

std::string to_string(Verdict verdict) {
  return verdict == Verdict::ideal ? "ideal" : "fractional-vertex-found";
}

std::string to_string(IdealnessMethod method) {
  return method == IdealnessMethod::enumeration ? "enumeration" : "iom";
}

IdealnessMethod parse_idealness_method(const std::string& text) {
  if (text == "enumeration") return IdealnessMethod::enumeration;
  if (text == "iom") return IdealnessMethod::iom;
  throw std::invalid_argument("unknown idealness method '" + text + "'");
}

Instance two_squares_instance() {
  const std::array<Rational, 4> no_clearance = {0, 0, 0, 0};
  return Instance(Region{10, 10}, {ObjectSpec{1, {2, 2}, no_clearance}, ObjectSpec{2, {2, 2}, no_clearance}});
}

namespace {

RelaxationPolytope pairwise_polytope(FormulationKind kind, const DerivedParams& params) {
  if (params.size() != 2) throw std::invalid_argument("idealness checks take exactly two objects");
  return relax(build_formulation(kind, params));
}

void describe(IdealnessReport& report, const RelaxationPolytope& poly) {
  for (const Variable& v : poly.variables) report.variable_names.push_back(v.name);
  for (const LinearRow& r : poly.rows) report.row_names.push_back(r.tag.name());
}

bool better_witness(const ExtremePoint& a, const ExtremePoint& b) {
  if (a.penalty != b.penalty) return a.penalty > b.penalty;
  if (a.tight_set.size() != b.tight_set.size()) return a.tight_set.size() > b.tight_set.size();
  return std::lexicographical_compare(b.point.begin(), b.point.end(), a.point.begin(), a.point.end());
}

std::vector<std::size_t> tight_rows(const RelaxationPolytope& poly, const RatVector& point) {
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < poly.rows.size(); ++r) {
    if (poly.rows[r].tight_at(point)) out.push_back(r);
  }
  return out;
}

}  // namespace

bool is_vertex(const RelaxationPolytope& poly, const RatVector& point) {
  if (point.size() != poly.dimension()) return false;
  std::vector<const LinearRow*> active;
  for (const LinearRow& e : poly.equalities) {
    if (!e.satisfied_by(point)) return false;
    active.push_back(&e);
  }
  for (const LinearRow& r : poly.rows) {
    if (!r.satisfied_by(point)) return false;
    if (r.tight_at(point)) active.push_back(&r);
  }
  if (active.empty()) return poly.dimension() == 0;
  std::vector<RatVector> coefs;
  for (const LinearRow* r : active) {
    RatVector row(poly.dimension(), Rational(0));
    for (const Term& t : r->terms) row[t.var] = t.coef;
    coefs.push_back(std::move(row));
  }
  return rank(RatMatrix::from_rows(coefs)) == poly.dimension();
}

IdealnessReport check_pairwise_ideal(FormulationKind kind, const DerivedParams& params,
                                     const EnumerationOptions& options) {
  const RelaxationPolytope poly = pairwise_polytope(kind, params);
  IdealnessReport report;
  report.kind = kind;
  report.method = IdealnessMethod::enumeration;
  report.params = params;
  describe(report, poly);
  for_each_extreme_point(
      poly,
      [&](const ExtremePoint& ep) {
        ++report.vertex_count;
        report.degenerate_count += ep.degenerate() ? 1 : 0;
        if (ep.penalty == 0) return;
        ++report.fractional_count;
        if (!report.witness || better_witness(ep, *report.witness)) report.witness = ep;
      },
      options);
  if (report.witness) {
    report.verdict = Verdict::fractional_vertex_found;
    report.max_penalty = report.witness->penalty;
  }
  return report;
}

IdealnessReport check_pairwise_ideal_iom(FormulationKind kind, const DerivedParams& params,
                                         const IomOptions& options) {
  const RelaxationPolytope poly = pairwise_polytope(kind, params);
  IdealnessReport report;
  report.kind = kind;
  report.method = IdealnessMethod::iom;
  report.params = params;
  describe(report, poly);
  std::vector<CoverSet> covers;
  if (kind == FormulationKind::su || kind == FormulationKind::ru || kind == FormulationKind::sbm) {
    for (const CoverFamily& f : known_covers(kind)) covers.push_back(resolve_cover(poly, f.rows));
  }
  IomResult res = solve_iom(poly, std::move(covers), options);
  if (res.objective) report.max_penalty = *res.objective;
  if (res.objective && *res.objective > 0) {
    report.verdict = Verdict::fractional_vertex_found;
    ExtremePoint ep;
    ep.point = res.point;
    ep.tight_set = tight_rows(poly, res.point);
    ep.basis = res.tight;
    ep.penalty = penalty(res.point, poly.binaries);
    report.witness = std::move(ep);
  }
  report.iom = std::move(res);
  return report;
}

namespace {

Rational grid_value(std::mt19937_64& rng, const Rational& lo, const Rational& hi, int den) {
  // Uniform over {lo, lo + 1/den, ..., hi} after rounding hi down to the grid.
  const Rational scaled = (hi - lo) * den;
  const mpz_class steps_z = scaled.get_num() / scaled.get_den();
  const long steps = steps_z.get_si();
  std::uniform_int_distribution<long> pick(0, steps);
  Rational v = lo + Rational(pick(rng), den);
  v.canonicalize();
  return v;
}

}  // namespace

DerivedParams sample_pairwise_params(std::mt19937_64& rng, const SamplingConfig& config) {
  const int den = config.grid_denominator;
  if (den < 1) throw std::invalid_argument("grid denominator must be positive");
  const Rational step(1, den);
  for (;;) {
    std::array<Rational, 4> lb, ub, pm;
    for (std::size_t c = 0; c < 4; ++c) {
      Rational a = grid_value(rng, 0, config.region, den);
      Rational b = grid_value(rng, 0, config.region, den);
      if (b < a) std::swap(a, b);
      lb[c] = a;
      ub[c] = b;
    }
    bool room = true;
    // pm order: (1,2,x), (1,2,y), (2,1,x), (2,1,y); lb/ub order: (1,x), (1,y), (2,x), (2,y).
    for (std::size_t t = 0; t < 4 && room; ++t) {
      const std::size_t k = t / 2;
      const std::size_t l = 1 - k;
      const std::size_t s = t % 2;
      const Rational span = ub[l * 2 + s] - lb[k * 2 + s];
      if (config.boundary) {
        room = span > 0;
        pm[t] = span;
        continue;
      }
      const Rational cap = span - config.epsilon;
      room = cap >= step;
      if (room) pm[t] = grid_value(rng, step, cap, den);
    }
    if (room) return pairwise_params(lb, ub, pm);
  }
}

DerivedParams sample_mixed_boundary_params(std::mt19937_64& rng, const SamplingConfig& config) {
  const DerivedParams p = sample_pairwise_params(rng, config);
  std::array<Rational, 4> lb, ub, pm;
  for (std::size_t i = 0; i < 2; ++i) {
    for (Axis s : {Axis::x, Axis::y}) {
      lb[i * 2 + index(s)] = p.lb(i, s);
      ub[i * 2 + index(s)] = p.ub(i, s);
    }
  }
  for (std::size_t t = 0; t < 4; ++t) {
    const std::size_t k = t / 2;
    const Axis s = t % 2 == 0 ? Axis::x : Axis::y;
    pm[t] = rng() % 2 == 0 ? p.pm(k, 1 - k, s) : Rational(ub[(1 - k) * 2 + index(s)] - lb[k * 2 + index(s)]);
  }
  return pairwise_params(lb, ub, pm);
}

CampaignReport parametric_campaign(FormulationKind kind, const CampaignConfig& config) {
  CampaignReport report;
  report.kind = kind;
  report.config = config;
  std::mt19937_64 rng(config.seed);
  const bool catalogued = kind == FormulationKind::su || kind == FormulationKind::ru || kind == FormulationKind::sbm;
  const std::vector<CoverFamily> families = catalogued ? known_covers(kind) : std::vector<CoverFamily>{};
  for (std::size_t n = 0; n < config.samples; ++n) {
    const DerivedParams params = sample_pairwise_params(rng, config.sampling);
    IdealnessReport r = check_pairwise_ideal(kind, params);
    ++report.samples;
    report.vertices += r.vertex_count;
    report.degenerate_vertices += r.degenerate_count;
    if (!families.empty()) {
      const RelaxationPolytope poly = pairwise_polytope(kind, params);
      bool non_minimal = false;
      for (const CoverFamily& f : families) {
        try {
          non_minimal |= !verify_cover(poly, f.rows).minimal;
        } catch (const NotDependent&) {
          non_minimal = true;
        }
      }
      report.non_minimal_cover_samples += non_minimal ? 1 : 0;
    }
    if (r.verdict == Verdict::fractional_vertex_found) {
      ++report.fractional_samples;
      const RelaxationPolytope poly = pairwise_polytope(kind, params);
      report.witnesses_reverified &= is_vertex(poly, r.witness->point);
      report.witnesses.push_back(std::move(r));
    }
  }
  return report;
}

std::vector<FamilyTally> tally_cover_families(FormulationKind kind, std::size_t draws, std::uint64_t seed,
                                              const SamplingConfig& sampling) {
  std::vector<FamilyTally> tallies;
  for (const CoverFamily& f : known_covers(kind)) {
    FamilyTally t;
    t.family = f;
    tallies.push_back(std::move(t));
  }
  std::mt19937_64 rng(seed);
  for (std::size_t d = 0; d < draws; ++d) {
    const DerivedParams p = sample_mixed_boundary_params(rng, sampling);
    for (FamilyTally& t : tallies) {
      const CoverCertificate cert = certify_cover(t.family, p);
      ++t.draws;
      t.conditions_held += cert.conditions_hold ? 1 : 0;
      t.dependent += cert.dependent ? 1 : 0;
      t.expected_minimal += cert.expect_minimal ? 1 : 0;
      if (cert.conditions_hold && !cert.dependent) ++t.dependence_failures;
      if (cert.dependent) {
        t.minimal += cert.circuit->minimal ? 1 : 0;
        if (cert.circuit->minimal != cert.expect_minimal) ++t.minimality_mismatches;
        if (!t.example) {
          t.example = cert;
          t.example_params = p;
        }
      }
    }
  }
  return tallies;
}

}  // namespace idealpack

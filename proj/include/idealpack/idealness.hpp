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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "idealpack/covers.hpp"
#include "idealpack/iom.hpp"
#include "idealpack/packing.hpp"
#include "idealpack/relaxation.hpp"

namespace idealpack {

enum class Verdict { ideal, fractional_vertex_found };
enum class IdealnessMethod { enumeration, iom };

std::string to_string(Verdict verdict);
std::string to_string(IdealnessMethod method);
IdealnessMethod parse_idealness_method(const std::string& text);

struct IdealnessReport {
  FormulationKind kind = FormulationKind::generic;
  IdealnessMethod method = IdealnessMethod::enumeration;
  Verdict verdict = Verdict::ideal;
  DerivedParams params;
  std::vector<std::string> variable_names;
  std::vector<std::string> row_names;
  // Enumeration: the vertex with the largest penalty, ties broken by the
  // larger tight set and then the lexicographically larger point.
  std::optional<ExtremePoint> witness;
  Rational max_penalty = 0;
  std::size_t vertex_count = 0;
  std::size_t degenerate_count = 0;
  std::size_t fractional_count = 0;
  // IOM only.
  std::optional<IomResult> iom;
};

// Two 2x2 clearance-free objects in a 10x10 region.
Instance two_squares_instance();

IdealnessReport check_pairwise_ideal(FormulationKind kind, const DerivedParams& params,
                                     const EnumerationOptions& options = {});

// Covers come from known_covers(kind) when the formulation has a catalogue and
// from separation alone otherwise.
IdealnessReport check_pairwise_ideal_iom(FormulationKind kind, const DerivedParams& params,
                                         const IomOptions& options = {});

struct SamplingConfig {
  Rational region = 10;
  Rational epsilon = 1;
  int grid_denominator = 4;
  // Sets every PM_kls to UB_ls - LB_ks exactly instead of sampling it.
  bool boundary = false;
};

// LB <= UB per coordinate within [0, region]; PM_kls drawn on the grid from
// (0, UB_ls - LB_ks - epsilon]. Tuples without room are redrawn.
DerivedParams sample_pairwise_params(std::mt19937_64& rng, const SamplingConfig& config);

// As above, then each PM_kls independently moved to UB_ls - LB_ks with
// probability 1/2.
DerivedParams sample_mixed_boundary_params(std::mt19937_64& rng, const SamplingConfig& config);

struct CampaignConfig {
  std::size_t samples = 500;
  std::uint64_t seed = 1;
  SamplingConfig sampling;
};

struct CampaignReport {
  FormulationKind kind = FormulationKind::generic;
  CampaignConfig config;
  std::size_t samples = 0;
  std::size_t fractional_samples = 0;
  std::size_t vertices = 0;
  std::size_t degenerate_vertices = 0;
  // Samples where some catalogued cover is dependent but not minimal.
  std::size_t non_minimal_cover_samples = 0;
  std::vector<IdealnessReport> witnesses;  // fractional samples only
  bool witnesses_reverified = true;        // each witness is a feasible vertex
};

CampaignReport parametric_campaign(FormulationKind kind, const CampaignConfig& config);

// Outcome of certify_cover for one catalogued family over many draws.
struct FamilyTally {
  CoverFamily family;
  std::size_t draws = 0;
  std::size_t conditions_held = 0;
  std::size_t dependent = 0;
  std::size_t minimal = 0;
  std::size_t expected_minimal = 0;
  std::size_t dependence_failures = 0;   // conditions held but rows independent
  std::size_t minimality_mismatches = 0;  // circuit minimality differs from the side conditions
  std::optional<CoverCertificate> example;  // first draw with a circuit
  DerivedParams example_params;

  bool ok() const { return dependence_failures == 0 && minimality_mismatches == 0; }
};

// Draws come from sample_mixed_boundary_params, so boundary cases appear.
std::vector<FamilyTally> tally_cover_families(FormulationKind kind, std::size_t draws, std::uint64_t seed,
                                              const SamplingConfig& sampling = {});

// Re-derives vertex status from scratch: feasibility and full tight rank.
bool is_vertex(const RelaxationPolytope& poly, const RatVector& point);

}  // namespace idealpack

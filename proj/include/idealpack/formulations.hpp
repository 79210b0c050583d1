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

// Mixed-binary embeddings of the four-way non-overlap disjunction.
//
// Unary embeddings (SU, RU) give every disjunct (k,l,s) of a pair its own
// indicator d_k_l_s. Binary embeddings (SB-L, SB-M) encode the four
// disjuncts of pair (i,j) with two binaries d_i_j, d_j_i using a reflected
// Gray code:
//
//     (i,j,x) -> 00    (i,j,y) -> 10    (j,i,x) -> 11    (j,i,y) -> 01
//
// and switch each disjunct on through a comparison function B that is zero
// exactly at its code. SB-L uses the L1 distance; SB-M removes the bilinear
// term with an auxiliary D_i_j = d_i_j * d_j_i and its McCormick envelope.
//
// Column order is fixed: centers (all x, then all y), then indicators pair by
// pair, then auxiliaries, then the strip height h.

#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "idealpack/model.hpp"
#include "idealpack/packing.hpp"

namespace idealpack {

class NotApplicable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// One disjunct of pair (i,j) with i < j: forward means k = i, l = j.
struct Disjunct {
  bool forward = true;
  Axis axis = Axis::x;
};

inline constexpr std::array<Disjunct, 4> kDisjunctOrder = {
    Disjunct{true, Axis::x}, Disjunct{true, Axis::y}, Disjunct{false, Axis::x}, Disjunct{false, Axis::y}};

using BinaryCode = std::array<int, 2>;
BinaryCode gray_code(const Disjunct& d);

Rational bcf_bar(const BinaryCode& a, const std::array<Rational, 2>& b);
LinearExpr bcf_bar(const BinaryCode& a, std::size_t var_ij, std::size_t var_ji);
Rational bcf_tilde(const BinaryCode& a, const Rational& d_ij, const Rational& d_ji, const Rational& big_d);
LinearExpr bcf_tilde(const BinaryCode& a, std::size_t var_ij, std::size_t var_ji, std::size_t var_big_d);

std::string center_name(int id, Axis s);
std::string unary_name(int k, int l, Axis s);
std::string binary_name(int k, int l);
std::string product_name(int i, int j);

MBLPModel build_su(const DerivedParams& params, const FormulationOptions& opts = {});
MBLPModel build_ru(const DerivedParams& params, const FormulationOptions& opts = {});
MBLPModel build_sbl(const DerivedParams& params, const FormulationOptions& opts = {});
MBLPModel build_sbm(const DerivedParams& params, const FormulationOptions& opts = {});
MBLPModel build_formulation(FormulationKind kind, const DerivedParams& params,
                            const FormulationOptions& opts = {});

bool is_unary(FormulationKind kind);

// Transitivity rows over every triple of objects: unary rows for SU/RU,
// binary rows for SB-L/SB-M. Throws NotApplicable below three objects.
MBLPModel add_sequence_pair(MBLPModel model, std::size_t n_objects);

// Priority per indicator name (d_k_l_s for unary kinds, d_i_j for binary).
std::map<std::string, Rational> branching_priorities(const Instance& inst, bool unary);
void apply_branching_priorities(MBLPModel& model, const Instance& inst);

// Minimize h over the strip whose height cap is the greedy layout height.
// Centers always carry their static bounds as variable bounds.
MBLPModel build_strip_packing(const Instance& inst, FormulationKind kind, const FormulationOptions& opts = {});

// The height cap used by build_strip_packing.
Instance strip_instance(const Instance& inst);

// Full variable assignment for a valid layout: centers, h, and indicators
// consistent with one satisfied disjunct per pair.
std::vector<Rational> assignment_from_layout(const MBLPModel& model, const Instance& inst,
                                             const PackingSolution& layout);

// Reads centers and h back out of a strip-packing assignment.
PackingSolution layout_from_assignment(const MBLPModel& model, const Instance& inst,
                                       const std::vector<Rational>& x);

struct FamilyCounts {
  std::size_t precedence = 0;
  std::size_t bounds = 0;
  std::size_t logic = 0;
  std::size_t binaries = 0;
  std::size_t continuous_aux = 0;
  bool operator==(const FamilyCounts&) const = default;
};

FamilyCounts family_counts(const MBLPModel& model);

}  // namespace idealpack

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

// Rectangle packing instances with per-face clearances.
//
// Object k precedes object l along axis s when
//     c_ks + PM_kls <= c_ls,
// where PM_kls = d_ks/2 + d_ls/2 + max(clear+_ks, clear-_ls). A layout is
// valid when every center lies in [LB_is, UB_is] and every pair satisfies at
// least one of the four precedence relations.

#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "idealpack/rational.hpp"

namespace idealpack {

enum class Axis : int { x = 0, y = 1 };
inline constexpr std::array<Axis, 2> kAxes = {Axis::x, Axis::y};

inline int index(Axis s) { return static_cast<int>(s); }
inline Axis other(Axis s) { return s == Axis::x ? Axis::y : Axis::x; }
inline char axis_name(Axis s) { return s == Axis::x ? 'x' : 'y'; }

class InvalidInstance : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ObjectTooWide : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Region {
  Rational width;
  Rational height;
};

struct ObjectSpec {
  int id = 0;
  std::array<Rational, 2> dims;
  // Clearance vector in the order (x-, y-, x+, y+).
  std::array<Rational, 4> clear;

  const Rational& dim(Axis s) const { return dims[index(s)]; }
  const Rational& clear_minus(Axis s) const { return clear[index(s)]; }
  const Rational& clear_plus(Axis s) const { return clear[2 + index(s)]; }
  // Footprint along s including both clearances.
  Rational extent(Axis s) const { return clear_minus(s) + dim(s) + clear_plus(s); }
};

// Validated, immutable problem input. Objects are stored sorted by id and
// ids are exactly 1..N.
class Instance {
 public:
  Instance() = default;
  Instance(Region region, std::vector<ObjectSpec> objects);

  const Region& region() const { return region_; }
  const std::vector<ObjectSpec>& objects() const { return objects_; }
  const ObjectSpec& object(std::size_t i) const { return objects_.at(i); }
  std::size_t size() const { return objects_.size(); }

  Instance with_height(const Rational& height) const;
  Instance subset(const std::vector<std::size_t>& indices) const;

 private:
  Region region_;
  std::vector<ObjectSpec> objects_;
};

// LB/UB/PM/BM, indexed by 0-based object position. May also be built
// directly from sampled values when no geometric instance exists.
class DerivedParams {
 public:
  DerivedParams() = default;
  static DerivedParams from_instance(const Instance& inst);
  // lb/ub are n x 2 (row-major by object); pm is n x n x 2.
  static DerivedParams from_raw(std::size_t n, std::vector<Rational> lb, std::vector<Rational> ub,
                                std::vector<Rational> pm);

  std::size_t size() const { return n_; }
  const Rational& lb(std::size_t i, Axis s) const { return lb_[i * 2 + index(s)]; }
  const Rational& ub(std::size_t i, Axis s) const { return ub_[i * 2 + index(s)]; }
  const Rational& pm(std::size_t k, std::size_t l, Axis s) const {
    return pm_[(k * n_ + l) * 2 + index(s)];
  }
  Rational bm(std::size_t k, std::size_t l, Axis s) const { return ub(k, s) + pm(k, l, s) - lb(l, s); }

  DerivedParams scaled(const Rational& factor) const;
  bool operator==(const DerivedParams&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<Rational> lb_;
  std::vector<Rational> ub_;
  std::vector<Rational> pm_;
};

struct PackingSolution {
  std::vector<std::array<Rational, 2>> centers;
  Rational height;
};

struct GenConfig {
  Rational strip_width = 100;
  int min_side = 5;
  int max_side = 30;
  double clearance_probability = 0.5;
  // Sampled lengths are rounded to multiples of 1/grid_denominator.
  int grid_denominator = 1;
};

Instance generate_instance(std::uint64_t seed, int n_objects, const GenConfig& config = {});

// Row-based greedy layout: objects sorted by total height, rows filled left
// to right, each new row lifted just enough to clear every earlier row.
PackingSolution greedy_initial_layout(const Instance& inst);

struct Violation {
  enum class Kind { bound, overlap };
  Kind kind = Kind::bound;
  int first_id = 0;
  int second_id = 0;  // 0 for bound violations
  Axis axis = Axis::x;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate_layout(const Instance& inst, const PackingSolution& sol);

// Top of object i including its upper clearance.
Rational clearance_top(const Instance& inst, const PackingSolution& sol, std::size_t i);

}  // namespace idealpack

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

// JSON documents. Every rational is a string, "p/q" or an integer.

#pragma once

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>

#include "idealpack/covers.hpp"
#include "idealpack/idealness.hpp"
#include "idealpack/milp.hpp"
#include "idealpack/model.hpp"
#include "idealpack/oracle.hpp"
#include "idealpack/packing.hpp"

namespace idealpack {

using Json = nlohmann::ordered_json;

class JsonFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json rational_json(const Rational& value);
// Accepts a rational string or a JSON integer.
Rational rational_from_json(const Json& j);

// {"region": {"w", "h"}, "objects": [{"id", "d": [dx, dy], "clear": [x-, y-, x+, y+]}]}
Json instance_to_json(const Instance& inst);
Instance instance_from_json(const Json& j);

// {"LB": {"1x": ..}, "UB": {..}, "PM": {"1,2x": ..}}
Json params_to_json(const DerivedParams& params);
DerivedParams params_from_json(const Json& j);
Json model_to_json(const MBLPModel& model);
Json solution_to_json(const PackingSolution& sol);
PackingSolution solution_from_json(const Json& j);
Json validation_to_json(const ValidationReport& report);
Json bnb_to_json(const BnBResult& result);
Json oracle_to_json(const OracleResult& result);

Json circuit_to_json(const Circuit& circuit);
Json certificate_to_json(const CoverCertificate& cert, const DerivedParams& params);
Json idealness_to_json(const IdealnessReport& report);
Json campaign_to_json(const CampaignReport& report);

// Two-space indentation and a trailing newline.
std::string to_text(const Json& j);

}  // namespace idealpack

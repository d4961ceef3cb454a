// Copyright 2026 The Rankshift Authors
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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "rankshift/analysis.hpp"
#include "rankshift/builder.hpp"
#include "rankshift/substitution.hpp"

namespace rankshift {

using Json = nlohmann::json;

inline constexpr const char* kToolVersion = "rankshift 1.0.0";

// Object keys are emitted in sorted order, so equal inputs give equal bytes.

Json to_json(const Tail& tail);
Json to_json(const BuildDecomposition& d);
Json to_json(const MultiBuildDecomposition& d, std::span<const BuilderWord> set);
Json to_json(const GeneratingChain& chain);
Json to_json(const RankWitness& witness);
Json to_json(const WitnessReport& report);
Json to_json(const ExpectedOccurrenceParse& parse);
Json to_json(const SubstitutionRankParts& parts);
Json to_json(const SubstitutionRankAnalysis& analysis);
Json to_json(const ComplexityProfile& profile);
Json to_json(const CubeReport& report);
Json to_json(const BalanceReport& report);
Json to_json(const SturmianVerdict& verdict);
Json to_json(const InclusionReport& report);
Json to_json(const ForbiddenFactorAudit& audit);
Json to_json(const std::vector<BuilderWord>& builders);

/// A number when the value fits in 64 bits, otherwise a decimal string.
Json big_length_json(BigLength value);

/// One named check. `witnesses` holds the evidence behind the verdict and
/// `approximations` states every finite-horizon stand-in the check relied on.
struct CheckResult {
  std::string check;
  Json params = Json::object();
  bool passed = false;
  std::string verdict;
  Json witnesses = Json::array();
  std::size_t horizon = 0;
  std::vector<std::string> approximations;
  Json data = Json::object();
  std::optional<double> seconds;  // set only when timing is requested
};

Json to_json(const CheckResult& result);

struct Report {
  std::string tool_version = kToolVersion;
  Json config = Json::object();
  std::vector<CheckResult> results;

  bool all_passed() const noexcept;
};

Json to_json(const Report& report);

/// Pretty JSON with a trailing newline.
std::string render_json(const Json& j);

}  // namespace rankshift

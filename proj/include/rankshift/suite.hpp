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

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "rankshift/checks.hpp"
#include "rankshift/report.hpp"

namespace rankshift {

struct SuiteOptions {
  /// Run only criteria carrying one of these tags; empty runs everything.
  std::vector<std::string> only;
  /// Sequence identifier replacements, e.g. {"thue-morse", "periodic:01"}.
  std::map<std::string, std::string> overrides;
  std::uint64_t seed = 20261015;
  std::filesystem::path fixtures_dir;
  /// Rewrite the measurement fixture instead of comparing against it.
  bool bless = false;
  /// Record wall-clock seconds and enforce per-criterion budgets.
  bool timing = false;
};

struct SuiteContext;

struct Criterion {
  std::string id;    // "A1" ...
  std::string name;  // check name in the report
  std::vector<std::string> tags;
  double budget_seconds = 0.0;  // 0: unbounded
  std::function<CheckResult(SuiteContext&)> run;
};

/// The acceptance criteria in registry order.
const std::vector<Criterion>& acceptance_criteria();

/// Every tag used by acceptance_criteria(), sorted.
std::vector<std::string> suite_tags();

inline constexpr const char* kMeasurementFixture = "suite-measurements.json";
inline constexpr double kFixtureTolerance = 1e-12;

/// $RANKSHIFT_FIXTURES when set, else the source tree's fixtures directory.
std::filesystem::path default_fixtures_dir();

/// Runs the selected criteria in registry order. A criterion that throws is
/// reported as failed with the exception text as its verdict.
Report run_suite(const SuiteOptions& options);

}  // namespace rankshift

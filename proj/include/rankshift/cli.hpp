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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rankshift/error.hpp"
#include "rankshift/report.hpp"

namespace rankshift {

/// Bad flags, inconsistent parameters or an unusable path. Exit status 2.
class ConfigError : public Error {
 public:
  using Error::Error;
};

enum class OutputFormat { kJson, kTsv, kText };

struct RunConfig {
  std::string command;  // generate | rank | check | suite
  std::string check_name;
  std::vector<std::string> sequences;
  std::optional<std::size_t> horizon;
  std::size_t n_max = 20;
  std::optional<std::size_t> max_block_len;
  std::optional<std::size_t> tail_start;
  OutputFormat format = OutputFormat::kJson;
  std::string out_path;
  bool strict_q = false;
  std::uint64_t seed = 20261015;
  bool bless = false;
  bool timing = false;
  std::vector<std::string> only;       // suite tags
  std::vector<std::string> overrides;  // suite, "<id>=<replacement>"
  std::vector<std::string> patterns;   // forbidden-factors

  std::size_t effective_horizon() const;
  /// Throws ConfigError: horizon >= 2 * n_max for checks, max_block_len <=
  /// horizon / 2 and tail_start below horizon.
  void validate() const;
  Json to_json() const;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitConfigError = 2;

/// Full command-line front end; returns the process exit status.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Flattened renderings of a report.
std::string render_tsv(const Report& report);
std::string render_text(const Report& report);

}  // namespace rankshift

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

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rankshift/error.hpp"
#include "rankshift/report.hpp"
#include "rankshift/sequence.hpp"

namespace rankshift {

class UnknownCheck : public Error {
 public:
  explicit UnknownCheck(const std::string& name) : Error("unknown check '" + name + "'") {}
};

/// Maps a sequence identifier to a generator; make_sequence unless overridden.
using SequenceResolver = std::function<SequenceGenerator(std::string_view)>;

SequenceResolver default_resolver();

struct CheckParams {
  std::size_t horizon = 8192;
  std::size_t n_max = 20;
  std::optional<std::size_t> max_block_len;  // default horizon / 2
  std::optional<std::size_t> tail_start;     // default horizon / 4
  bool strict_q = false;
  std::size_t substitution_depth = 6;
  std::vector<FiniteWord> patterns;  // forbidden-factors; default 01010, 10101

  std::size_t block_len() const { return max_block_len.value_or(horizon / 2); }
  std::size_t tail() const { return tail_start.value_or(horizon / 4); }
};

/// Names accepted by run_check, in registry order.
std::vector<std::string> check_names();

/// 1, 2, 4, ... below n_max, then n_max itself.
std::vector<std::size_t> entropy_ladder(std::size_t n_max);

/// Builder enumeration, generating chain and, for sequences with a known
/// construction, witness generation and verification. Fails only when a
/// witness does not verify.
CheckResult run_rank(std::string_view id, const CheckParams& params,
                     const SequenceResolver& resolve = default_resolver());

/// One of check_names() over one sequence (two for "subset"). Throws
/// UnknownCheck, or std::invalid_argument for a wrong number of identifiers.
CheckResult run_check(std::string_view name, std::span<const std::string> ids,
                      const CheckParams& params,
                      const SequenceResolver& resolve = default_resolver());

}  // namespace rankshift

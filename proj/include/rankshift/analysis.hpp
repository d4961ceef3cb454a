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
#include <cstdint>
#include <limits>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "rankshift/sequence.hpp"
#include "rankshift/word.hpp"

namespace rankshift {

/// Half-open range [begin, end) of sequence offsets.
struct Window {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const noexcept { return end > begin ? end - begin : 0; }
  friend bool operator==(const Window&, const Window&) = default;
};

/// Distinct length-n factors occurring in a window, sorted ascending.
struct FactorSet {
  std::size_t length = 0;
  Window window;
  std::vector<FiniteWord> factors;

  std::size_t count() const noexcept { return factors.size(); }
  bool contains(const FiniteWord& u) const;
};

/// Throws std::invalid_argument unless window.size() >= n and window.end <= |w|.
FactorSet factor_set(const FiniteWord& w, std::size_t n, Window window);
FactorSet factor_set(const SequenceGenerator& sequence, std::size_t n, Window window);

/// counts[n] = number of distinct length-n factors of text for n = 0..n_max,
/// from one suffix automaton. counts[0] = 1.
std::vector<std::uint64_t> distinct_factor_counts(std::string_view text, std::size_t n_max);

struct ComplexityProfile {
  std::size_t horizon = 0;
  std::vector<std::pair<std::size_t, std::uint64_t>> entries;  // (n, p(n)), n = 1..n_max

  /// Throws std::out_of_range if n was not measured.
  std::uint64_t p(std::size_t n) const;
};

/// p(n) for n = 1..n_max over [0, horizon). Throws std::invalid_argument
/// unless horizon >= 2 * n_max.
ComplexityProfile complexity_profile(const SequenceGenerator& sequence, std::size_t n_max,
                                     std::size_t horizon);

/// (m + 1)^2 + m(m + 1) / 2: the count of length-m factors available to a
/// word built from a single block of length m.
std::uint64_t rank_one_complexity_bound(std::uint64_t m);

/// log2(p(n)) / n over [0, horizon). Throws std::invalid_argument unless
/// n >= 1 and horizon >= 2n.
double entropy_estimate(const SequenceGenerator& sequence, std::size_t n, std::size_t horizon);

struct Cube {
  std::size_t position = 0;
  std::size_t root_length = 0;
  friend bool operator==(const Cube&, const Cube&) = default;
};

struct CubeReport {
  std::size_t horizon = 0;
  std::vector<Cube> cubes;  // by position, then root length
  bool truncated = false;   // stopped at max_results
};

/// Every (position, q) with w[p, p+3q) = u u u, |u| = q. One linear scan per q.
CubeReport find_cubes(const FiniteWord& w,
                      std::size_t max_results = std::numeric_limits<std::size_t>::max());
CubeReport find_cubes(const SequenceGenerator& sequence, std::size_t horizon,
                      std::size_t max_results = std::numeric_limits<std::size_t>::max());

struct BalanceViolation {
  std::size_t length = 0;
  std::size_t light_position = 0;  // factor with the fewest 1s
  std::size_t heavy_position = 0;  // factor with the most 1s
  std::size_t light_ones = 0;
  std::size_t heavy_ones = 0;
};

struct BalanceReport {
  std::size_t n_max = 0;
  std::size_t horizon = 0;
  std::optional<BalanceViolation> violation;  // smallest violating length

  bool balanced() const noexcept { return !violation.has_value(); }
};

BalanceReport is_balanced(const FiniteWord& w, std::size_t n_max);
/// Throws std::invalid_argument unless horizon >= 2 * n_max.
BalanceReport is_balanced(const SequenceGenerator& sequence, std::size_t n_max,
                          std::size_t horizon);

struct SturmianVerdict {
  bool is_sturmian_at_horizon = false;
  std::optional<int> type;  // 0: 00 occurs and 11 does not; 1: the reverse
  bool balanced = false;
  bool complexity_ok = false;
  std::optional<std::size_t> first_complexity_failure;
  ComplexityProfile profile;
  BalanceReport balance;
};

SturmianVerdict sturmian_check(const SequenceGenerator& sequence, std::size_t n_max,
                               std::size_t horizon);

struct InclusionRow {
  std::size_t length = 0;
  bool forward = false;   // factors of V ⊆ factors of W
  bool backward = false;  // factors of W ⊆ factors of V
  std::vector<FiniteWord> missing_from_w;  // first few witnesses
  std::vector<FiniteWord> missing_from_v;
};

struct InclusionReport {
  Window window;
  std::vector<InclusionRow> rows;  // n = 1..n_max

  bool forward() const noexcept;
  bool backward() const noexcept;
  bool mutual() const noexcept { return forward() && backward(); }
};

/// Compares tail-window factor sets of V and W for n = 1..n_max. Throws
/// std::invalid_argument unless horizon > tail_start + 2 * n_max.
InclusionReport factor_subset_report(const SequenceGenerator& v, const SequenceGenerator& w,
                                     std::size_t n_max, std::size_t tail_start,
                                     std::size_t horizon, std::size_t max_witnesses = 8);

struct ForbiddenFactorRow {
  FiniteWord pattern;
  std::size_t occurrences = 0;
  std::optional<std::size_t> first_position;
};

struct ForbiddenFactorAudit {
  std::size_t horizon = 0;
  std::vector<ForbiddenFactorRow> rows;

  bool clean() const noexcept;
};

ForbiddenFactorAudit forbidden_factor_audit(const SequenceGenerator& sequence,
                                            const std::vector<FiniteWord>& patterns,
                                            std::size_t horizon);

/// 01010 and 10101 in the Thue-Morse prefix of the given length.
ForbiddenFactorAudit tm_forbidden_factor_audit(std::size_t horizon);

}  // namespace rankshift

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

#include "rankshift/analysis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "rankshift/sequences.hpp"

namespace rankshift {
namespace {

void require(bool condition, const std::string& message) {
  if (!condition) throw std::invalid_argument(message);
}

/// Online suffix automaton over {'0', '1'}.
class SuffixAutomaton {
 public:
  explicit SuffixAutomaton(std::size_t expected) {
    states_.reserve(2 * expected + 1);
    states_.push_back({});
  }

  void extend(int c) {
    const int cur = static_cast<int>(states_.size());
    states_.push_back({states_[last_].len + 1, -1, {-1, -1}});
    int p = last_;
    while (p != -1 && states_[p].next[c] == -1) {
      states_[p].next[c] = cur;
      p = states_[p].link;
    }
    if (p == -1) {
      states_[cur].link = 0;
    } else {
      const int q = states_[p].next[c];
      if (states_[p].len + 1 == states_[q].len) {
        states_[cur].link = q;
      } else {
        const int clone = static_cast<int>(states_.size());
        states_.push_back({states_[p].len + 1, states_[q].link, states_[q].next});
        while (p != -1 && states_[p].next[c] == q) {
          states_[p].next[c] = clone;
          p = states_[p].link;
        }
        states_[q].link = clone;
        states_[cur].link = clone;
      }
    }
    last_ = cur;
  }

  /// Each non-root state owns the lengths (len(link), len].
  std::vector<std::uint64_t> counts(std::size_t n_max) const {
    std::vector<std::int64_t> diff(n_max + 2, 0);
    for (std::size_t v = 1; v < states_.size(); ++v) {
      const auto lo = static_cast<std::size_t>(states_[states_[v].link].len) + 1;
      const auto hi = std::min(static_cast<std::size_t>(states_[v].len), n_max);
      if (lo > hi) continue;
      ++diff[lo];
      --diff[hi + 1];
    }
    std::vector<std::uint64_t> out(n_max + 1, 0);
    out[0] = 1;
    std::int64_t running = 0;
    for (std::size_t n = 1; n <= n_max; ++n) {
      running += diff[n];
      out[n] = static_cast<std::uint64_t>(running);
    }
    return out;
  }

 private:
  struct State {
    int len = 0;
    int link = -1;
    std::array<int, 2> next{-1, -1};
  };
  std::vector<State> states_;
  int last_ = 0;
};

}  // namespace

bool FactorSet::contains(const FiniteWord& u) const {
  return std::binary_search(factors.begin(), factors.end(), u);
}

FactorSet factor_set(const FiniteWord& w, std::size_t n, Window window) {
  require(window.end <= w.size(), "factor window extends past the word");
  require(window.size() >= n, "factor window is shorter than the factor length");
  std::unordered_set<std::string_view> seen;
  const std::string_view text = w.view();
  for (std::size_t i = window.begin; i + n <= window.end; ++i) seen.insert(text.substr(i, n));
  FactorSet out{n, window, {}};
  out.factors.reserve(seen.size());
  for (const auto f : seen) out.factors.emplace_back(f);
  std::sort(out.factors.begin(), out.factors.end());
  return out;
}

FactorSet factor_set(const SequenceGenerator& sequence, std::size_t n, Window window) {
  require(window.size() >= n, "factor window is shorter than the factor length");
  return factor_set(sequence.prefix(window.end), n, window);
}

std::vector<std::uint64_t> distinct_factor_counts(std::string_view text, std::size_t n_max) {
  SuffixAutomaton automaton(text.size());
  for (const char c : text) automaton.extend(c == '1' ? 1 : 0);
  return automaton.counts(n_max);
}

std::uint64_t ComplexityProfile::p(std::size_t n) const {
  for (const auto& [length, count] : entries) {
    if (length == n) return count;
  }
  throw std::out_of_range("p(" + std::to_string(n) + ") was not measured");
}

ComplexityProfile complexity_profile(const SequenceGenerator& sequence, std::size_t n_max,
                                     std::size_t horizon) {
  require(horizon >= 2 * n_max, "complexity profile needs horizon >= 2 * n_max");
  const FiniteWord text = sequence.prefix(horizon);
  const auto counts = distinct_factor_counts(text.view(), n_max);
  ComplexityProfile out{horizon, {}};
  out.entries.reserve(n_max);
  for (std::size_t n = 1; n <= n_max; ++n) out.entries.emplace_back(n, counts[n]);
  return out;
}

std::uint64_t rank_one_complexity_bound(std::uint64_t m) {
  return (m + 1) * (m + 1) + m * (m + 1) / 2;
}

double entropy_estimate(const SequenceGenerator& sequence, std::size_t n, std::size_t horizon) {
  require(n >= 1, "entropy needs n >= 1");
  require(horizon >= 2 * n, "entropy needs horizon >= 2n");
  const auto counts = distinct_factor_counts(sequence.prefix(horizon).view(), n);
  return std::log2(static_cast<double>(counts[n])) / static_cast<double>(n);
}

CubeReport find_cubes(const FiniteWord& w, std::size_t max_results) {
  const std::string_view text = w.view();
  const std::size_t h = text.size();
  CubeReport report{h, {}, false};
  for (std::size_t q = 1; 3 * q <= h; ++q) {
    // run = length of the current streak of text[j] == text[j + q].
    std::size_t run = 0;
    std::size_t kept = 0;
    for (std::size_t j = 0; j + q < h; ++j) {
      run = text[j] == text[j + q] ? run + 1 : 0;
      if (run < 2 * q) continue;
      if (kept == max_results) {
        report.truncated = true;
        break;
      }
      report.cubes.push_back({j + 1 - 2 * q, q});
      ++kept;
    }
  }
  std::sort(report.cubes.begin(), report.cubes.end(), [](const Cube& a, const Cube& b) {
    return a.position != b.position ? a.position < b.position : a.root_length < b.root_length;
  });
  if (report.cubes.size() > max_results) {
    report.cubes.resize(max_results);
    report.truncated = true;
  }
  return report;
}

CubeReport find_cubes(const SequenceGenerator& sequence, std::size_t horizon,
                      std::size_t max_results) {
  return find_cubes(sequence.prefix(horizon), max_results);
}

BalanceReport is_balanced(const FiniteWord& w, std::size_t n_max) {
  const std::string_view text = w.view();
  BalanceReport report{n_max, text.size(), std::nullopt};
  for (std::size_t n = 1; n <= n_max && n <= text.size(); ++n) {
    std::size_t ones = 0;
    for (std::size_t i = 0; i < n; ++i) ones += text[i] == '1';
    BalanceViolation extreme{n, 0, 0, ones, ones};
    for (std::size_t start = 1; start + n <= text.size(); ++start) {
      ones += (text[start + n - 1] == '1') - (text[start - 1] == '1');
      if (ones < extreme.light_ones) {
        extreme.light_ones = ones;
        extreme.light_position = start;
      }
      if (ones > extreme.heavy_ones) {
        extreme.heavy_ones = ones;
        extreme.heavy_position = start;
      }
    }
    if (extreme.heavy_ones - extreme.light_ones > 1) {
      report.violation = extreme;
      break;
    }
  }
  return report;
}

BalanceReport is_balanced(const SequenceGenerator& sequence, std::size_t n_max,
                          std::size_t horizon) {
  require(horizon >= 2 * n_max, "balance check needs horizon >= 2 * n_max");
  return is_balanced(sequence.prefix(horizon), n_max);
}

SturmianVerdict sturmian_check(const SequenceGenerator& sequence, std::size_t n_max,
                               std::size_t horizon) {
  SturmianVerdict verdict;
  verdict.profile = complexity_profile(sequence, n_max, horizon);
  verdict.complexity_ok = true;
  for (const auto& [n, count] : verdict.profile.entries) {
    if (count != n + 1) {
      verdict.complexity_ok = false;
      verdict.first_complexity_failure = n;
      break;
    }
  }
  const FiniteWord text = sequence.prefix(horizon);
  const bool has00 = contains_factor(text, FiniteWord("00"));
  const bool has11 = contains_factor(text, FiniteWord("11"));
  if (has00 != has11) verdict.type = has11 ? 1 : 0;
  verdict.balance = is_balanced(text, n_max);
  verdict.balanced = verdict.balance.balanced();
  verdict.is_sturmian_at_horizon = verdict.complexity_ok && verdict.balanced;
  return verdict;
}

bool InclusionReport::forward() const noexcept {
  return std::all_of(rows.begin(), rows.end(), [](const InclusionRow& r) { return r.forward; });
}

bool InclusionReport::backward() const noexcept {
  return std::all_of(rows.begin(), rows.end(), [](const InclusionRow& r) { return r.backward; });
}

InclusionReport factor_subset_report(const SequenceGenerator& v, const SequenceGenerator& w,
                                     std::size_t n_max, std::size_t tail_start,
                                     std::size_t horizon, std::size_t max_witnesses) {
  require(horizon > tail_start + 2 * n_max, "inclusion needs horizon > tail_start + 2 * n_max");
  const Window window{tail_start, horizon};
  const FiniteWord v_text = v.prefix(horizon);
  const FiniteWord w_text = w.prefix(horizon);
  InclusionReport report{window, {}};
  for (std::size_t n = 1; n <= n_max; ++n) {
    const FactorSet fv = factor_set(v_text, n, window);
    const FactorSet fw = factor_set(w_text, n, window);
    InclusionRow row;
    row.length = n;
    std::set_difference(fv.factors.begin(), fv.factors.end(), fw.factors.begin(),
                        fw.factors.end(), std::back_inserter(row.missing_from_w));
    std::set_difference(fw.factors.begin(), fw.factors.end(), fv.factors.begin(),
                        fv.factors.end(), std::back_inserter(row.missing_from_v));
    row.forward = row.missing_from_w.empty();
    row.backward = row.missing_from_v.empty();
    if (row.missing_from_w.size() > max_witnesses) row.missing_from_w.resize(max_witnesses);
    if (row.missing_from_v.size() > max_witnesses) row.missing_from_v.resize(max_witnesses);
    report.rows.push_back(std::move(row));
  }
  return report;
}

bool ForbiddenFactorAudit::clean() const noexcept {
  return std::all_of(rows.begin(), rows.end(),
                     [](const ForbiddenFactorRow& r) { return r.occurrences == 0; });
}

ForbiddenFactorAudit forbidden_factor_audit(const SequenceGenerator& sequence,
                                            const std::vector<FiniteWord>& patterns,
                                            std::size_t horizon) {
  const FiniteWord text = sequence.prefix(horizon);
  ForbiddenFactorAudit audit{horizon, {}};
  for (const auto& pattern : patterns) {
    const auto hits = occurrences(text, pattern);
    ForbiddenFactorRow row{pattern, hits.size(), std::nullopt};
    if (!hits.empty()) row.first_position = hits.front();
    audit.rows.push_back(std::move(row));
  }
  return audit;
}

ForbiddenFactorAudit tm_forbidden_factor_audit(std::size_t horizon) {
  return forbidden_factor_audit(thue_morse(), {FiniteWord("01010"), FiniteWord("10101")},
                                horizon);
}

}  // namespace rankshift

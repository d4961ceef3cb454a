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

#include <compare>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace rankshift {

/**
 * Immutable finite word over {0, 1}.
 *
 * Symbols are stored one per byte as the characters '0' and '1', so a word
 * doubles as its own textual form and can be searched and hashed through
 * std::string_view. Offsets are 0-based everywhere.
 */
class FiniteWord {
 public:
  FiniteWord() = default;

  /// Throws std::invalid_argument if any character is not '0' or '1'.
  explicit FiniteWord(std::string digits);
  explicit FiniteWord(std::string_view digits) : FiniteWord(std::string(digits)) {}
  explicit FiniteWord(const char* digits) : FiniteWord(std::string(digits)) {}

  static FiniteWord ones(std::size_t n) { return FiniteWord(std::string(n, '1')); }
  static FiniteWord zeros(std::size_t n) { return FiniteWord(std::string(n, '0')); }

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }

  /// Unchecked symbol access, returns 0 or 1.
  int operator[](std::size_t i) const noexcept { return symbols_[i] - '0'; }
  /// Checked symbol access.
  int at(std::size_t i) const { return symbols_.at(i) - '0'; }

  std::string_view view() const noexcept { return symbols_; }
  const std::string& str() const noexcept { return symbols_; }

  bool starts_with(const FiniteWord& u) const noexcept { return view().starts_with(u.view()); }
  bool ends_with(const FiniteWord& u) const noexcept { return view().ends_with(u.view()); }

  std::size_t count_zeros() const noexcept;
  std::size_t count_ones() const noexcept { return size() - count_zeros(); }

  FiniteWord prefix(std::size_t n) const;
  FiniteWord suffix(std::size_t n) const;

  friend FiniteWord operator+(const FiniteWord& a, const FiniteWord& b) {
    return FiniteWord(a.symbols_ + b.symbols_, Trusted{});
  }

  friend bool operator==(const FiniteWord&, const FiniteWord&) = default;
  friend std::strong_ordering operator<=>(const FiniteWord&, const FiniteWord&) = default;

 private:
  struct Trusted {};
  FiniteWord(std::string digits, Trusted) : symbols_(std::move(digits)) {}
  friend class WordAssembler;

  std::string symbols_;
};

std::ostream& operator<<(std::ostream& os, const FiniteWord& w);

/// Growable buffer for assembling long words without re-validating pieces.
class WordAssembler {
 public:
  WordAssembler& append(const FiniteWord& w) {
    buf_ += w.str();
    return *this;
  }
  WordAssembler& append_ones(std::size_t n) {
    buf_.append(n, '1');
    return *this;
  }
  WordAssembler& append_symbol(int s) {
    buf_.push_back(s ? '1' : '0');
    return *this;
  }
  void reserve(std::size_t n) { buf_.reserve(n); }
  std::size_t size() const noexcept { return buf_.size(); }
  FiniteWord finish() && { return FiniteWord(std::move(buf_), FiniteWord::Trusted{}); }

 private:
  std::string buf_;
};

/// Digit-wise flip: 0 <-> 1.
FiniteWord complement(const FiniteWord& w);

/// Length-n factor starting at offset k. Throws std::out_of_range unless k + n <= |w|.
FiniteWord factor_at(const FiniteWord& w, std::size_t k, std::size_t n);

/// Every offset k with factor_at(w, k, |u|) == u, ascending. The empty word occurs
/// at every offset 0..|w|.
std::vector<std::size_t> occurrences(const FiniteWord& w, const FiniteWord& u);

bool contains_factor(const FiniteWord& w, const FiniteWord& u);

FiniteWord power(const FiniteWord& w, std::size_t k);

std::size_t longest_common_prefix(const FiniteWord& a, const FiniteWord& b) noexcept;
std::size_t longest_common_suffix(const FiniteWord& a, const FiniteWord& b) noexcept;

/// Smallest period of a finite prefix. When no p < horizon works the period
/// equals the horizon and the prefix is aperiodic at that horizon.
struct PeriodReport {
  std::size_t minimal_period = 0;
  std::size_t horizon = 0;

  bool periodic_at_horizon() const noexcept { return minimal_period < horizon; }
};

/// Throws std::invalid_argument on the empty word.
PeriodReport minimal_period(const FiniteWord& w);

}  // namespace rankshift

template <>
struct std::hash<rankshift::FiniteWord> {
  std::size_t operator()(const rankshift::FiniteWord& w) const noexcept {
    return std::hash<std::string_view>{}(w.view());
  }
};

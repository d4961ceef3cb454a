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

#include "rankshift/word.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace rankshift {

FiniteWord::FiniteWord(std::string digits) : symbols_(std::move(digits)) {
  auto bad = std::find_if(symbols_.begin(), symbols_.end(),
                          [](char c) { return c != '0' && c != '1'; });
  if (bad != symbols_.end()) {
    throw std::invalid_argument("non-binary symbol '" + std::string(1, *bad) +
                                "' at offset " +
                                std::to_string(bad - symbols_.begin()));
  }
}

std::size_t FiniteWord::count_zeros() const noexcept {
  return static_cast<std::size_t>(std::count(symbols_.begin(), symbols_.end(), '0'));
}

FiniteWord FiniteWord::prefix(std::size_t n) const {
  if (n > size()) throw std::out_of_range("prefix longer than word");
  return FiniteWord(symbols_.substr(0, n), Trusted{});
}

FiniteWord FiniteWord::suffix(std::size_t n) const {
  if (n > size()) throw std::out_of_range("suffix longer than word");
  return FiniteWord(symbols_.substr(size() - n), Trusted{});
}

std::ostream& operator<<(std::ostream& os, const FiniteWord& w) {
  return os << (w.empty() ? std::string_view("ε") : w.view());
}

FiniteWord complement(const FiniteWord& w) {
  WordAssembler out;
  out.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out.append_symbol(1 - w[i]);
  return std::move(out).finish();
}

FiniteWord factor_at(const FiniteWord& w, std::size_t k, std::size_t n) {
  if (k > w.size() || n > w.size() - k) {
    throw std::out_of_range("factor [" + std::to_string(k) + ", " +
                            std::to_string(k + n) + ") outside word of length " +
                            std::to_string(w.size()));
  }
  WordAssembler out;
  out.reserve(n);
  for (std::size_t i = k; i < k + n; ++i) out.append_symbol(w[i]);
  return std::move(out).finish();
}

std::vector<std::size_t> occurrences(const FiniteWord& w, const FiniteWord& u) {
  std::vector<std::size_t> hits;
  if (u.size() > w.size()) return hits;
  const std::string_view hay = w.view();
  const std::string_view needle = u.view();
  for (std::size_t pos = hay.find(needle); pos != std::string_view::npos;
       pos = hay.find(needle, pos + 1)) {
    hits.push_back(pos);
    if (pos == hay.size()) break;
  }
  return hits;
}

bool contains_factor(const FiniteWord& w, const FiniteWord& u) {
  return w.view().find(u.view()) != std::string_view::npos;
}

FiniteWord power(const FiniteWord& w, std::size_t k) {
  WordAssembler out;
  out.reserve(w.size() * k);
  for (std::size_t i = 0; i < k; ++i) out.append(w);
  return std::move(out).finish();
}

std::size_t longest_common_prefix(const FiniteWord& a, const FiniteWord& b) noexcept {
  auto [ia, ib] = std::mismatch(a.view().begin(), a.view().end(), b.view().begin(),
                                b.view().end());
  return static_cast<std::size_t>(ia - a.view().begin());
}

std::size_t longest_common_suffix(const FiniteWord& a, const FiniteWord& b) noexcept {
  auto [ia, ib] = std::mismatch(a.view().rbegin(), a.view().rend(), b.view().rbegin(),
                                b.view().rend());
  return static_cast<std::size_t>(ia - a.view().rbegin());
}

PeriodReport minimal_period(const FiniteWord& w) {
  if (w.empty()) throw std::invalid_argument("minimal_period of the empty word");
  // Longest proper border via the prefix function; period = n - border.
  const std::string_view s = w.view();
  std::vector<std::size_t> border(s.size(), 0);
  for (std::size_t i = 1; i < s.size(); ++i) {
    std::size_t k = border[i - 1];
    while (k > 0 && s[i] != s[k]) k = border[k - 1];
    if (s[i] == s[k]) ++k;
    border[i] = k;
  }
  return PeriodReport{s.size() - border.back(), s.size()};
}

}  // namespace rankshift

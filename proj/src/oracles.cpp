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

#include "rankshift/oracles.hpp"

#include <algorithm>
#include <string>

namespace rankshift::oracle {
namespace {

std::size_t count_from(const std::string& w, const std::string& v, std::size_t pos,
                       std::size_t blocks) {
  if (pos + v.size() > w.size() || w.compare(pos, v.size(), v) != 0) return 0;
  const std::size_t after = pos + v.size();
  std::size_t total = (after == w.size() && blocks + 1 >= 2) ? 1 : 0;
  for (std::size_t a = 0; after + a < w.size(); ++a) {
    if (a > 0 && w[after + a - 1] != '1') break;
    total += count_from(w, v, after + a, blocks + 1);
  }
  return total;
}

}  // namespace

std::size_t count_exact_decompositions(const FiniteWord& w, const FiniteWord& v) {
  if (v.empty()) return 0;
  return count_from(w.str(), v.str(), 0, 0);
}

std::vector<Cube> cubes(const FiniteWord& w) {
  const std::string& s = w.str();
  std::vector<Cube> out;
  for (std::size_t p = 0; p < s.size(); ++p) {
    for (std::size_t q = 1; p + 3 * q <= s.size(); ++q) {
      const std::string u = s.substr(p, q);
      if (s.substr(p + q, q) == u && s.substr(p + 2 * q, q) == u) out.push_back({p, q});
    }
  }
  return out;
}

std::vector<FiniteWord> factors(const FiniteWord& w, std::size_t n, std::size_t begin,
                                std::size_t end) {
  std::vector<FiniteWord> out;
  for (std::size_t i = begin; i + n <= end; ++i) {
    FiniteWord f = factor_at(w, i, n);
    bool fresh = true;
    for (const auto& g : out) {
      if (g == f) {
        fresh = false;
        break;
      }
    }
    if (fresh) out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace rankshift::oracle

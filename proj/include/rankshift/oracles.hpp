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
#include <vector>

#include "rankshift/analysis.hpp"
#include "rankshift/word.hpp"

// Deliberately naive reference implementations. They share no code with the
// parser or the analysis routines and exist only to cross-check them.
namespace rankshift::oracle {

/// Number of ways to write w = v 1^{a_1} v ... 1^{a_k} v with k >= 1, trying
/// every spacer length at every block boundary.
std::size_t count_exact_decompositions(const FiniteWord& w, const FiniteWord& v);

/// Every (position, root length) with w[p, p + 3q) = u u u, by direct comparison.
std::vector<Cube> cubes(const FiniteWord& w);

/// Distinct length-n factors of w[begin, end), by pairwise comparison, sorted.
std::vector<FiniteWord> factors(const FiniteWord& w, std::size_t n, std::size_t begin,
                                std::size_t end);

}  // namespace rankshift::oracle

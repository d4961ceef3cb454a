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

#include "rankshift/sequence.hpp"

#include <algorithm>
#include <stdexcept>

namespace rankshift {

SequenceGenerator::SequenceGenerator(std::string name, Source source)
    : state_(std::make_shared<State>()) {
  state_->name = std::move(name);
  state_->source = std::move(source);
}

FiniteWord SequenceGenerator::prefix(std::size_t n) const {
  std::lock_guard lock(state_->mutex);
  std::string& cache = state_->cache;
  if (cache.size() < n) {
    std::string grown = state_->source(std::max(n, cache.size() * 2));
    if (grown.size() < n) {
      throw std::out_of_range(state_->name + ": source holds " +
                             std::to_string(grown.size()) + " symbols, asked for " +
                             std::to_string(n));
    }
    if (!std::string_view(grown).starts_with(cache)) {
      throw std::logic_error(state_->name + ": source is not prefix-consistent");
    }
    FiniteWord validated(grown);  // rejects non-binary output once per growth
    cache = std::move(grown);
  }
  return FiniteWord(std::string_view(cache).substr(0, n));
}

}  // namespace rankshift

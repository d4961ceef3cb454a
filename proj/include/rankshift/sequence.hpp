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
#include <memory>
#include <mutex>
#include <string>

#include "rankshift/word.hpp"

namespace rankshift {

/**
 * Lazy one-sided infinite binary word.
 *
 * The source callback receives a requested length and returns a prefix of at
 * least that many '0'/'1' characters (a finite source may return everything it
 * holds instead). Successive calls must agree on their common prefix. Results
 * are cached monotonically under a mutex, so a generator and all of its copies
 * may serve concurrent prefix requests.
 */
class SequenceGenerator {
 public:
  using Source = std::function<std::string(std::size_t wanted)>;

  SequenceGenerator(std::string name, Source source);

  const std::string& name() const noexcept { return state_->name; }

  /// First n symbols. Throws std::out_of_range when a finite source is exhausted and
  /// std::logic_error if the source breaks prefix consistency.
  FiniteWord prefix(std::size_t n) const;

  int symbol(std::size_t i) const { return prefix(i + 1)[i]; }

 private:
  struct State {
    std::string name;
    Source source;
    std::mutex mutex;
    std::string cache;
  };
  std::shared_ptr<State> state_;
};

}  // namespace rankshift

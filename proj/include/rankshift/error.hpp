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
#include <stdexcept>
#include <string>

namespace rankshift {

/// Base class for every domain failure raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A prefix request needed more symbols than the supplied horizon holds.
class InsufficientHorizon : public Error {
 public:
  InsufficientHorizon(std::size_t needed, std::size_t available)
      : Error("insufficient horizon: need " + std::to_string(needed) +
              " zeros, prefix holds " + std::to_string(available)),
        needed_(needed),
        available_(available) {}

  std::size_t needed() const noexcept { return needed_; }
  std::size_t available() const noexcept { return available_; }

 private:
  std::size_t needed_;
  std::size_t available_;
};

class NoDecomposition : public Error {
 public:
  using Error::Error;
};

class NotProlongable : public Error {
 public:
  using Error::Error;
};

/// Symbolic lengths exceeded the 128-bit range.
class LengthOverflow : public Error {
 public:
  using Error::Error;
};

class UnknownSequence : public Error {
 public:
  explicit UnknownSequence(const std::string& id)
      : Error("unknown sequence identifier '" + id + "'") {}
};

}  // namespace rankshift

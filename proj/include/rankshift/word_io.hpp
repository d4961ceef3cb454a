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

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "rankshift/error.hpp"
#include "rankshift/word.hpp"

namespace rankshift {

class WordFormatError : public Error {
 public:
  WordFormatError(std::size_t line, const std::string& what)
      : Error("word file line " + std::to_string(line) + ": " + what), line_(line) {}

  /// 1-based line number of the offending line.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Word file format:
//   #name=<id>        optional, first non-blank line only
//   0110...           digits, line breaks ignored
//   R<count>x<digit>  run of <count> copies of <digit>, on its own line
// Blank lines and trailing '\r' are ignored.

struct WordFile {
  std::string name;
  FiniteWord word;
};

WordFile read_word_file(std::istream& in);
/// Throws std::runtime_error when the file cannot be opened.
WordFile read_word_file(const std::filesystem::path& path);

/// Writes the header (when name is non-empty) and the digits in lines of
/// `width` characters. Run-length lines are never emitted.
void write_word_file(std::ostream& out, const FiniteWord& w, std::string_view name,
                     std::size_t width = 64);

}  // namespace rankshift

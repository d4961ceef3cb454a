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

#include "rankshift/word_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

namespace rankshift {
namespace {

constexpr std::size_t kMaxRun = std::size_t{1} << 32;

void append_run(std::string& digits, std::string_view line, std::size_t line_no) {
  const auto x = line.find('x');
  if (x == std::string_view::npos || x < 2 || x + 2 != line.size()) {
    throw WordFormatError(line_no, "run-length line must read R<count>x<digit>");
  }
  std::size_t count = 0;
  const auto [ptr, ec] = std::from_chars(line.data() + 1, line.data() + x, count);
  if (ec != std::errc() || ptr != line.data() + x) {
    throw WordFormatError(line_no, "bad run count '" + std::string(line.substr(1, x - 1)) + "'");
  }
  if (count > kMaxRun) throw WordFormatError(line_no, "run count exceeds 2^32");
  const char digit = line.back();
  if (digit != '0' && digit != '1') throw WordFormatError(line_no, "run digit must be 0 or 1");
  digits.append(count, digit);
}

}  // namespace

WordFile read_word_file(std::istream& in) {
  WordFile file;
  std::string digits;
  std::string raw;
  std::size_t line_no = 0;
  bool seen_content = false;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (line.starts_with('#')) {
      if (seen_content || !line.starts_with("#name=")) {
        throw WordFormatError(line_no, "only a leading #name=<id> header is allowed");
      }
      file.name = std::string(line.substr(6));
      seen_content = true;
      continue;
    }
    seen_content = true;
    if (line.front() == 'R') {
      append_run(digits, line, line_no);
      continue;
    }
    for (const char c : line) {
      if (c != '0' && c != '1') {
        throw WordFormatError(line_no, std::string("unexpected character '") + c + "'");
      }
    }
    digits += line;
  }
  file.word = FiniteWord(std::move(digits));
  return file;
}

WordFile read_word_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open word file '" + path.string() + "'");
  return read_word_file(in);
}

void write_word_file(std::ostream& out, const FiniteWord& w, std::string_view name,
                     std::size_t width) {
  if (width == 0) throw std::invalid_argument("line width must be positive");
  if (!name.empty()) out << "#name=" << name << '\n';
  const std::string_view digits = w.view();
  for (std::size_t i = 0; i < digits.size(); i += width) {
    out << digits.substr(i, width) << '\n';
  }
}

}  // namespace rankshift

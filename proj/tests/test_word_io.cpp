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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "rankshift/sequences.hpp"
#include "rankshift/word_io.hpp"
#include "support/generators.hpp"

namespace rankshift {
namespace {

WordFile parse(const std::string& text) {
  std::istringstream in(text);
  return read_word_file(in);
}

TEST(WordIoTest, ReadsDigitsAcrossLines) {
  const auto f = parse("#name=thue-morse\n0110\n1001\n");
  EXPECT_EQ(f.name, "thue-morse");
  EXPECT_EQ(f.word, FiniteWord("01101001"));
}

TEST(WordIoTest, ReadsRunLengthLines) {
  const auto f = parse("0\nR3x1\n\nR2x0\r\n1\n");
  EXPECT_EQ(f.name, "");
  EXPECT_EQ(f.word, FiniteWord("0111001"));
}

TEST(WordIoTest, RejectsMalformedInput) {
  EXPECT_THROW(parse("01\n#name=late\n"), WordFormatError);
  EXPECT_THROW(parse("#comment\n"), WordFormatError);
  EXPECT_THROW(parse("0120\n"), WordFormatError);
  EXPECT_THROW(parse("R3x2\n"), WordFormatError);
  EXPECT_THROW(parse("Rx1\n"), WordFormatError);
  EXPECT_THROW(parse("R99999999999x1\n"), WordFormatError);
  try {
    parse("01\n\n01a\n");
    FAIL() << "expected a format error";
  } catch (const WordFormatError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(WordIoTest, WritesFixedWidthLines) {
  std::ostringstream out;
  write_word_file(out, FiniteWord("0010001010010"), "chacon", 5);
  EXPECT_EQ(out.str(), "#name=chacon\n00100\n01010\n010\n");
}

TEST(WordIoProperties, RoundTrip) {
  testing::WordGen gen;
  for (int i = 0; i < 200; ++i) {
    const FiniteWord w = gen.word_up_to(700);
    std::ostringstream out;
    write_word_file(out, w, "w" + std::to_string(i), gen.length(1, 80));
    const auto back = parse(out.str());
    ASSERT_EQ(back.word, w);
    ASSERT_EQ(back.name, "w" + std::to_string(i));
  }
}

TEST(WordIoTest, FileSequenceIdentifier) {
  const auto path = std::filesystem::temp_directory_path() / "rankshift_word_io_test.txt";
  {
    std::ofstream out(path);
    write_word_file(out, chacon().prefix(121), "chacon");
  }
  EXPECT_EQ(read_word_file(path).word, chacon().prefix(121));
  EXPECT_EQ(make_sequence("file:" + path.string()).prefix(121), chacon().prefix(121));
  std::filesystem::remove(path);
  EXPECT_THROW(read_word_file(path), std::runtime_error);
}

}  // namespace
}  // namespace rankshift

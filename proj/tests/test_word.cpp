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

#include <stdexcept>
#include <unordered_set>

#include "rankshift/sequences.hpp"
#include "rankshift/word.hpp"
#include "support/generators.hpp"

namespace rankshift {
namespace {

TEST(FiniteWordTest, RejectsNonBinarySymbols) {
  EXPECT_THROW(FiniteWord("0120"), std::invalid_argument);
  EXPECT_NO_THROW(FiniteWord(""));
}

TEST(FiniteWordTest, PrefixSuffixAndCounts) {
  const FiniteWord w("01101001");
  EXPECT_EQ(w.prefix(3), FiniteWord("011"));
  EXPECT_EQ(w.suffix(3), FiniteWord("001"));
  EXPECT_EQ(w.count_zeros(), 4u);
  EXPECT_EQ(w.count_ones(), 4u);
  EXPECT_THROW(w.prefix(9), std::out_of_range);
  EXPECT_EQ(FiniteWord("01") + FiniteWord("10"), FiniteWord("0110"));
}

TEST(ComplementTest, Examples) {
  EXPECT_EQ(complement(FiniteWord("0110")), FiniteWord("1001"));
  EXPECT_EQ(complement(FiniteWord("")), FiniteWord(""));
  EXPECT_EQ(complement(FiniteWord("0")), FiniteWord("1"));
}

TEST(FactorAtTest, Examples) {
  const FiniteWord w("01101001");
  EXPECT_EQ(factor_at(w, 0, 4), FiniteWord("0110"));
  EXPECT_EQ(factor_at(w, 4, 4), FiniteWord("1001"));
  EXPECT_EQ(factor_at(w, 0, w.size()), w);
  EXPECT_THROW(factor_at(w, 5, 4), std::out_of_range);
}

TEST(OccurrencesTest, Examples) {
  const FiniteWord tm = thue_morse().prefix(1024);
  EXPECT_TRUE(occurrences(tm, FiniteWord("01010")).empty());
  EXPECT_TRUE(occurrences(tm, FiniteWord("10101")).empty());
  EXPECT_EQ(occurrences(FiniteWord("0110"), FiniteWord("11")), std::vector<std::size_t>{1});
  EXPECT_FALSE(contains_factor(tm, FiniteWord("01010")));
  EXPECT_TRUE(contains_factor(FiniteWord("0010101"), FiniteWord("01010")));
}

TEST(OccurrencesTest, EmptyWordOccursEverywhere) {
  EXPECT_EQ(occurrences(FiniteWord("010"), FiniteWord("")),
            (std::vector<std::size_t>{0, 1, 2, 3}));
}

TEST(OccurrencesTest, OverlappingMatches) {
  EXPECT_EQ(occurrences(FiniteWord("00000"), FiniteWord("000")),
            (std::vector<std::size_t>{0, 1, 2}));
}

TEST(PowerTest, RepeatsWord) {
  EXPECT_EQ(power(FiniteWord("01"), 3), FiniteWord("010101"));
  EXPECT_EQ(power(FiniteWord("01"), 0), FiniteWord(""));
}

TEST(CommonAffixTest, PrefixAndSuffix) {
  EXPECT_EQ(longest_common_prefix(FiniteWord("0110"), FiniteWord("0101")), 2u);
  EXPECT_EQ(longest_common_suffix(FiniteWord("0110"), FiniteWord("1010")), 2u);
  EXPECT_EQ(longest_common_prefix(FiniteWord(""), FiniteWord("0")), 0u);
}

TEST(MinimalPeriodTest, Examples) {
  EXPECT_EQ(minimal_period(FiniteWord("010101")).minimal_period, 2u);
  EXPECT_EQ(minimal_period(FiniteWord("0")).minimal_period, 1u);
  // Derived by exhaustive scan: B_3 = B_2 B_2 1 B_2 repeats B_2 B_2 1 with offset 27.
  const auto chacon40 = minimal_period(chacon().prefix(40));
  EXPECT_EQ(chacon40.minimal_period, 27u);
  EXPECT_TRUE(chacon40.periodic_at_horizon());
  EXPECT_FALSE(minimal_period(FiniteWord("0001")).periodic_at_horizon());
  EXPECT_THROW(minimal_period(FiniteWord("")), std::invalid_argument);
}

TEST(WordHashTest, UsableInUnorderedSet) {
  std::unordered_set<FiniteWord> set{FiniteWord("01"), FiniteWord("01"), FiniteWord("10")};
  EXPECT_EQ(set.size(), 2u);
}

TEST(WordAssemblerTest, BuildsInOrder) {
  WordAssembler a;
  a.append(FiniteWord("0010")).append_ones(2).append_symbol(0);
  EXPECT_EQ(std::move(a).finish(), FiniteWord("0010110"));
}

// Properties over hand-rolled random words.

TEST(WordProperties, ComplementIsInvolution) {
  testing::WordGen gen;
  for (int i = 0; i < 500; ++i) {
    const FiniteWord w = gen.word_up_to(200);
    ASSERT_EQ(complement(complement(w)), w) << w;
  }
}

TEST(WordProperties, OccurrencesMatchNaiveScan) {
  testing::WordGen gen;
  for (int i = 0; i < 2000; ++i) {
    const FiniteWord w = gen.word_up_to(64);
    const FiniteWord u = gen.word_up_to(6);
    std::vector<std::size_t> naive;
    for (std::size_t k = 0; k + u.size() <= w.size(); ++k) {
      bool match = true;
      for (std::size_t j = 0; j < u.size() && match; ++j) match = w[k + j] == u[j];
      if (match) naive.push_back(k);
    }
    ASSERT_EQ(occurrences(w, u), naive) << w << " / " << u;
    ASSERT_EQ(contains_factor(w, u), !naive.empty());
  }
}

TEST(WordProperties, PeriodOfSquareDividesLength) {
  testing::WordGen gen;
  for (int i = 0; i < 1000; ++i) {
    const FiniteWord w = gen.word(gen.length(1, 32), static_cast<unsigned>(i % 5));
    const std::size_t p = minimal_period(w + w).minimal_period;
    ASSERT_EQ(w.size() % p, 0u) << w;
  }
}

TEST(WordProperties, PeriodMatchesDefinition) {
  for (std::size_t len = 1; len <= 12; ++len) {
    for (std::uint64_t bits = 0; bits >> len == 0; ++bits) {
      const FiniteWord w = testing::enumerate_word(len, bits);
      std::size_t expected = len;
      for (std::size_t p = 1; p < len; ++p) {
        bool ok = true;
        for (std::size_t i = 0; i + p < len && ok; ++i) ok = w[i] == w[i + p];
        if (ok) {
          expected = p;
          break;
        }
      }
      ASSERT_EQ(minimal_period(w).minimal_period, expected) << w;
    }
  }
}

}  // namespace
}  // namespace rankshift

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

#include <algorithm>
#include <stdexcept>

#include "rankshift/builder.hpp"
#include "rankshift/error.hpp"
#include "rankshift/oracles.hpp"
#include "rankshift/sequences.hpp"
#include "support/generators.hpp"

namespace rankshift {
namespace {

std::vector<std::string> words_of(const std::vector<BuilderWord>& bs) {
  std::vector<std::string> out;
  for (const auto& b : bs) out.push_back(b.word().str());
  return out;
}

const std::string kB2 = "0010001010010";
const std::string kB3 = "0010001010010001000101001010010001010010";

TEST(BuilderWordTest, RequiresMembershipInF) {
  EXPECT_NO_THROW(BuilderWord("0"));
  EXPECT_NO_THROW(BuilderWord("0110"));
  EXPECT_THROW(BuilderWord("01"), std::invalid_argument);
  EXPECT_THROW(BuilderWord("10"), std::invalid_argument);
  EXPECT_THROW(BuilderWord(FiniteWord("")), std::invalid_argument);
}

TEST(ParseBuiltFromTest, ChaconBlock) {
  const auto parsed = parse_built_from(FiniteWord(kB2), BuilderWord("0010"), TailPolicy::kExact);
  ASSERT_TRUE(std::holds_alternative<BuildDecomposition>(parsed));
  const auto& d = std::get<BuildDecomposition>(parsed);
  EXPECT_EQ(d.spacers, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(d.offsets, (std::vector<std::size_t>{0, 4, 9}));
  EXPECT_EQ(d.trailing.kind, Tail::Kind::kComplete);
  EXPECT_EQ(d.reassemble(), FiniteWord(kB2));
}

TEST(ParseBuiltFromTest, TwoBlocksWithEmptySpacer) {
  const auto parsed = parse_built_from(FiniteWord("00"), BuilderWord("0"), TailPolicy::kExact);
  ASSERT_TRUE(std::holds_alternative<BuildDecomposition>(parsed));
  EXPECT_EQ(std::get<BuildDecomposition>(parsed).spacers, std::vector<std::size_t>{0});
}

TEST(ParseBuiltFromTest, ThueMorsePrefixIsNotBuiltFrom0110) {
  // Exhaustive oracle search finds no decomposition.
  const FiniteWord w("01101001");
  EXPECT_EQ(oracle::count_exact_decompositions(w, FiniteWord("0110")), 0u);
  const auto parsed = parse_built_from(w, BuilderWord("0110"), TailPolicy::kExact);
  ASSERT_TRUE(std::holds_alternative<ParseError>(parsed));
  EXPECT_EQ(std::get<ParseError>(parsed).kind, ParseError::Kind::kNotBuiltFrom);
}

TEST(ParseBuiltFromTest, SingleBlockIsTooFew) {
  const auto parsed = parse_built_from(FiniteWord("0110"), BuilderWord("0110"), TailPolicy::kExact);
  ASSERT_TRUE(std::holds_alternative<ParseError>(parsed));
  EXPECT_EQ(std::get<ParseError>(parsed).kind, ParseError::Kind::kTooFewBlocks);
}

TEST(ParseBuiltFromTest, TruncatedTails) {
  const BuilderWord v("0010");
  const auto in_block = parse_built_from(FiniteWord("00100010001"), v, TailPolicy::kAllowTruncated);
  ASSERT_TRUE(std::holds_alternative<BuildDecomposition>(in_block));
  EXPECT_EQ(std::get<BuildDecomposition>(in_block).trailing.kind, Tail::Kind::kTruncatedInBlock);
  EXPECT_EQ(std::get<BuildDecomposition>(in_block).trailing.count, 3u);

  const auto in_spacer = parse_built_from(FiniteWord("001000101"), v, TailPolicy::kAllowTruncated);
  ASSERT_TRUE(std::holds_alternative<BuildDecomposition>(in_spacer));
  EXPECT_EQ(std::get<BuildDecomposition>(in_spacer).reassemble(), FiniteWord("001000101"));

  EXPECT_FALSE(is_built_from(FiniteWord("00100010001"), v));
}

TEST(ParseBuiltFromSetTest, ThueMorseTowerWord) {
  const std::vector<BuilderWord> set{BuilderWord("0110"), BuilderWord("00")};
  const auto all = parse_built_from_set(FiniteWord("0110100"), set, TailPolicy::kExact);
  ASSERT_EQ(all.size(), 1u);
  EXPECT_EQ(all[0].blocks, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(all[0].spacers, std::vector<std::size_t>{1});
  EXPECT_EQ(all[0].reassemble(set), FiniteWord("0110100"));
}

TEST(ParseBuiltFromSetTest, AmbiguousSetGivesEveryDecomposition) {
  const std::vector<BuilderWord> set{BuilderWord("0"), BuilderWord("00")};
  const auto all = parse_built_from_set(FiniteWord("0010"), set, TailPolicy::kExact);
  ASSERT_EQ(all.size(), 2u);
  std::vector<std::vector<std::size_t>> blocks;
  for (const auto& d : all) {
    blocks.push_back(d.blocks);
    EXPECT_EQ(d.reassemble(set), FiniteWord("0010"));
  }
  std::sort(blocks.begin(), blocks.end());
  EXPECT_EQ(blocks, (std::vector<std::vector<std::size_t>>{{0, 0, 0}, {1, 0}}));
}

TEST(ParseBuiltFromSetTest, NoDecompositionIsEmpty) {
  const std::vector<BuilderWord> set{BuilderWord("00")};
  EXPECT_TRUE(parse_built_from_set(FiniteWord("0110"), set, TailPolicy::kExact).empty());
  EXPECT_THROW(parse_built_from_set(FiniteWord("0"), {}, TailPolicy::kExact),
               std::invalid_argument);
}

TEST(EnumerateBuildersTest, PeriodicWord) {
  EXPECT_EQ(words_of(enumerate_builders(periodic(FiniteWord("01")), 64, 11)),
            (std::vector<std::string>{"0", "010", "01010", "0101010", "010101010", "01010101010"}));
}

TEST(EnumerateBuildersTest, ThueMorseOnlyZero) {
  EXPECT_EQ(words_of(enumerate_builders(thue_morse(), 1 << 12, 512)),
            std::vector<std::string>{"0"});
}

TEST(EnumerateBuildersTest, ChaconIncludesB3) {
  // The oracle keeps B_3: |B_3| = 40 = L and B_4 = B_3 B_3 1 B_3 parses completely.
  EXPECT_EQ(words_of(enumerate_builders(chacon(), 121, 40)),
            (std::vector<std::string>{"0", "0010", kB2, kB3}));
}

TEST(EnumerateBuildersTest, RejectsBlockLongerThanHalfHorizon) {
  EXPECT_THROW(enumerate_builders(chacon(), 121, 61), std::invalid_argument);
}

TEST(LcmMergeTest, PeriodicWithLongSpacers) {
  const auto v = periodic(FiniteWord("0101010101011"));
  const BuilderWord z = lcm_merge(BuilderWord("010"), BuilderWord("01010"), v, 260);
  EXPECT_EQ(z.word(), FiniteWord("01010101010"));
  EXPECT_EQ(z.zero_count(), 6u);
  EXPECT_TRUE(is_built_from(z.word(), BuilderWord("010")));
  EXPECT_TRUE(is_built_from(z.word(), BuilderWord("01010")));
}

TEST(LcmMergeTest, ZeroBuildsEverything) {
  EXPECT_EQ(lcm_merge(BuilderWord("0"), BuilderWord("0010"), chacon(), 121), BuilderWord("0010"));
}

TEST(LcmMergeTest, NestedChaconBlocks) {
  EXPECT_EQ(lcm_merge(BuilderWord("0010"), BuilderWord(FiniteWord(kB2)), chacon(), 121),
            BuilderWord(FiniteWord(kB2)));
}

TEST(LcmMergeTest, ShortHorizonThrows) {
  const auto v = periodic(FiniteWord("0101010101011"));
  EXPECT_THROW(lcm_merge(BuilderWord("010"), BuilderWord("01010"), v, 8), InsufficientHorizon);
}

TEST(GeneratingSequenceTest, PeriodicWord) {
  const auto chain = extract_generating_sequence(periodic(FiniteWord("01")), 64, 8);
  std::vector<std::string> got;
  for (const auto& l : chain.links) got.push_back(l.word().str());
  EXPECT_EQ(got, (std::vector<std::string>{"0", "010", "0101010"}));
}

TEST(GeneratingSequenceTest, ChaconStopsAtBlockLimit) {
  const auto chain = extract_generating_sequence(chacon(), 121, 60);
  std::vector<std::string> got;
  for (const auto& l : chain.links) got.push_back(l.word().str());
  EXPECT_EQ(got, (std::vector<std::string>{"0", "0010", kB2, kB3}));
  EXPECT_TRUE(chain.stalled);
}

TEST(GeneratingSequenceTest, ThueMorseStallsAtZero) {
  const auto chain = extract_generating_sequence(thue_morse(), 1 << 12, 512);
  ASSERT_EQ(chain.links.size(), 1u);
  EXPECT_EQ(chain.links[0], BuilderWord("0"));
  EXPECT_TRUE(chain.stalled);
}

TEST(GeneratingSequenceTest, StrictModeNeedsThreeBlocks) {
  // 0101010 = 010 1 010 has two blocks only, so strict mode skips to 010101010... instead.
  const auto chain =
      extract_generating_sequence(periodic(FiniteWord("01")), 64, 11, BlockCountMode::kMoreThanTwo);
  for (std::size_t i = 0; i + 1 < chain.links.size(); ++i) {
    const auto parsed = parse_built_from(chain.links[i + 1].word(), chain.links[i], TailPolicy::kExact);
    ASSERT_TRUE(std::holds_alternative<BuildDecomposition>(parsed));
    EXPECT_GT(std::get<BuildDecomposition>(parsed).block_count(), 2u);
  }
}

TEST(VerifyRankWitnessTest, ThueMorseLevels) {
  const RankWitness w = thue_morse_rank2_witness(3);
  EXPECT_EQ(w.levels[1], (std::vector<FiniteWord>{FiniteWord("0110"), FiniteWord("00")}));
  EXPECT_EQ(w.levels[2], (std::vector<FiniteWord>{FiniteWord("0110100"), FiniteWord("0010110")}));
  EXPECT_TRUE(verify_rank_witness(w, thue_morse()).ok());
}

TEST(VerifyRankWitnessTest, RankThreeFirstLevel) {
  RankWitness w;
  w.rank = 3;
  w.levels = {{FiniteWord("0"), FiniteWord("0"), FiniteWord("0")},
              {FiniteWord("0010"), FiniteWord("000"), FiniteWord("0100")}};
  EXPECT_TRUE(verify_rank_witness(w, rank3_w()).ok());
}

TEST(VerifyRankWitnessTest, StructuralRejections) {
  RankWitness not_in_f;
  not_in_f.rank = 2;
  not_in_f.levels = {{FiniteWord("0"), FiniteWord("0")}, {FiniteWord("11"), FiniteWord("00")}};
  EXPECT_EQ(verify_rank_witness(not_in_f, thue_morse()).status, WitnessReport::Status::kNotInF);

  RankWitness bad_base;
  bad_base.rank = 1;
  bad_base.levels = {{FiniteWord("00")}};
  EXPECT_EQ(verify_rank_witness(bad_base, thue_morse()).status,
            WitnessReport::Status::kBadBaseLevel);

  RankWitness malformed;
  malformed.rank = 2;
  EXPECT_EQ(verify_rank_witness(malformed, thue_morse()).status,
            WitnessReport::Status::kMalformed);

  RankWitness mismatch = thue_morse_rank2_witness(2);
  EXPECT_EQ(verify_rank_witness(mismatch, periodic(FiniteWord("01"))).status,
            WitnessReport::Status::kPrefixMismatch);
}

TEST(KalikowTest, ChaconWindowHasUniqueDecomposition) {
  const FiniteWord window = factor_at(chacon().prefix(1093), 500, 60);
  const auto parse = kalikow_decompose(window, BuilderWord("0010"));
  EXPECT_EQ(parse.alternates, 1u);
  EXPECT_EQ(parse.offsets,
            (std::vector<std::size_t>{2, 7, 12, 16, 21, 25, 29, 34, 38, 42, 47, 52, 56}));
}

TEST(KalikowTest, PeriodicWindowIsAmbiguous) {
  const auto parse = kalikow_decompose(FiniteWord("010101010101"), BuilderWord("010"));
  EXPECT_GT(parse.alternates, 1u);
}

TEST(KalikowTest, NoZerosMeansNoDecomposition) {
  EXPECT_THROW(kalikow_decompose(FiniteWord("111111"), BuilderWord("0")), NoDecomposition);
}

// Properties.

TEST(BuilderProperties, ParserAgreesWithExhaustiveSearch) {
  std::vector<BuilderWord> blocks;
  for (std::size_t len = 1; len <= 6; ++len) {
    for (std::uint64_t bits = 0; bits >> len == 0; ++bits) {
      const FiniteWord w = testing::enumerate_word(len, bits);
      if (BuilderWord::eligible(w)) blocks.emplace_back(w);
    }
  }
  for (std::size_t len = 0; len <= 12; ++len) {
    for (std::uint64_t bits = 0; bits >> len == 0; ++bits) {
      const FiniteWord w = testing::enumerate_word(len, bits);
      for (const auto& v : blocks) {
        const auto parsed = parse_built_from(w, v, TailPolicy::kExact);
        const std::size_t ways = oracle::count_exact_decompositions(w, v.word());
        const bool ok = std::holds_alternative<BuildDecomposition>(parsed);
        ASSERT_EQ(ok, ways > 0) << w << " / " << v.word();
        if (ok) {
          ASSERT_EQ(ways, 1u);
          ASSERT_EQ(std::get<BuildDecomposition>(parsed).reassemble(), w);
        }
      }
    }
  }
}

TEST(BuilderProperties, TruncatedParsesReassemble) {
  testing::WordGen gen;
  for (int i = 0; i < 3000; ++i) {
    const FiniteWord v = gen.f_word(6);
    WordAssembler a;
    const std::size_t blocks = gen.length(2, 6);
    for (std::size_t b = 0; b < blocks; ++b) {
      if (b) a.append_ones(gen.length(0, 3));
      a.append(v);
    }
    const FiniteWord full = std::move(a).finish();
    const FiniteWord cut = full.prefix(gen.length(v.size() + 1, full.size()));
    const auto parsed = parse_built_from(cut, BuilderWord(v), TailPolicy::kAllowTruncated);
    ASSERT_TRUE(std::holds_alternative<BuildDecomposition>(parsed)) << cut << " / " << v;
    ASSERT_EQ(std::get<BuildDecomposition>(parsed).reassemble(), cut);
  }
}

TEST(BuilderProperties, SetParsesReassemble) {
  testing::WordGen gen;
  for (int i = 0; i < 500; ++i) {
    std::vector<BuilderWord> set{BuilderWord(gen.f_word(5)), BuilderWord(gen.f_word(5))};
    WordAssembler a;
    const std::size_t blocks = gen.length(2, 5);
    for (std::size_t b = 0; b < blocks; ++b) {
      if (b) a.append_ones(gen.length(0, 2));
      a.append(set[gen.length(0, 1)].word());
    }
    const FiniteWord w = std::move(a).finish();
    const auto all = parse_built_from_set(w, set, TailPolicy::kExact);
    ASSERT_FALSE(all.empty()) << w;
    for (const auto& d : all) ASSERT_EQ(d.reassemble(set), w);
  }
}

TEST(BuilderProperties, CandidatesOnlyDisappearAsHorizonGrows) {
  for (const char* id : {"chacon", "fibonacci", "rank3-w", "cantor"}) {
    const auto seq = make_sequence(id);
    constexpr std::size_t kBlock = 40;
    std::vector<BuilderWord> previous = enumerate_builders(seq, 2 * kBlock, kBlock);
    for (std::size_t h = 2 * kBlock + 7; h <= 800; h += 37) {
      const auto current = enumerate_builders(seq, h, kBlock);
      for (const auto& b : current) {
        ASSERT_NE(std::find(previous.begin(), previous.end(), b), previous.end())
            << id << " gained " << b.word() << " at horizon " << h;
      }
      previous = current;
    }
  }
}

TEST(BuilderProperties, ZeroIsAlwaysABuilder) {
  for (const auto& id : registered_sequence_names()) {
    const auto seq = make_sequence(id);
    if (seq.prefix(1) != FiniteWord("0")) continue;
    const auto builders = enumerate_builders(seq, 256, 16);
    ASSERT_FALSE(builders.empty()) << id;
    EXPECT_EQ(builders.front(), BuilderWord("0")) << id;
  }
}

TEST(BuilderProperties, LcmMergeVerifiesAgainstBothInputs) {
  for (const char* id : {"chacon", "periodic:0101010101011", "periodic:0010110"}) {
    const auto seq = make_sequence(id);
    constexpr std::size_t kHorizon = 2000;
    const auto builders = enumerate_builders(seq, kHorizon, 60);
    for (std::size_t i = 0; i < builders.size(); ++i) {
      for (std::size_t j = i + 1; j < builders.size(); ++j) {
        const BuilderWord z = lcm_merge(builders[i], builders[j], seq, kHorizon);
        for (const auto* x : {&builders[i], &builders[j]}) {
          ASSERT_TRUE(z == *x || is_built_from(z.word(), *x))
              << id << ": " << z.word() << " over " << x->word();
        }
      }
    }
  }
}

}  // namespace
}  // namespace rankshift

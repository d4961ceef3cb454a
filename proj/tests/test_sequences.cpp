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

#include <set>

#include "rankshift/analysis.hpp"
#include "rankshift/error.hpp"
#include "rankshift/sequences.hpp"
#include "rankshift/substitution.hpp"

namespace rankshift {
namespace {

TEST(ThueMorseTest, Prefixes) {
  EXPECT_EQ(thue_morse().prefix(1), FiniteWord("0"));
  EXPECT_EQ(thue_morse().prefix(4), FiniteWord("0110"));
  EXPECT_EQ(thue_morse().prefix(8), FiniteWord("01101001"));
}

TEST(SubstitutionTest, Apply) {
  EXPECT_EQ(apply_substitution(thue_morse_substitution(), FiniteWord("0110")),
            FiniteWord("01101001"));
  EXPECT_EQ(iterate_substitution(fibonacci_substitution(), FiniteWord("0"), 3), FiniteWord("01001"));
  EXPECT_EQ(apply_substitution(chacon_substitution(), FiniteWord("")), FiniteWord(""));
  EXPECT_EQ(thue_morse_substitution().squared()(FiniteWord("1")), FiniteWord("1001"));
}

TEST(SubstitutionTest, FixedPoints) {
  EXPECT_EQ(substitution_fixed_point(thue_morse_substitution()).prefix(8), FiniteWord("01101001"));
  EXPECT_EQ(substitution_fixed_point(chacon_substitution()).prefix(13), FiniteWord("0010001010010"));
  EXPECT_THROW(substitution_fixed_point(Substitution(FiniteWord("10"), FiniteWord("01"))),
               NotProlongable);
  EXPECT_THROW(substitution_fixed_point(Substitution(FiniteWord("0"), FiniteWord("1"))),
               NotProlongable);
}

TEST(NamedSequencesTest, Prefixes) {
  EXPECT_EQ(chacon().prefix(13), FiniteWord("0010001010010"));
  EXPECT_EQ(fibonacci().prefix(5), FiniteWord("01001"));
  EXPECT_EQ(cantor().prefix(9), FiniteWord("010111010"));
  EXPECT_EQ(bernoulli().prefix(3), FiniteWord("010"));
  EXPECT_EQ(bernoulli().prefix(14), FiniteWord("01000110110000"));
  EXPECT_EQ(bernoulli_horizon(10), 18434u);
  EXPECT_EQ(periodic(FiniteWord("011")).prefix(7), FiniteWord("0110110"));
  EXPECT_EQ(digit_flipped(chacon()).prefix(5), FiniteWord("10100"));
  EXPECT_EQ(digit_flipped(chacon(), 2).prefix(5), FiniteWord("00000"));
}

TEST(NamedSequencesTest, FiniteWordSourceRefusesToExtend) {
  const auto seq = from_word(FiniteWord("0101"), "file");
  EXPECT_EQ(seq.prefix(4), FiniteWord("0101"));
  EXPECT_THROW(seq.prefix(5), std::out_of_range);
}

TEST(NamedSequencesTest, ChaconDefinitionsAgree) {
  constexpr std::size_t n = 6561;  // 3^8
  EXPECT_EQ(chacon().prefix(n), chacon_from_substitution().prefix(n));
}

TEST(SturmianTest, SpecParsing) {
  const auto periodic_spec = parse_sturmian_spec("1,2");
  EXPECT_EQ(periodic_spec.coefficient(1), 1u);
  EXPECT_EQ(periodic_spec.coefficient(2), 2u);
  EXPECT_EQ(periodic_spec.coefficient(5), 1u);
  EXPECT_THROW(periodic_spec.coefficient(0), std::invalid_argument);
  const auto pre = parse_sturmian_spec("2;1");
  EXPECT_EQ(pre.coefficient(1), 2u);
  EXPECT_EQ(pre.coefficient(8), 1u);
  EXPECT_EQ(pre.id(), "sturmian:2;1");
  EXPECT_THROW(parse_sturmian_spec(""), std::invalid_argument);
  EXPECT_THROW(parse_sturmian_spec("0"), std::invalid_argument);
  EXPECT_THROW(parse_sturmian_spec("1,x"), std::invalid_argument);
}

TEST(SturmianTest, StandardWords) {
  EXPECT_EQ(sturmian(parse_sturmian_spec("1")).prefix(1000), fibonacci().prefix(1000));
  EXPECT_EQ(sturmian(parse_sturmian_spec("2;1")).prefix(8), FiniteWord("00100010"));
  EXPECT_EQ(sturmian(parse_sturmian_spec("1,2")).prefix(16), FiniteWord("0101001010100101"));
}

TEST(RankThreeTest, WitnessAndPrefix) {
  const RankWitness w = rank3_witness(6);
  EXPECT_EQ(w.rank, 3u);
  EXPECT_EQ(w.levels[1],
            (std::vector<FiniteWord>{FiniteWord("0010"), FiniteWord("000"), FiniteWord("0100")}));
  EXPECT_EQ(rank3_w().prefix(4), FiniteWord("0010"));
  EXPECT_TRUE(verify_rank_witness(w, rank3_w()).ok());
}

TEST(ThueMorseWitnessTest, Levels) {
  const RankWitness w = thue_morse_rank2_witness(12);
  EXPECT_EQ(w.depth(), 12u);
  EXPECT_EQ(w.levels[1], (std::vector<FiniteWord>{FiniteWord("0110"), FiniteWord("00")}));
  EXPECT_EQ(w.levels[2], (std::vector<FiniteWord>{FiniteWord("0110100"), FiniteWord("0010110")}));
  EXPECT_TRUE(verify_rank_witness(w, thue_morse()).ok());
  for (std::size_t k = 1; k <= w.depth(); ++k) {
    EXPECT_EQ(longest_common_prefix(w.levels[k][0], w.levels[k][1]), 1u) << k;
    EXPECT_EQ(longest_common_suffix(w.levels[k][0], w.levels[k][1]), 1u) << k;
  }
  EXPECT_THROW(thue_morse_rank2_witness(0), std::invalid_argument);
}

TEST(SubstitutionRankTest, ThueMorseFirstLevel) {
  const auto a = rank2_witness_from_substitution(thue_morse_substitution(), 3);
  EXPECT_EQ(a.route, SubstitutionRoute::kMain);
  ASSERT_EQ(a.parts.size(), 3u);
  const auto& p = a.parts[0];
  EXPECT_EQ(p.v, FiniteWord("0110"));
  EXPECT_EQ(p.w, FiniteWord("00"));
  EXPECT_EQ(p.x, 0u);
  EXPECT_EQ(p.y, 1u);
  EXPECT_EQ(p.z, 1u);
}

TEST(SubstitutionRankTest, FibonacciFirstLevel) {
  const auto a = rank2_witness_from_substitution(fibonacci_substitution(), 3);
  EXPECT_EQ(a.route, SubstitutionRoute::kMainAfterSquaring);
  const auto& p = a.parts[0];
  EXPECT_EQ(p.v, FiniteWord("010"));
  EXPECT_EQ(p.w, FiniteWord("0"));
  EXPECT_EQ(p.x, 0u);
  EXPECT_EQ(p.y, 0u);
  EXPECT_EQ(p.z, 1u);
  ASSERT_TRUE(a.witness.has_value());
  EXPECT_TRUE(verify_rank_witness(*a.witness, fibonacci()).ok());
}

TEST(SubstitutionRankTest, CantorTakesRankOneRoute) {
  const auto a = rank2_witness_from_substitution(cantor_substitution(), 4);
  EXPECT_EQ(a.route, SubstitutionRoute::kRankOne);
  ASSERT_TRUE(a.witness.has_value());
  EXPECT_EQ(a.witness->rank, 1u);
  EXPECT_TRUE(verify_rank_witness(*a.witness, cantor()).ok());
}

TEST(SubstitutionRankTest, SymbolicLengthsBeyondMaterialization) {
  const auto a = rank2_witness_from_substitution(thue_morse_substitution(), 6);
  ASSERT_EQ(a.parts.size(), 6u);
  EXPECT_EQ(to_string(a.parts[5].v_length), "18446744073709551616");  // 2^64
  EXPECT_FALSE(a.parts[5].v.has_value());
}

TEST(SubstitutionRankTest, NonProlongableIsRejected) {
  EXPECT_THROW(rank2_witness_from_substitution(Substitution(FiniteWord("10"), FiniteWord("01")), 2),
               NotProlongable);
}

TEST(MakeSequenceTest, Identifiers) {
  EXPECT_EQ(make_sequence("subst:01,10").prefix(4), FiniteWord("0110"));
  EXPECT_EQ(make_sequence("periodic:01").prefix(4), FiniteWord("0101"));
  EXPECT_EQ(make_sequence("flip:periodic:01").prefix(4), FiniteWord("1101"));
  EXPECT_EQ(make_sequence("flip@1:periodic:01").prefix(4), FiniteWord("0001"));
  EXPECT_EQ(make_sequence("sturmian:2;1").prefix(8), FiniteWord("00100010"));
  EXPECT_THROW(make_sequence("nope"), UnknownSequence);
  EXPECT_THROW(make_sequence("periodic:"), std::exception);
  for (const auto& id : registered_sequence_names()) EXPECT_NO_THROW(make_sequence(id)) << id;
}

TEST(RandomConstructionTest, LevelsAreBuiltFromPredecessor) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const auto c = random_generating_sequence(rng, 4);
    ASSERT_EQ(c.levels.size(), 5u);
    EXPECT_EQ(c.levels[0], FiniteWord("0"));
    for (std::size_t k = 0; k + 1 < c.levels.size(); ++k) {
      EXPECT_TRUE(c.copies[k] == 3 || c.copies[k] == 4);
      const auto parsed = parse_built_from(c.levels[k + 1], BuilderWord(c.levels[k]), TailPolicy::kExact);
      ASSERT_TRUE(std::holds_alternative<BuildDecomposition>(parsed));
      const auto& d = std::get<BuildDecomposition>(parsed);
      EXPECT_EQ(d.block_count(), c.copies[k]);
      for (auto s : d.spacers) EXPECT_LE(s, 2u);
    }
  }
}

// Properties.

TEST(SequenceProperties, PrefixConsistency) {
  for (const auto& id : registered_sequence_names()) {
    const auto fresh = [&] { return make_sequence(id); };
    const FiniteWord full = fresh().prefix(1 << 14);
    for (std::size_t m : {1u, 2u, 3u, 17u, 100u, 1000u, 4097u, 16383u}) {
      // A fresh generator asked for m symbols first must agree with the long prefix.
      ASSERT_EQ(fresh().prefix(m), full.prefix(m)) << id << " at " << m;
    }
  }
}

TEST(SequenceProperties, ThueMorseIsInvariantUnderSubstitution) {
  const auto tm = thue_morse();
  const auto phi = thue_morse_substitution();
  for (std::size_t n = 1; n <= 4096; n = n * 3 + 1) {
    EXPECT_EQ(apply_substitution(phi, tm.prefix(n)), tm.prefix(2 * n)) << n;
  }
}

TEST(SequenceProperties, ThueMorseBlockBoundaries) {
  const auto tm = thue_morse();
  for (std::size_t n = 3; n <= 16; ++n) {
    const FiniteWord m = tm.prefix(std::size_t{1} << n);
    EXPECT_TRUE(m.starts_with(FiniteWord("0110"))) << n;
    EXPECT_TRUE(m.ends_with(FiniteWord("1001")) || m.ends_with(FiniteWord("0110"))) << n;
  }
}

TEST(SequenceProperties, MainCaseWitnessGrowthAndSpacerClosure) {
  const std::vector<Substitution> main_case{
      thue_morse_substitution(), Substitution(FiniteWord("001"), FiniteWord("10")),
      Substitution(FiniteWord("0110"), FiniteWord("101")),
      Substitution(FiniteWord("011"), FiniteWord("0"))};
  for (const auto& s : main_case) {
    const auto a = rank2_witness_from_substitution(s, 6);
    ASSERT_NE(a.route, SubstitutionRoute::kRankOne) << s.describe();
    for (std::size_t k = 0; k + 1 < a.parts.size(); ++k) {
      const auto& cur = a.parts[k];
      const auto& next = a.parts[k + 1];
      EXPECT_GT(next.v_length, cur.v_length) << s.describe();
      EXPECT_GT(next.w_length, cur.w_length) << s.describe();
      const std::set<BigLength> allowed{cur.x, cur.y, cur.z, 0};
      EXPECT_TRUE(allowed.contains(next.x) && allowed.contains(next.y) && allowed.contains(next.z))
          << s.describe() << " k = " << k + 1;
    }
    ASSERT_TRUE(a.witness.has_value());
    EXPECT_TRUE(verify_rank_witness(*a.witness, substitution_fixed_point(s)).ok()) << s.describe();
  }
}

}  // namespace
}  // namespace rankshift

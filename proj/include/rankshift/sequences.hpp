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
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "rankshift/builder.hpp"
#include "rankshift/sequence.hpp"
#include "rankshift/substitution.hpp"
#include "rankshift/word.hpp"

namespace rankshift {

Substitution thue_morse_substitution();  // 0 -> 01, 1 -> 10
Substitution chacon_substitution();      // 0 -> 0010, 1 -> 1
Substitution fibonacci_substitution();   // 0 -> 01, 1 -> 0
Substitution cantor_substitution();      // 0 -> 010, 1 -> 111

/// M_{i+1} = M_i complement(M_i), M_0 = 0; prefix(2^n) = M_n.
SequenceGenerator thue_morse();

/// Block recursion B_0 = 0, B_{i+1} = B_i B_i 1 B_i.
SequenceGenerator chacon();

/// Fixed point of chacon_substitution(); agrees with chacon().
SequenceGenerator chacon_from_substitution();

SequenceGenerator fibonacci();
SequenceGenerator cantor();

/// 0 1 00 01 10 11 000 ...: every binary word in length-lexicographic order.
SequenceGenerator bernoulli();

/// Length of the Bernoulli prefix that ends with the last word of length max_len.
std::size_t bernoulli_horizon(std::size_t max_len);

/// period period period ...; throws std::invalid_argument on an empty period.
SequenceGenerator periodic(const FiniteWord& period);

/// `inner` with the digit at `position` flipped.
SequenceGenerator digit_flipped(const SequenceGenerator& inner, std::size_t position = 0);

/// Finite source: prefix(n) throws std::out_of_range for n > |w|.
SequenceGenerator from_word(const FiniteWord& w, std::string name);

/**
 * Continued-fraction coefficients d_1, d_2, ...: the preperiod is read once,
 * then the period repeats forever. An empty period is rejected.
 */
struct SturmianSpec {
  std::vector<unsigned> preperiod;
  std::vector<unsigned> period;

  /// d_n for n >= 1.
  unsigned coefficient(std::size_t n) const;
  /// Canonical identifier, e.g. "sturmian:2;1" or "sturmian:1,2".
  std::string id() const;
};

/// Parses the part after "sturmian:". Throws std::invalid_argument.
SturmianSpec parse_sturmian_spec(std::string_view text);

/// Characteristic word lim s_n with s_{-1} = 1, s_0 = 0, s_n = s_{n-1}^{d_n} s_{n-2}.
SequenceGenerator sturmian(const SturmianSpec& spec);

/**
 * Rank-3 construction from (0, 0, 0):
 *   W_{n+1,1} = W_{n,1} W_{n,2} 1 W_{n,3}
 *   W_{n+1,2} = W_{n,2} W_{n,3} W_{n,1}
 *   W_{n+1,3} = W_{n,3} 1 W_{n,1} W_{n,2}
 */
RankWitness rank3_witness(std::size_t depth);

/// lim W_{n,1}.
SequenceGenerator rank3_w();

/**
 * Rank-2 towers for Thue-Morse from (0, 0). From level n to n + 1:
 *   n even:  (M_1 11 M_2,  M_2 M_1)
 *   n odd:   (M_1 1 M_2,   M_2 1 M_1)
 * Throws std::invalid_argument for depth 0.
 */
RankWitness thue_morse_rank2_witness(std::size_t depth);

/// Levels v_0 = 0, v_1, ... of a random generating sequence: each level is
/// q in {3, 4} copies of the previous one joined by spacers 1^a, a in {0, 1, 2}.
/// Draws use raw engine output modulo the range, so they are portable.
struct RandomConstruction {
  std::vector<FiniteWord> levels;
  std::vector<std::size_t> copies;  // copies[k] = q used to build levels[k + 1]
};

RandomConstruction random_generating_sequence(std::mt19937_64& rng, std::size_t depth);

/**
 * Registry lookup. Identifiers:
 *   thue-morse, chacon, chacon-subst, chacon-flip, fibonacci, cantor, bernoulli,
 *   rank3-w, sturmian:<coefficients>, subst:<image0>,<image1>, periodic:<word>,
 *   flip:<id>, flip@<pos>:<id>, file:<path>
 * Throws UnknownSequence, or the constructor's error for a malformed argument.
 */
SequenceGenerator make_sequence(std::string_view id);

/// Fixed identifiers accepted by make_sequence, in registry order.
std::vector<std::string> registered_sequence_names();

}  // namespace rankshift

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
#include <optional>
#include <string>
#include <vector>

#include "rankshift/builder.hpp"
#include "rankshift/sequence.hpp"
#include "rankshift/word.hpp"

namespace rankshift {

/// Binary substitution 0 -> image0, 1 -> image1. Both images are non-empty.
class Substitution {
 public:
  /// Throws std::invalid_argument when an image is empty.
  Substitution(FiniteWord image0, FiniteWord image1);

  const FiniteWord& image(int symbol) const noexcept { return symbol ? image1_ : image0_; }

  /// Digit-wise image: s(w_0) s(w_1) ... s(w_{|w|-1}).
  FiniteWord operator()(const FiniteWord& w) const;

  /// (this ∘ inner)(a) = this(inner(a)).
  Substitution after(const Substitution& inner) const;
  Substitution squared() const { return after(*this); }

  /// image0 starts with 0 and has length >= 2, so s^n(0) converges.
  bool prolongable_at_zero() const noexcept;

  std::string describe() const { return image0_.str() + "," + image1_.str(); }

 private:
  FiniteWord image0_;
  FiniteWord image1_;
};

FiniteWord apply_substitution(const Substitution& s, const FiniteWord& w);

/// s^times(w).
FiniteWord iterate_substitution(const Substitution& s, const FiniteWord& w, std::size_t times);

/// Generator for lim s^n(0). Throws NotProlongable unless s.prolongable_at_zero().
SequenceGenerator substitution_fixed_point(const Substitution& s, std::string name = {});

/// Lengths of images under high substitution powers overflow 64 bits quickly
/// (|φ^{2^6}(0)| = 2^64 for Thue-Morse), so they are tracked in 128 bits.
__extension__ using BigLength = unsigned __int128;

std::string to_string(BigLength value);

/**
 * Shape of a word sufficient to compose substitution powers symbolically:
 * its length, zero count, first and last symbol and its outer runs of 1s.
 */
struct ImageSummary {
  BigLength length = 0;
  BigLength zeros = 0;
  BigLength leading_ones = 0;
  BigLength trailing_ones = 0;
  int first = 0;
  int last = 0;

  bool has_zero() const noexcept { return zeros > 0; }
  static ImageSummary of(const FiniteWord& w);
};

/// Summaries of τ(0) and τ(1) for a substitution τ.
struct SubstitutionSummary {
  ImageSummary image0;
  ImageSummary image1;

  const ImageSummary& image(int symbol) const noexcept { return symbol ? image1 : image0; }
  static SubstitutionSummary of(const Substitution& s);
  /// Summary of τ ∘ τ. Throws LengthOverflow past 128 bits.
  SubstitutionSummary squared() const;
};

/**
 * Level-k pieces of σ^{2^k}:  σ^{2^k}(0) = v_k 1^{x_k},  σ^{2^k}(1) = 1^{y_k} w_k 1^{z_k}.
 *
 * Lengths are always known; the words themselves are materialized only when
 * σ^{2^k}(0) is short enough. When σ^{2^k}(1) has no 0, w_k is empty,
 * y_k = |σ^{2^k}(1)| and z_k = 0.
 */
struct SubstitutionRankParts {
  std::size_t level = 0;
  BigLength v_length = 0;
  BigLength w_length = 0;
  BigLength x = 0;
  BigLength y = 0;
  BigLength z = 0;
  std::optional<FiniteWord> v;
  std::optional<FiniteWord> w;
};

enum class SubstitutionRoute {
  kMain,               // |σ(0)|, |σ(1)| > 1 and σ(1) holds a 0
  kMainAfterSquaring,  // σ(1) = 0; σ² falls in the main case
  kRankOne,            // σ(1) holds no 0
  kDegenerate,         // σ(0) = 01...1 and σ(1) has no 0: the fixed point is 01111...
};

std::string to_string(SubstitutionRoute route);

struct SubstitutionRankAnalysis {
  Substitution substitution;
  SubstitutionRoute route = SubstitutionRoute::kMain;
  std::vector<SubstitutionRankParts> parts;  // k = 1..depth
  /// Rank-2 witness (v_k, w_k) for the main routes, rank-1 witness (v_k) for the
  /// rank-one route; empty for the degenerate route.
  std::optional<RankWitness> witness;
  /// Which k each witness level above 0 came from. A level is skipped when one
  /// of its words has a single block over the previous kept level.
  std::vector<std::size_t> witness_source_levels;
};

/**
 * Splits σ^{2^k}(0) and σ^{2^k}(1) for k = 1..depth and assembles the witness
 * that σ's fixed point has rank at most 2 (or 1). Words are materialized while
 * |σ^{2^k}(0)| <= materialize_limit. Throws NotProlongable (propagated from the
 * fixed point) and LengthOverflow.
 */
SubstitutionRankAnalysis rank2_witness_from_substitution(
    const Substitution& s, std::size_t depth, std::size_t materialize_limit = std::size_t{1} << 16);

}  // namespace rankshift

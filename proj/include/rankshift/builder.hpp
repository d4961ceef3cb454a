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
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "rankshift/sequence.hpp"
#include "rankshift/word.hpp"

namespace rankshift {

/// A word in F: non-empty, begins and ends with 0.
class BuilderWord {
 public:
  /// Throws std::invalid_argument when w is not in F.
  explicit BuilderWord(FiniteWord w);
  explicit BuilderWord(const char* digits) : BuilderWord(FiniteWord(digits)) {}

  static bool eligible(const FiniteWord& w) noexcept {
    return !w.empty() && w[0] == 0 && w[w.size() - 1] == 0;
  }

  const FiniteWord& word() const noexcept { return word_; }
  std::size_t size() const noexcept { return word_.size(); }
  /// Number of zeros, the q of the lcm-merge construction.
  std::size_t zero_count() const noexcept { return word_.count_zeros(); }

  friend bool operator==(const BuilderWord&, const BuilderWord&) = default;
  friend auto operator<=>(const BuilderWord&, const BuilderWord&) = default;

 private:
  FiniteWord word_;
};

enum class TailPolicy { kExact, kAllowTruncated };

/// How a parse ends. `count` is the length of the partial block for
/// kTruncatedInBlock and the number of trailing 1s for kTruncatedInSpacer.
struct Tail {
  enum class Kind { kComplete, kTruncatedInBlock, kTruncatedInSpacer };
  Kind kind = Kind::kComplete;
  std::size_t count = 0;

  friend bool operator==(const Tail&, const Tail&) = default;
};

std::string to_string(Tail::Kind kind);

/**
 * Parse of a word as  v 1^{a_1} v ... v 1^{a_k} v  followed by the tail.
 *
 * `offsets` holds the start of every complete block. For kComplete and
 * kTruncatedInSpacer there are spacers.size() + 1 complete blocks; for
 * kTruncatedInBlock the last spacer precedes the partial block, so there are
 * spacers.size() complete blocks.
 */
struct BuildDecomposition {
  BuilderWord block;
  std::vector<std::size_t> spacers;
  Tail trailing;
  std::vector<std::size_t> offsets;

  std::size_t block_count() const noexcept { return offsets.size(); }
  FiniteWord reassemble() const;
};

struct ParseError {
  enum class Kind { kNotBuiltFrom, kTooFewBlocks };
  Kind kind = Kind::kNotBuiltFrom;
  /// First offset at which the parse fails.
  std::size_t position = 0;
};

using ParseResult = std::variant<BuildDecomposition, ParseError>;

/**
 * Deterministic left-to-right parse of w as built from v.
 *
 * w must begin with v; after every block the maximal run of 1s is the spacer
 * and the next 0 must open another copy of v. With kExact the parse must end
 * on a block boundary with at least two blocks. With kAllowTruncated one
 * complete block is enough and a final partial block or open spacer is
 * recorded in the tail.
 */
ParseResult parse_built_from(const FiniteWord& w, const BuilderWord& v, TailPolicy policy);

/// Exact parse succeeds: w = v 1^{a_1} v ... v with k >= 1.
bool is_built_from(const FiniteWord& w, const BuilderWord& v);

/// Decomposition over a set of builders. `blocks` index into the supplied set;
/// when the set repeats a word, the first index holding it is used. For a
/// kTruncatedInBlock tail, `partial_block` is the first member whose prefix
/// matches the cut block; decompositions differing only in that choice are
/// reported once.
struct MultiBuildDecomposition {
  std::vector<std::size_t> blocks;
  std::vector<std::size_t> spacers;
  Tail trailing;
  std::size_t partial_block = 0;

  FiniteWord reassemble(std::span<const BuilderWord> set) const;
  friend bool operator==(const MultiBuildDecomposition&,
                         const MultiBuildDecomposition&) = default;
};

/// Every decomposition of w over `set`, in lexicographic order of block choices.
/// An empty result means w is not built from the set. Enumeration stops after
/// `limit` results. Dead offsets are memoized so work stays linear in
/// |w| * |set| plus output size.
std::vector<MultiBuildDecomposition> parse_built_from_set(
    const FiniteWord& w, std::span<const BuilderWord> set, TailPolicy policy,
    std::size_t limit = std::numeric_limits<std::size_t>::max());

/// Reachability-only form of parse_built_from_set.
bool is_built_from_set(const FiniteWord& w, std::span<const BuilderWord> set,
                       TailPolicy policy);

/**
 * Finite-horizon approximation of A_V: every prefix p of V restricted to
 * |p| <= max_block_len, ending in 0, such that V's length-`horizon` prefix
 * parses as built from p with a truncated tail allowed. Results are sorted by
 * length. Throws std::invalid_argument unless max_block_len <= horizon / 2.
 */
std::vector<BuilderWord> enumerate_builders(const SequenceGenerator& sequence,
                                            std::size_t horizon, std::size_t max_block_len);

/**
 * Merge of two builders into one built from both.
 *
 * Returns y when y is built from x; otherwise the prefix z of V holding exactly
 * lcm(q_x, q_y) zeros and ending at the last of them. Throws
 * std::invalid_argument unless |y| > |x|, and InsufficientHorizon when the
 * length-`horizon` prefix has too few zeros.
 */
BuilderWord lcm_merge(const BuilderWord& x, const BuilderWord& y,
                      const SequenceGenerator& sequence, std::size_t horizon);

enum class BlockCountMode {
  kAtLeastTwo,   // q >= 2
  kMoreThanTwo,  // q > 2, the strict reading
};

struct GeneratingChain {
  std::vector<BuilderWord> links;
  /// Number of copies of links[i] inside links[i + 1].
  std::vector<std::size_t> multiplicities;
  /// No longer link exists within max_block_len; the chain is still valid.
  bool stalled = false;
};

/**
 * Chain 0 = v_0, v_1, ... drawn from enumerate_builders where each link is
 * built from the previous one. The next link is the shortest longer candidate
 * built from the current link; if none qualifies, lcm_merge against each longer
 * candidate is tried and the shortest result within max_block_len wins.
 */
GeneratingChain extract_generating_sequence(const SequenceGenerator& sequence,
                                            std::size_t horizon, std::size_t max_block_len,
                                            BlockCountMode mode = BlockCountMode::kAtLeastTwo);

/// Levels of n-tuples. levels[0] should be all "0"; every word of level i + 1
/// should be built from the words of level i.
struct RankWitness {
  std::size_t rank = 0;
  std::vector<std::vector<FiniteWord>> levels;

  std::size_t depth() const noexcept { return levels.empty() ? 0 : levels.size() - 1; }
};

struct WitnessReport {
  enum class Status {
    kVerified,
    kMalformed,       // wrong tuple width or no levels
    kNotInF,          // a word does not start and end with 0
    kBadBaseLevel,    // level 0 is not all "0"
    kNotBuilt,        // a word has no decomposition over the previous level
    kPrefixMismatch,  // V does not start with the level's first word
  };
  Status status = Status::kVerified;
  std::size_t level = 0;
  std::size_t index = 0;
  std::size_t levels_checked = 0;
  std::string detail;

  bool ok() const noexcept { return status == Status::kVerified; }
};

std::string to_string(WitnessReport::Status status);

WitnessReport verify_rank_witness(const RankWitness& witness, const SequenceGenerator& sequence);

/**
 * Expected-occurrence parse of a finite window.
 *
 * A decomposition is a left slack (a proper suffix of v followed by 1s), blocks
 * of v separated by 1-runs, and a right slack (1s followed by a proper prefix
 * of v). Each such maximal parse is determined by its first block offset, so
 * `alternates` counts the distinct first offsets that work. The fields describe
 * the leftmost decomposition; `decompositions` lists all of them.
 */
struct ExpectedOccurrenceParse {
  BuilderWord block;
  std::vector<std::size_t> offsets;
  std::size_t left_slack = 0;
  std::size_t right_slack = 0;
  std::size_t alternates = 0;
  std::vector<std::vector<std::size_t>> decompositions;
};

/// Throws std::invalid_argument unless |window| >= 3|v|, NoDecomposition when no
/// offset yields a parse.
ExpectedOccurrenceParse kalikow_decompose(const FiniteWord& window, const BuilderWord& v);

}  // namespace rankshift

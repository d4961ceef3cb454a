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

#include "rankshift/builder.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "rankshift/error.hpp"

namespace rankshift {
namespace {

/// Length of the longest common prefix of v and w[pos..].
std::size_t match_length(std::string_view w, std::size_t pos, std::string_view v) {
  const std::size_t limit = std::min(v.size(), w.size() - pos);
  std::size_t i = 0;
  while (i < limit && w[pos + i] == v[i]) ++i;
  return i;
}

std::size_t ones_run(std::string_view w, std::size_t pos) {
  std::size_t end = pos;
  while (end < w.size() && w[end] == '1') ++end;
  return end - pos;
}

/// Distinct members of a builder set, each paired with its first index.
struct DistinctMembers {
  std::vector<std::string_view> words;
  std::vector<std::size_t> first_index;

  explicit DistinctMembers(std::span<const BuilderWord> set) {
    for (std::size_t i = 0; i < set.size(); ++i) {
      const std::string_view w = set[i].word().view();
      if (std::find(words.begin(), words.end(), w) == words.end()) {
        words.push_back(w);
        first_index.push_back(i);
      }
    }
  }
};

}  // namespace

BuilderWord::BuilderWord(FiniteWord w) : word_(std::move(w)) {
  if (!eligible(word_)) {
    throw std::invalid_argument("'" + word_.str() + "' does not begin and end with 0");
  }
}

std::string to_string(Tail::Kind kind) {
  switch (kind) {
    case Tail::Kind::kComplete:
      return "complete";
    case Tail::Kind::kTruncatedInBlock:
      return "truncated-in-block";
    case Tail::Kind::kTruncatedInSpacer:
      return "truncated-in-spacer";
  }
  return "unknown";
}

FiniteWord BuildDecomposition::reassemble() const {
  WordAssembler out;
  if (offsets.empty()) return std::move(out).finish();
  out.append(block.word());
  for (std::size_t i = 0; i < spacers.size(); ++i) {
    out.append_ones(spacers[i]);
    if (i + 1 < offsets.size()) out.append(block.word());
  }
  if (trailing.kind == Tail::Kind::kTruncatedInBlock) {
    out.append(block.word().prefix(trailing.count));
  } else if (trailing.kind == Tail::Kind::kTruncatedInSpacer) {
    out.append_ones(trailing.count);
  }
  return std::move(out).finish();
}

ParseResult parse_built_from(const FiniteWord& w, const BuilderWord& v, TailPolicy policy) {
  const std::string_view text = w.view();
  const std::string_view block = v.word().view();
  const bool truncated = policy == TailPolicy::kAllowTruncated;

  BuildDecomposition d{v, {}, {}, {}};
  std::size_t pos = 0;
  while (true) {
    const std::size_t m = match_length(text, pos, block);
    if (m == block.size()) {
      d.offsets.push_back(pos);
      pos += block.size();
    } else if (truncated && !d.offsets.empty() && pos + m == text.size()) {
      d.trailing = {Tail::Kind::kTruncatedInBlock, m};
      break;
    } else {
      return ParseError{ParseError::Kind::kNotBuiltFrom, pos + m};
    }

    if (pos == text.size()) break;
    const std::size_t run = ones_run(text, pos);
    if (pos + run == text.size()) {
      if (!truncated) return ParseError{ParseError::Kind::kNotBuiltFrom, text.size()};
      d.trailing = {Tail::Kind::kTruncatedInSpacer, run};
      break;
    }
    d.spacers.push_back(run);
    pos += run;
  }

  if (!truncated && d.offsets.size() < 2) {
    return ParseError{ParseError::Kind::kTooFewBlocks, text.size()};
  }
  return d;
}

bool is_built_from(const FiniteWord& w, const BuilderWord& v) {
  return std::holds_alternative<BuildDecomposition>(
      parse_built_from(w, v, TailPolicy::kExact));
}

FiniteWord MultiBuildDecomposition::reassemble(std::span<const BuilderWord> set) const {
  WordAssembler out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    out.append(set[blocks[i]].word());
    if (i < spacers.size()) out.append_ones(spacers[i]);
  }
  if (trailing.kind == Tail::Kind::kTruncatedInSpacer) {
    out.append_ones(trailing.count);
  } else if (trailing.kind == Tail::Kind::kTruncatedInBlock) {
    out.append(set[partial_block].word().prefix(trailing.count));
  }
  return std::move(out).finish();
}

std::vector<MultiBuildDecomposition> parse_built_from_set(const FiniteWord& w,
                                                          std::span<const BuilderWord> set,
                                                          TailPolicy policy,
                                                          std::size_t limit) {
  if (set.empty()) throw std::invalid_argument("builder set is empty");
  const DistinctMembers members(set);
  const std::string_view text = w.view();
  const std::size_t n = text.size();
  const bool truncated = policy == TailPolicy::kAllowTruncated;

  std::vector<MultiBuildDecomposition> results;
  if (n == 0 || limit == 0) return results;

  // Offsets from which no completion exists; independent of the path taken,
  // because every offset past 0 already has a block before it.
  std::vector<char> dead(n + 1, 0);

  struct Frame {
    std::size_t pos;
    std::size_t member = 0;
    bool found = false;
    bool partial_emitted = false;
  };
  std::vector<Frame> stack{{0}};
  std::vector<std::size_t> blocks;
  std::vector<std::size_t> spacers;

  auto emit = [&](Tail tail, std::optional<std::size_t> last_block, std::size_t partial = 0) {
    MultiBuildDecomposition d{blocks, spacers, tail, partial};
    if (last_block) d.blocks.push_back(*last_block);
    results.push_back(std::move(d));
  };

  while (!stack.empty() && results.size() < limit) {
    Frame& f = stack.back();
    if (f.member == members.words.size()) {
      const bool found = f.found;
      if (!found) dead[f.pos] = 1;
      stack.pop_back();
      if (!stack.empty()) {
        stack.back().found |= found;
        blocks.pop_back();
        spacers.pop_back();
      }
      continue;
    }

    const std::size_t k = f.member++;
    const std::string_view m = members.words[k];
    const std::size_t idx = members.first_index[k];
    const std::size_t matched = match_length(text, f.pos, m);

    if (matched == m.size()) {
      const std::size_t end = f.pos + m.size();
      if (end == n) {
        if (truncated || !blocks.empty()) {
          emit({Tail::Kind::kComplete, 0}, idx);
          f.found = true;
        }
        continue;
      }
      const std::size_t run = ones_run(text, end);
      if (end + run == n) {
        if (truncated) {
          emit({Tail::Kind::kTruncatedInSpacer, run}, idx);
          f.found = true;
        }
        continue;
      }
      const std::size_t next = end + run;
      if (!dead[next]) {
        blocks.push_back(idx);
        spacers.push_back(run);
        stack.push_back(Frame{next});  // invalidates f
      }
    } else if (truncated && !blocks.empty() && matched > 0 && f.pos + matched == n &&
               !f.partial_emitted) {
      emit({Tail::Kind::kTruncatedInBlock, matched}, std::nullopt, idx);
      f.partial_emitted = true;
      f.found = true;
    }
  }
  return results;
}

bool is_built_from_set(const FiniteWord& w, std::span<const BuilderWord> set,
                       TailPolicy policy) {
  if (set.empty()) throw std::invalid_argument("builder set is empty");
  const DistinctMembers members(set);
  const std::string_view text = w.view();
  const std::size_t n = text.size();
  const bool truncated = policy == TailPolicy::kAllowTruncated;
  if (n == 0) return false;

  // Forward reachability over block start offsets, visited in increasing order.
  std::vector<char> reach(n, 0);
  reach[0] = 1;
  for (std::size_t pos = 0; pos < n; ++pos) {
    if (!reach[pos]) continue;
    for (std::string_view m : members.words) {
      const std::size_t matched = match_length(text, pos, m);
      if (matched < m.size()) {
        if (truncated && pos > 0 && matched > 0 && pos + matched == n) return true;
        continue;
      }
      const std::size_t end = pos + m.size();
      if (end == n) {
        if (truncated || pos > 0) return true;
        continue;
      }
      const std::size_t run = ones_run(text, end);
      if (end + run == n) {
        if (truncated) return true;
        continue;
      }
      reach[end + run] = 1;
    }
  }
  return false;
}

std::vector<BuilderWord> enumerate_builders(const SequenceGenerator& sequence,
                                            std::size_t horizon, std::size_t max_block_len) {
  if (max_block_len > horizon / 2) {
    throw std::invalid_argument("max_block_len " + std::to_string(max_block_len) +
                                " exceeds horizon/2 = " + std::to_string(horizon / 2));
  }
  std::vector<BuilderWord> found;
  const FiniteWord prefix = sequence.prefix(horizon);
  if (prefix.empty() || prefix[0] != 0) return found;

  for (std::size_t len = 1; len <= max_block_len; ++len) {
    if (prefix[len - 1] != 0) continue;
    BuilderWord candidate(prefix.prefix(len));
    if (std::holds_alternative<BuildDecomposition>(
            parse_built_from(prefix, candidate, TailPolicy::kAllowTruncated))) {
      found.push_back(std::move(candidate));
    }
  }
  return found;
}

BuilderWord lcm_merge(const BuilderWord& x, const BuilderWord& y,
                      const SequenceGenerator& sequence, std::size_t horizon) {
  if (y.size() <= x.size()) {
    throw std::invalid_argument("lcm_merge requires |y| > |x|");
  }
  if (is_built_from(y.word(), x)) return y;

  const std::size_t q = std::lcm(x.zero_count(), y.zero_count());
  const FiniteWord prefix = sequence.prefix(horizon);
  std::size_t seen = 0;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (prefix[i] == 0 && ++seen == q) return BuilderWord(prefix.prefix(i + 1));
  }
  throw InsufficientHorizon(q, seen);
}

GeneratingChain extract_generating_sequence(const SequenceGenerator& sequence,
                                            std::size_t horizon, std::size_t max_block_len,
                                            BlockCountMode mode) {
  const std::vector<BuilderWord> candidates =
      enumerate_builders(sequence, horizon, max_block_len);
  GeneratingChain chain;
  if (candidates.empty()) {
    chain.stalled = true;
    return chain;
  }
  chain.links.push_back(candidates.front());  // always "0"

  const std::size_t min_blocks = mode == BlockCountMode::kMoreThanTwo ? 3 : 2;
  auto copies = [&](const BuilderWord& longer, const BuilderWord& shorter) -> std::size_t {
    auto parsed = parse_built_from(longer.word(), shorter, TailPolicy::kExact);
    if (auto* d = std::get_if<BuildDecomposition>(&parsed)) return d->block_count();
    return 0;
  };

  while (true) {
    const BuilderWord& current = chain.links.back();
    std::optional<BuilderWord> next;
    std::size_t next_copies = 0;

    for (const BuilderWord& c : candidates) {
      if (c.size() <= current.size()) continue;
      const std::size_t q = copies(c, current);
      if (q >= min_blocks) {
        next = c;
        next_copies = q;
        break;
      }
    }
    if (!next) {
      for (const BuilderWord& c : candidates) {
        if (c.size() <= current.size()) continue;
        try {
          BuilderWord z = lcm_merge(current, c, sequence, horizon);
          if (z.size() > max_block_len || (next && z.size() >= next->size())) continue;
          const std::size_t q = copies(z, current);
          if (q >= min_blocks) {
            next = std::move(z);
            next_copies = q;
          }
        } catch (const InsufficientHorizon&) {
        }
      }
    }
    if (!next) {
      chain.stalled = true;
      break;
    }
    chain.links.push_back(std::move(*next));
    chain.multiplicities.push_back(next_copies);
  }
  return chain;
}

std::string to_string(WitnessReport::Status status) {
  switch (status) {
    case WitnessReport::Status::kVerified:
      return "verified";
    case WitnessReport::Status::kMalformed:
      return "malformed";
    case WitnessReport::Status::kNotInF:
      return "not-in-F";
    case WitnessReport::Status::kBadBaseLevel:
      return "bad-base-level";
    case WitnessReport::Status::kNotBuilt:
      return "not-built";
    case WitnessReport::Status::kPrefixMismatch:
      return "prefix-mismatch";
  }
  return "unknown";
}

WitnessReport verify_rank_witness(const RankWitness& witness, const SequenceGenerator& sequence) {
  using Status = WitnessReport::Status;
  auto fail = [](Status s, std::size_t level, std::size_t index, std::string detail) {
    WitnessReport r;
    r.status = s;
    r.level = level;
    r.index = index;
    r.levels_checked = level;
    r.detail = std::move(detail);
    return r;
  };

  if (witness.rank == 0 || witness.levels.empty()) {
    return fail(Status::kMalformed, 0, 0, "witness has no levels or rank 0");
  }
  for (std::size_t i = 0; i < witness.levels.size(); ++i) {
    if (witness.levels[i].size() != witness.rank) {
      return fail(Status::kMalformed, i, 0,
                  "level holds " + std::to_string(witness.levels[i].size()) +
                      " words, rank is " + std::to_string(witness.rank));
    }
    for (std::size_t j = 0; j < witness.rank; ++j) {
      if (!BuilderWord::eligible(witness.levels[i][j])) {
        return fail(Status::kNotInF, i, j, witness.levels[i][j].str() + " is not in F");
      }
    }
  }
  for (std::size_t j = 0; j < witness.rank; ++j) {
    if (witness.levels[0][j] != FiniteWord("0")) {
      return fail(Status::kBadBaseLevel, 0, j, "level 0 must be all \"0\"");
    }
  }

  std::vector<BuilderWord> previous;
  for (std::size_t i = 0; i < witness.levels.size(); ++i) {
    const auto& level = witness.levels[i];
    const FiniteWord& lead = level.front();
    if (sequence.prefix(lead.size()) != lead) {
      return fail(Status::kPrefixMismatch, i, 0,
                  "sequence does not start with the level's first word");
    }
    if (i > 0) {
      for (std::size_t j = 0; j < level.size(); ++j) {
        if (!is_built_from_set(level[j], previous, TailPolicy::kExact)) {
          return fail(Status::kNotBuilt, i, j, "no decomposition over level " +
                                                   std::to_string(i - 1));
        }
      }
    }
    previous.clear();
    for (const auto& w : level) previous.emplace_back(w);
  }

  WitnessReport ok;
  ok.levels_checked = witness.levels.size();
  return ok;
}

ExpectedOccurrenceParse kalikow_decompose(const FiniteWord& window, const BuilderWord& v) {
  if (window.size() < 3 * v.size()) {
    throw std::invalid_argument("window shorter than three copies of the block");
  }
  const std::string_view text = window.view();
  const std::string_view block = v.word().view();
  const std::size_t n = text.size();

  std::size_t max_run = 0;
  for (std::size_t i = 0; i < n;) {
    const std::size_t run = ones_run(text, i);
    max_run = std::max(max_run, run);
    i += run ? run : 1;
  }

  ExpectedOccurrenceParse result{v, {}, 0, 0, 0, {}};
  const std::size_t last_start = std::min(n, block.size() + max_run);
  for (std::size_t s = 0; s < last_start; ++s) {
    std::string_view core = text.substr(0, s);
    while (!core.empty() && core.back() == '1') core.remove_suffix(1);
    if (core.size() >= block.size() || !block.ends_with(core)) continue;

    std::vector<std::size_t> occ;
    std::size_t pos = s;
    bool ok = true;
    while (pos < n) {
      if (match_length(text, pos, block) == block.size()) {
        occ.push_back(pos);
        pos += block.size();
        pos += ones_run(text, pos);
      } else {
        const std::string_view rest = text.substr(pos);
        ok = !occ.empty() && rest.size() < block.size() && block.starts_with(rest);
        break;
      }
    }
    if (!ok || occ.empty()) continue;
    if (result.decompositions.empty()) {
      result.offsets = occ;
      result.left_slack = s;
      result.right_slack = n - (occ.back() + block.size());
    }
    result.decompositions.push_back(std::move(occ));
  }
  result.alternates = result.decompositions.size();
  if (result.alternates == 0) {
    throw NoDecomposition("window admits no decomposition into copies of " +
                          v.word().str());
  }
  return result;
}

}  // namespace rankshift

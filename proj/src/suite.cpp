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

#include "rankshift/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "rankshift/analysis.hpp"
#include "rankshift/builder.hpp"
#include "rankshift/error.hpp"
#include "rankshift/oracles.hpp"
#include "rankshift/sequences.hpp"
#include "rankshift/substitution.hpp"

#ifndef RANKSHIFT_SOURCE_FIXTURES
#define RANKSHIFT_SOURCE_FIXTURES "fixtures"
#endif

namespace rankshift {

struct SuiteContext {
  const SuiteOptions& options;
  Json fixtures = Json::object();  // stored measurements
  Json measured = Json::object();  // measurements taken in this run

  SequenceGenerator sequence(const std::string& id) const {
    const auto it = options.overrides.find(id);
    return make_sequence(it == options.overrides.end() ? id : it->second);
  }

  SequenceResolver resolver() const {
    return [this](std::string_view id) { return sequence(std::string(id)); };
  }

  /// Records `value` under `key` and, unless blessing, compares it to the
  /// stored fixture. Returns a failure description or an empty string.
  std::string record(const std::string& key, const Json& value) {
    measured[key] = value;
    if (options.bless) return {};
    if (!fixtures.contains(key)) return "no stored fixture for " + key + " (run suite --bless)";
    const Json& stored = fixtures[key];
    if (value.is_number_float() || stored.is_number_float()) {
      const double a = value.get<double>();
      const double b = stored.get<double>();
      if (std::abs(a - b) <= kFixtureTolerance) return {};
    } else if (value == stored) {
      return {};
    }
    return key + " measured " + value.dump() + ", fixture holds " + stored.dump();
  }
};

namespace {

using Clock = std::chrono::steady_clock;

/// Collects failed sub-checks of one criterion.
// Verdicts name the count and at most three shortest builders; the full set is in data.
std::string builder_summary(const std::vector<BuilderWord>& builders) {
  std::string out = "has " + std::to_string(builders.size()) + " member(s):";
  for (std::size_t i = 0; i < builders.size() && i < 3; ++i) out += " " + builders[i].word().str();
  if (builders.size() > 3) out += " ...";
  return out;
}

struct Failures {
  std::vector<std::string> items;

  void expect(bool condition, const std::string& what) {
    if (!condition) items.push_back(what);
  }
  void add(const std::string& what) {
    if (!what.empty()) items.push_back(what);
  }
  bool empty() const { return items.empty(); }

  void finish(CheckResult& r, const std::string& success) const {
    r.passed = items.empty();
    if (r.passed) {
      r.verdict = success;
      return;
    }
    r.verdict = items.front();
    if (items.size() > 1) r.verdict += " (+" + std::to_string(items.size() - 1) + " more)";
    for (const auto& item : items) r.witnesses.push_back(item);
  }
};

std::string join_sizes(const std::vector<std::size_t>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + std::to_string(xs[i]);
  return out;
}

CheckResult a1_tm_forbidden(SuiteContext& ctx) {
  constexpr std::size_t kHorizon = std::size_t{1} << 20;
  CheckResult r;
  r.params = {{"sequence", "thue-morse"}, {"patterns", {"01010", "10101"}}};
  r.horizon = kHorizon;
  const auto audit = forbidden_factor_audit(ctx.sequence("thue-morse"),
                                            {FiniteWord("01010"), FiniteWord("10101")}, kHorizon);
  r.data = to_json(audit);
  Failures f;
  for (const auto& row : audit.rows) {
    f.expect(row.occurrences == 0, row.pattern.str() + " occurs at " +
                                       std::to_string(row.first_position.value_or(0)));
  }
  f.finish(r, "01010 and 10101 absent from prefix(2^20)");
  r.approximations.push_back("finite prefix of the infinite word");
  return r;
}

CheckResult a2_tm_cubes(SuiteContext& ctx) {
  constexpr std::size_t kHorizon = std::size_t{1} << 14;
  CheckResult r;
  r.params = {{"sequence", "thue-morse"}};
  r.horizon = kHorizon;
  const auto report = find_cubes(ctx.sequence("thue-morse"), kHorizon, 16);
  r.data = to_json(report);
  Failures f;
  if (!report.cubes.empty()) {
    const auto& c = report.cubes.front();
    f.add("cube of root length " + std::to_string(c.root_length) + " at " +
          std::to_string(c.position));
  }
  f.finish(r, "cube-free on prefix(2^14)");
  r.approximations.push_back("finite prefix of the infinite word");
  return r;
}

CheckResult a3_tm_not_rank_one(SuiteContext& ctx) {
  constexpr std::size_t kHorizon = std::size_t{1} << 13;
  constexpr std::size_t kMaxBlock = 1024;
  CheckResult r;
  r.params = {{"sequence", "thue-morse"}, {"max_block_len", kMaxBlock}};
  r.horizon = kHorizon;
  const auto builders = enumerate_builders(ctx.sequence("thue-morse"), kHorizon, kMaxBlock);
  r.data = {{"builders", to_json(builders)}};
  Failures f;
  f.expect(builders.size() == 1 && builders.front().word() == FiniteWord("0"),
           "builder set " + builder_summary(builders) + ", expected {0}");
  f.finish(r, "rank-one refuted at horizon: only builder is 0");
  r.approximations.push_back("A_V candidates at horizon 2^13 with max_block_len 1024");
  return r;
}

CheckResult a4_tm_witness(SuiteContext& ctx) {
  constexpr std::size_t kDepth = 12;
  CheckResult r;
  r.params = {{"sequence", "thue-morse"}, {"depth", kDepth}};
  const auto witness = thue_morse_rank2_witness(kDepth);
  r.horizon = witness.levels.back().front().size();
  const auto report = verify_rank_witness(witness, ctx.sequence("thue-morse"));
  Failures f;
  f.expect(report.ok(), "witness rejected at level " + std::to_string(report.level) + ": " +
                            to_string(report.status));
  Json pairs = Json::array();
  for (std::size_t i = 0; i < witness.levels.size(); ++i) {
    const auto& a = witness.levels[i][0];
    const auto& b = witness.levels[i][1];
    const auto lcp = longest_common_prefix(a, b);
    const auto lcs = longest_common_suffix(a, b);
    pairs.push_back({{"level", i}, {"lengths", {a.size(), b.size()}}, {"lcp", lcp}, {"lcs", lcs}});
    f.expect(lcp == 1 && lcs == 1, "level " + std::to_string(i) + " common prefix/suffix is " +
                                       std::to_string(lcp) + "/" + std::to_string(lcs));
  }
  r.data = {{"witness_report", to_json(report)}, {"levels", pairs}};
  f.finish(r, "rank-2 witness verified to depth 12; every pair shares exactly 0 at both ends");
  r.approximations.push_back("witness verified to finite depth");
  return r;
}

CheckResult a5_chacon_chain(SuiteContext& ctx) {
  constexpr std::size_t kMaxLink = 10000;
  std::vector<std::size_t> expected{1};
  while (3 * expected.back() + 1 <= kMaxLink) expected.push_back(3 * expected.back() + 1);
  // The prefix must hold three copies of the longest expected link.
  const std::size_t horizon = 3 * expected.back() + 1;
  const std::size_t max_block = horizon / 2;

  CheckResult r;
  r.params = {{"sequence", "chacon"}, {"max_block_len", max_block}, {"max_link", kMaxLink}};
  r.horizon = horizon;
  const SequenceGenerator seq = ctx.sequence("chacon");
  const auto chain = extract_generating_sequence(seq, horizon, max_block);
  r.data = {{"chain", to_json(chain)}, {"expected_lengths", expected}};

  std::vector<std::size_t> lengths;
  for (const auto& link : chain.links) lengths.push_back(link.size());
  Failures f;
  f.expect(lengths == expected,
           "chain lengths [" + join_sizes(lengths) + "], expected [" + join_sizes(expected) + "]");
  for (std::size_t i = 0; i + 1 < chain.links.size(); ++i) {
    f.expect(is_built_from(chain.links[i + 1].word(), chain.links[i]),
             "link " + std::to_string(i + 1) + " is not built from link " + std::to_string(i));
  }
  f.finish(r, "generating sequence |v_k| = " + join_sizes(lengths));
  r.approximations.push_back("A_V candidates at the stated horizon");
  return r;
}

CheckResult a6_equivalence(SuiteContext& ctx) {
  constexpr std::size_t kTrials = 100;
  constexpr std::size_t kMaxDepth = 5;
  constexpr std::size_t kExtraLevels = 2;  // horizon reaches two levels past the deepest builder

  CheckResult r;
  r.params = {{"trials", kTrials}, {"seed", ctx.options.seed}, {"max_depth", kMaxDepth},
              {"copies", {3, 4}}, {"spacers", {0, 1, 2}}};
  std::mt19937_64 rng(ctx.options.seed);
  Failures f;
  std::size_t pairs = 0;
  std::size_t horizon_max = 0;
  for (std::size_t t = 0; t < kTrials; ++t) {
    const std::size_t depth = 1 + rng() % kMaxDepth;
    const auto c = random_generating_sequence(rng, depth + kExtraLevels);
    const FiniteWord& prefix = c.levels.back();
    const SequenceGenerator seq = from_word(prefix, "trial-" + std::to_string(t));
    const std::size_t horizon = prefix.size();
    horizon_max = std::max(horizon_max, horizon);
    const auto builders = enumerate_builders(seq, horizon, c.levels[depth].size());
    const std::string trial = "trial " + std::to_string(t) + ": ";

    for (std::size_t k = 0; k <= depth; ++k) {
      const bool found = std::any_of(builders.begin(), builders.end(), [&](const BuilderWord& b) {
        return b.word() == c.levels[k];
      });
      f.expect(found, trial + "v_" + std::to_string(k) + " missing from the builder set");
    }
    for (std::size_t i = 0; i < builders.size(); ++i) {
      for (std::size_t j = 0; j < builders.size(); ++j) {
        if (builders[i].size() >= builders[j].size()) continue;
        ++pairs;
        try {
          const BuilderWord z = lcm_merge(builders[i], builders[j], seq, horizon);
          const bool merged = z == builders[j]
                                  ? is_built_from(z.word(), builders[i])
                                  : is_built_from(z.word(), builders[i]) &&
                                        is_built_from(z.word(), builders[j]);
          f.expect(merged && std::holds_alternative<BuildDecomposition>(parse_built_from(
                                 prefix, z, TailPolicy::kAllowTruncated)),
                   trial + "lcm_merge(" + builders[i].word().str() + ", " +
                       builders[j].word().str() + ") does not verify");
        } catch (const InsufficientHorizon& e) {
          f.add(trial + e.what());
        }
      }
    }
  }
  r.horizon = horizon_max;
  r.data = {{"merged_pairs", pairs}};
  f.finish(r, "every v_k recovered and " + std::to_string(pairs) +
                  " lcm merges verified over 100 random generating sequences");
  r.approximations.push_back("each trial uses a finite prefix two levels past the deepest v_k");
  return r;
}

bool strictly_longer(BigLength a, BigLength b) { return a > b; }

CheckResult a7_substitution(SuiteContext& ctx) {
  constexpr std::size_t kDepth = 6;
  CheckResult r;
  r.params = {{"depth", kDepth}, {"sequences", {"thue-morse", "fibonacci", "cantor"}}};
  Failures f;
  Json analyses = Json::object();

  const std::vector<std::pair<std::string, Substitution>> main_cases{
      {"thue-morse", thue_morse_substitution()}, {"fibonacci", fibonacci_substitution()}};
  for (const auto& [id, s] : main_cases) {
    const auto a = rank2_witness_from_substitution(s, kDepth);
    analyses[id] = to_json(a);
    f.expect(a.route == SubstitutionRoute::kMain || a.route == SubstitutionRoute::kMainAfterSquaring,
             id + " took route " + to_string(a.route));
    f.expect(a.parts.size() == kDepth, id + " computed " + std::to_string(a.parts.size()) +
                                           " levels");
    for (std::size_t k = 0; k + 1 < a.parts.size(); ++k) {
      const auto& cur = a.parts[k];
      const auto& nxt = a.parts[k + 1];
      const std::string at = id + " k=" + std::to_string(cur.level) + ": ";
      f.expect(strictly_longer(nxt.v_length, cur.v_length), at + "|v| does not grow");
      f.expect(strictly_longer(nxt.w_length, cur.w_length), at + "|w| does not grow");
      for (const BigLength s2 : {nxt.x, nxt.y, nxt.z}) {
        f.expect(s2 == cur.x || s2 == cur.y || s2 == cur.z || s2 == 0,
                 at + "spacer " + to_string(s2) + " outside {x, y, z, 0}");
      }
    }
    for (const auto& p : a.parts) {
      if (!p.v) continue;
      f.expect(p.v->size() == p.v_length && p.w->size() == p.w_length,
               id + " materialized parts disagree with symbolic lengths at k=" +
                   std::to_string(p.level));
    }
    if (a.witness) {
      const auto report = verify_rank_witness(*a.witness, ctx.sequence(id));
      f.expect(report.ok(), id + " witness rejected: " + to_string(report.status));
    } else {
      f.add(id + " produced no witness");
    }
  }

  const auto cantor = rank2_witness_from_substitution(cantor_substitution(), kDepth);
  analyses["cantor"] = to_json(cantor);
  f.expect(cantor.route == SubstitutionRoute::kRankOne,
           "cantor took route " + to_string(cantor.route));
  if (cantor.witness) {
    f.expect(cantor.witness->rank == 1, "cantor witness has rank " +
                                            std::to_string(cantor.witness->rank));
    const auto report = verify_rank_witness(*cantor.witness, ctx.sequence("cantor"));
    f.expect(report.ok(), "cantor witness rejected: " + to_string(report.status));
  } else {
    f.add("cantor produced no witness");
  }

  r.data = analyses;
  f.finish(r, "levels grow strictly and spacers stay in {x_k, y_k, z_k, 0} for k <= 6; "
              "cantor takes the rank-one branch");
  r.approximations.push_back("lengths for large k are symbolic; words materialized up to 2^16");
  return r;
}

CheckResult a8_sturmian(SuiteContext& ctx) {
  constexpr std::size_t kNMax = 200;
  constexpr std::size_t kHorizon = 100000;
  const std::vector<std::string> ids{"fibonacci", "sturmian:1", "sturmian:2;1", "sturmian:1,2"};
  CheckResult r;
  r.params = {{"n_max", kNMax}, {"sequences", ids}};
  r.horizon = kHorizon;
  Failures f;
  for (const auto& id : ids) {
    const SequenceGenerator seq = ctx.sequence(id);
    const auto v = sturmian_check(seq, kNMax, kHorizon);
    r.data[id] = {{"complexity_ok", v.complexity_ok},
                  {"balanced", v.balanced},
                  {"type", v.type ? Json(*v.type) : Json()}};
    f.expect(v.complexity_ok, id + ": p(n) != n + 1 at n = " +
                                  std::to_string(v.first_complexity_failure.value_or(0)));
    f.expect(v.balanced, id + ": unbalanced");
    f.expect(v.type.has_value(), id + ": no definite type");
    if (id == "fibonacci") {
      f.expect(v.type == 0, "fibonacci is not type 0");
      const bool has = contains_factor(seq.prefix(kHorizon), FiniteWord("10101"));
      r.data[id]["contains_10101"] = has;
      f.expect(!has, "fibonacci contains 10101");
    }
  }
  f.finish(r, "p(n) = n + 1 for n <= 200, balanced, definite type; fibonacci type 0 "
              "without 10101");
  r.approximations.push_back("complexity and balance measured on prefix(10^5)");
  return r;
}

CheckResult a9_complexity(SuiteContext& ctx) {
  constexpr std::size_t kM = 300;
  constexpr std::size_t kHorizon = 100000;
  constexpr double kEntropyCeiling = 0.06;
  constexpr std::size_t kBernoulliN = 10;
  CheckResult r;
  r.params = {{"m_max", kM}, {"entropy_ceiling", kEntropyCeiling}, {"bernoulli_n", kBernoulliN}};
  r.horizon = kHorizon;
  Failures f;

  const auto profile = complexity_profile(ctx.sequence("chacon"), kM, kHorizon);
  std::size_t worst_slack = std::numeric_limits<std::size_t>::max();
  for (const auto& [m, p] : profile.entries) {
    const auto bound = rank_one_complexity_bound(m);
    f.expect(p <= bound, "chacon p(" + std::to_string(m) + ") = " + std::to_string(p) +
                             " exceeds " + std::to_string(bound));
    if (p <= bound) worst_slack = std::min<std::size_t>(worst_slack, bound - p);
  }
  r.data["chacon_p_300"] = profile.p(kM);
  r.data["chacon_min_bound_slack"] = worst_slack;
  f.add(ctx.record("chacon.p.300", profile.p(kM)));

  Json entropies = Json::object();
  for (const std::string id : {"chacon", "thue-morse", "fibonacci"}) {
    const double e = entropy_estimate(ctx.sequence(id), kM, kHorizon);
    entropies[id] = e;
    f.expect(e <= kEntropyCeiling, id + " entropy " + std::to_string(e) + " above 0.06");
    f.add(ctx.record(id + ".entropy.300", e));
  }
  const std::size_t bern_h = bernoulli_horizon(kBernoulliN);
  const double bern = entropy_estimate(ctx.sequence("bernoulli"), kBernoulliN, bern_h);
  entropies["bernoulli@10"] = bern;
  f.expect(bern == 1.0, "bernoulli entropy at n = 10 is " + std::to_string(bern));
  f.add(ctx.record("bernoulli.entropy.10", bern));

  r.data["entropy"] = entropies;
  r.data["bernoulli_horizon"] = bern_h;
  f.finish(r, "chacon within the rank-one bound for m <= 300; entropy(300) <= 0.06 for "
              "chacon, thue-morse, fibonacci; bernoulli entropy(10) = 1");
  r.approximations.push_back("entropy is log2 p(n) / n at a single n, not a limit");
  return r;
}

CheckResult a10_oracles(SuiteContext& ctx) {
  constexpr std::size_t kMaxWord = 16;
  constexpr std::size_t kMaxBlock = 8;
  constexpr std::size_t kMaxCubeWindow = 256;
  constexpr std::size_t kMaxFactorWindow = 512;
  CheckResult r;
  r.params = {{"max_word", kMaxWord}, {"max_block", kMaxBlock},
              {"max_cube_window", kMaxCubeWindow}, {"max_factor_window", kMaxFactorWindow},
              {"seed", ctx.options.seed}};
  Failures f;

  std::vector<BuilderWord> blocks;
  for (std::size_t len = 1; len <= kMaxBlock; ++len) {
    for (std::uint64_t bits = 0; bits >> len == 0; ++bits) {
      std::string s(len, '0');
      for (std::size_t i = 0; i < len; ++i) s[i] = (bits >> (len - 1 - i)) & 1 ? '1' : '0';
      FiniteWord w(s);
      if (BuilderWord::eligible(w)) blocks.emplace_back(std::move(w));
    }
  }
  std::size_t parse_pairs = 0;
  for (std::size_t len = 0; len <= kMaxWord && f.items.size() < 20; ++len) {
    std::string s(len, '0');
    for (std::uint64_t bits = 0; bits >> len == 0; ++bits) {
      for (std::size_t i = 0; i < len; ++i) s[i] = (bits >> (len - 1 - i)) & 1 ? '1' : '0';
      const FiniteWord w(s);
      for (const auto& v : blocks) {
        ++parse_pairs;
        const auto parsed = parse_built_from(w, v, TailPolicy::kExact);
        const bool ok = std::holds_alternative<BuildDecomposition>(parsed);
        if (!ok && !w.starts_with(v.word())) continue;  // oracle count is 0 by construction
        const std::size_t ways = oracle::count_exact_decompositions(w, v.word());
        f.expect(ok == (ways > 0), "parse(" + s + ", " + v.word().str() + ") disagrees");
        f.expect(!ok || ways == 1, "parse(" + s + ", " + v.word().str() + ") is not unique");
        if (ok) {
          f.expect(std::get<BuildDecomposition>(parsed).reassemble() == w,
                   "parse(" + s + ", " + v.word().str() + ") does not reassemble");
        }
      }
    }
  }

  std::mt19937_64 rng(ctx.options.seed);
  std::vector<FiniteWord> windows;
  for (const std::string id : {"thue-morse", "chacon", "fibonacci", "bernoulli", "rank3-w"}) {
    windows.push_back(ctx.sequence(id).prefix(kMaxFactorWindow));
  }
  for (std::size_t i = 0; i < 40; ++i) {
    std::string s(1 + rng() % kMaxFactorWindow, '0');
    const std::uint64_t density = 1 + rng() % 3;  // 1/4, 2/4 or 3/4 ones
    for (auto& c : s) c = rng() % 4 < density ? '1' : '0';
    windows.emplace_back(s);
  }
  std::size_t cube_windows = 0;
  for (const auto& w : windows) {
    for (std::size_t len : {std::size_t{1}, std::size_t{7}, std::size_t{31}, std::size_t{100},
                            std::size_t{255}, kMaxCubeWindow}) {
      if (len > w.size()) continue;
      const FiniteWord window = w.prefix(len);
      ++cube_windows;
      f.expect(find_cubes(window).cubes == oracle::cubes(window),
               "find_cubes disagrees on a window of length " + std::to_string(len));
    }
  }
  std::size_t factor_cases = 0;
  for (const auto& w : windows) {
    for (std::size_t n : {1, 2, 3, 5, 8, 13, 21}) {
      for (const Window win : {Window{0, w.size()}, Window{w.size() / 3, w.size()}}) {
        if (win.size() < n) continue;
        ++factor_cases;
        f.expect(factor_set(w, n, win).factors == oracle::factors(w, n, win.begin, win.end),
                 "factor_set disagrees at n = " + std::to_string(n));
      }
    }
  }

  r.data = {{"parse_pairs", parse_pairs},
            {"cube_windows", cube_windows},
            {"factor_cases", factor_cases}};
  f.finish(r, "parser, cube search and factor sets agree with brute-force oracles");
  return r;
}

CheckResult a11_shift(SuiteContext& ctx) {
  constexpr std::size_t kNMax = 20;
  struct Pair {
    std::string v, w;
    std::size_t horizon, tail;
  };
  const std::vector<Pair> pairs{{"periodic:01", "periodic:10", 4096, 1024},
                                {"chacon", "chacon-flip", 10000, 64}};
  CheckResult r;
  r.params = {{"n_max", kNMax}};
  Failures f;
  Json reports = Json::array();
  for (const auto& p : pairs) {
    const auto report =
        factor_subset_report(ctx.sequence(p.v), ctx.sequence(p.w), kNMax, p.tail, p.horizon);
    reports.push_back({{"v", p.v}, {"w", p.w}, {"tail_start", p.tail}, {"horizon", p.horizon},
                       {"mutual", report.mutual()}});
    r.horizon = std::max(r.horizon, p.horizon);
    f.expect(report.mutual(), p.v + " and " + p.w + " are not mutually included");
  }
  r.data = {{"pairs", reports}};
  f.finish(r, "mutual factor inclusion for n <= 20 in both pairs");
  r.approximations.push_back(
      "appears infinitely often approximated by the tail window [tail_start, horizon)");
  return r;
}

CheckResult a12_bernoulli(SuiteContext& ctx) {
  constexpr std::size_t kMaxBlock = 64;
  constexpr std::size_t kFullLength = 10;
  const std::size_t horizon = bernoulli_horizon(kFullLength);
  CheckResult r;
  r.params = {{"sequence", "bernoulli"}, {"max_block_len", kMaxBlock}, {"n_max", kFullLength}};
  r.horizon = horizon;
  const SequenceGenerator seq = ctx.sequence("bernoulli");
  const auto builders = enumerate_builders(seq, horizon, kMaxBlock);
  const auto profile = complexity_profile(seq, kFullLength, horizon);
  Failures f;
  f.expect(builders.size() == 1 && builders.front().word() == FiniteWord("0"),
           "builder set " + builder_summary(builders) + ", expected {0}");
  for (const auto& [n, p] : profile.entries) {
    f.expect(p == (std::uint64_t{1} << n), "p(" + std::to_string(n) + ") = " + std::to_string(p));
  }
  r.data = {{"builders", to_json(builders)}, {"profile", to_json(profile)}};
  f.finish(r, "finite evidence only: builders = {0} and p(n) = 2^n for n <= 10");
  r.approximations.push_back("finite evidence of infinite rank; not a proof");
  return r;
}

std::vector<Criterion> build_criteria() {
  return {
      {"A1", "tm-forbidden-factors", {"tm"}, 5.0, a1_tm_forbidden},
      {"A2", "tm-cube-free", {"tm"}, 30.0, a2_tm_cubes},
      {"A3", "tm-not-rank-one", {"tm", "builder"}, 60.0, a3_tm_not_rank_one},
      {"A4", "tm-rank2-witness", {"tm", "witness"}, 0.0, a4_tm_witness},
      {"A5", "chacon-generating-sequence", {"chacon", "builder"}, 0.0, a5_chacon_chain},
      {"A6", "definition-equivalence", {"builder", "property"}, 0.0, a6_equivalence},
      {"A7", "substitution-rank-two", {"substitution", "tm", "fibonacci", "cantor"}, 0.0,
       a7_substitution},
      {"A8", "sturmian-battery", {"sturmian", "fibonacci"}, 60.0, a8_sturmian},
      {"A9", "complexity-entropy", {"complexity", "chacon", "tm", "fibonacci", "bernoulli"},
       0.0, a9_complexity},
      {"A10", "oracle-equivalence", {"oracle", "property"}, 0.0, a10_oracles},
      {"A11", "shift-factor-inclusion", {"shift", "chacon"}, 0.0, a11_shift},
      {"A12", "bernoulli-non-rank", {"bernoulli", "builder"}, 0.0, a12_bernoulli},
  };
}

bool selected(const Criterion& c, const std::vector<std::string>& only) {
  if (only.empty()) return true;
  return std::any_of(only.begin(), only.end(), [&](const std::string& tag) {
    return tag == c.id || std::find(c.tags.begin(), c.tags.end(), tag) != c.tags.end();
  });
}

Json load_fixtures(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) return Json::object();
  Json j = Json::parse(in, nullptr, false);
  if (j.is_discarded() || !j.contains("measurements")) return Json::object();
  return j["measurements"];
}

}  // namespace

const std::vector<Criterion>& acceptance_criteria() {
  static const std::vector<Criterion> criteria = build_criteria();
  return criteria;
}

std::vector<std::string> suite_tags() {
  std::set<std::string> tags;
  for (const auto& c : acceptance_criteria()) tags.insert(c.tags.begin(), c.tags.end());
  return {tags.begin(), tags.end()};
}

std::filesystem::path default_fixtures_dir() {
  if (const char* env = std::getenv("RANKSHIFT_FIXTURES"); env && *env) return env;
  return RANKSHIFT_SOURCE_FIXTURES;
}

Report run_suite(const SuiteOptions& options) {
  const std::filesystem::path dir =
      options.fixtures_dir.empty() ? default_fixtures_dir() : options.fixtures_dir;
  const std::filesystem::path fixture_file = dir / kMeasurementFixture;

  SuiteContext ctx{options};
  ctx.fixtures = load_fixtures(fixture_file);

  Report report;
  report.config = {{"command", "suite"},
                   {"only", options.only},
                   {"overrides", options.overrides},
                   {"seed", options.seed},
                   {"bless", options.bless},
                   {"timing", options.timing},
                   {"fixture", kMeasurementFixture}};
  for (const auto& c : acceptance_criteria()) {
    if (!selected(c, options.only)) continue;
    const auto start = Clock::now();
    CheckResult result;
    try {
      result = c.run(ctx);
    } catch (const std::exception& e) {
      result.passed = false;
      result.verdict = std::string("error: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    result.check = c.id + " " + c.name;
    result.params["tags"] = c.tags;
    if (options.timing) {
      result.seconds = seconds;
      if (c.budget_seconds > 0.0) {
        result.params["budget_seconds"] = c.budget_seconds;
        if (seconds > c.budget_seconds) {
          result.passed = false;
          std::ostringstream over;
          over << result.verdict << " (took " << seconds << " s, budget " << c.budget_seconds
               << " s)";
          result.verdict = over.str();
        }
      }
    }
    report.results.push_back(std::move(result));
  }

  if (options.bless) {
    Json stored = ctx.fixtures;
    for (const auto& [key, value] : ctx.measured.items()) stored[key] = value;
    std::filesystem::create_directories(dir);
    std::ofstream out(fixture_file);
    if (!out) throw std::runtime_error("cannot write fixture '" + fixture_file.string() + "'");
    out << render_json(Json{{"measurements", stored}});
  }
  return report;
}

}  // namespace rankshift

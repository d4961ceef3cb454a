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

#include "rankshift/checks.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "rankshift/analysis.hpp"
#include "rankshift/builder.hpp"
#include "rankshift/sequences.hpp"
#include "rankshift/substitution.hpp"

namespace rankshift {
namespace {

const char* kBuilderApprox =
    "A_V candidates at horizon: prefixes ending in 0 of length <= max_block_len that parse "
    "prefix(horizon) with a truncated tail";
const char* kWitnessApprox = "witness verified to finite depth; the limit word is checked by prefix";
const char* kTailApprox =
    "appears infinitely often approximated by appears in the tail window [tail_start, horizon)";
const char* kHorizonApprox = "property checked on prefix(horizon) only";

std::string word_list(const std::vector<FiniteWord>& ws) {
  std::string out;
  for (std::size_t i = 0; i < ws.size(); ++i) out += (i ? ", " : "") + ws[i].str();
  return out;
}

RankWitness trim_to_horizon(RankWitness w, std::size_t horizon) {
  std::size_t keep = 1;
  while (keep < w.levels.size() && w.levels[keep].front().size() <= horizon) ++keep;
  w.levels.resize(keep);
  return w;
}

std::size_t log_ceiling(std::size_t value, std::size_t base) {
  std::size_t k = 0;
  for (std::size_t x = 1; x < value; x *= base) ++k;
  return k;
}

std::optional<Substitution> known_substitution(std::string_view id) {
  if (id == "fibonacci") return fibonacci_substitution();
  if (id == "cantor") return cantor_substitution();
  if (id == "chacon" || id == "chacon-subst") return chacon_substitution();
  if (id.starts_with("subst:")) {
    const std::string_view images = id.substr(6);
    const auto comma = images.find(',');
    if (comma == std::string_view::npos) return std::nullopt;
    return Substitution(FiniteWord(images.substr(0, comma)), FiniteWord(images.substr(comma + 1)));
  }
  return std::nullopt;
}

Json params_json(const CheckParams& p) {
  return {{"horizon", p.horizon},
          {"n_max", p.n_max},
          {"max_block_len", p.block_len()},
          {"tail_start", p.tail()},
          {"strict_q", p.strict_q}};
}

void require_ids(std::string_view check, std::span<const std::string> ids, std::size_t count) {
  if (ids.size() != count) {
    throw std::invalid_argument("check '" + std::string(check) + "' takes " +
                                std::to_string(count) + " sequence identifier(s)");
  }
}

CheckResult forbidden_factors(const SequenceGenerator& seq, const CheckParams& p) {
  std::vector<FiniteWord> patterns = p.patterns;
  if (patterns.empty()) patterns = {FiniteWord("01010"), FiniteWord("10101")};
  const auto audit = forbidden_factor_audit(seq, patterns, p.horizon);
  CheckResult r;
  r.passed = audit.clean();
  r.data = to_json(audit);
  if (r.passed) {
    r.verdict = "zero occurrences of " + word_list(patterns) + " in prefix(" +
                std::to_string(p.horizon) + ")";
  } else {
    for (const auto& row : audit.rows) {
      if (row.occurrences == 0) continue;
      if (!r.verdict.empty()) r.verdict += "; ";
      r.verdict += row.pattern.str() + " occurs " + std::to_string(row.occurrences) +
                   " times, first at " + std::to_string(*row.first_position);
      r.witnesses.push_back({{"pattern", row.pattern.str()}, {"position", *row.first_position}});
    }
  }
  return r;
}

CheckResult cubes(const SequenceGenerator& seq, const CheckParams& p) {
  constexpr std::size_t kMaxReported = 1000;
  const auto report = find_cubes(seq, p.horizon, kMaxReported);
  CheckResult r;
  r.passed = report.cubes.empty();
  r.data = to_json(report);
  if (r.passed) {
    r.verdict = "cube-free at horizon " + std::to_string(p.horizon);
  } else {
    const Cube& c = report.cubes.front();
    const FiniteWord root = factor_at(seq.prefix(p.horizon), c.position, c.root_length);
    r.verdict = std::to_string(report.cubes.size()) + (report.truncated ? "+" : "") +
                " cubes; leftmost (" + root.str() + ")^3 at " + std::to_string(c.position);
    r.witnesses.push_back({{"position", c.position}, {"root", root.str()}});
  }
  return r;
}

CheckResult balanced(const SequenceGenerator& seq, const CheckParams& p) {
  const auto report = is_balanced(seq, p.n_max, p.horizon);
  CheckResult r;
  r.passed = report.balanced();
  r.data = to_json(report);
  if (r.passed) {
    r.verdict = "balanced for every n <= " + std::to_string(p.n_max);
  } else {
    const auto& v = *report.violation;
    const FiniteWord text = seq.prefix(p.horizon);
    const FiniteWord light = factor_at(text, v.light_position, v.length);
    const FiniteWord heavy = factor_at(text, v.heavy_position, v.length);
    r.verdict = "unbalanced at n = " + std::to_string(v.length) + ": " + light.str() + " vs " +
                heavy.str();
    r.witnesses.push_back({{"light", light.str()}, {"heavy", heavy.str()}});
  }
  return r;
}

CheckResult sturmian(const SequenceGenerator& seq, const CheckParams& p) {
  const auto verdict = sturmian_check(seq, p.n_max, p.horizon);
  CheckResult r;
  r.passed = verdict.is_sturmian_at_horizon && verdict.type.has_value();
  r.data = to_json(verdict);
  r.data["profile"] = to_json(verdict.profile);
  if (r.passed) {
    r.verdict = "sturmian at horizon, type " + std::to_string(*verdict.type);
  } else if (!verdict.complexity_ok) {
    const std::size_t n = *verdict.first_complexity_failure;
    r.verdict = "not sturmian: p(" + std::to_string(n) + ") = " +
                std::to_string(verdict.profile.p(n)) + " != " + std::to_string(n + 1);
  } else if (!verdict.balanced) {
    r.verdict = "not sturmian: unbalanced at n = " +
                std::to_string(verdict.balance.violation->length);
  } else {
    r.verdict = "not sturmian: no definite type";
  }
  return r;
}

CheckResult complexity(const SequenceGenerator& seq, const CheckParams& p) {
  const auto profile = complexity_profile(seq, p.n_max, p.horizon);
  CheckResult r;
  r.passed = true;
  Json rows = Json::array();
  bool within = true;
  for (const auto& [n, count] : profile.entries) {
    const auto bound = rank_one_complexity_bound(n);
    within = within && count <= bound;
    rows.push_back({{"n", n}, {"p", count}, {"rank_one_bound", bound}});
  }
  r.data = {{"rows", rows}, {"within_rank_one_bound", within}};
  r.verdict = "p(" + std::to_string(p.n_max) + ") = " + std::to_string(profile.p(p.n_max)) +
              (within ? "; within" : "; exceeds") + " the rank-one bound for n <= " +
              std::to_string(p.n_max);
  return r;
}

CheckResult entropy(const SequenceGenerator& seq, const CheckParams& p) {
  if (p.horizon < 2 * p.n_max) throw std::invalid_argument("entropy needs horizon >= 2 * nmax");
  const auto counts = distinct_factor_counts(seq.prefix(p.horizon).view(), p.n_max);
  CheckResult r;
  r.passed = true;
  Json rows = Json::array();
  double last = 0.0;
  for (const auto n : entropy_ladder(p.n_max)) {
    last = std::log2(static_cast<double>(counts[n])) / static_cast<double>(n);
    rows.push_back({{"n", n}, {"p", counts[n]}, {"entropy", last}});
  }
  r.data = {{"rows", rows}};
  std::ostringstream v;
  v.precision(6);
  v << "entropy estimate " << last << " at n = " << p.n_max;
  r.verdict = v.str();
  r.approximations.push_back("entropy reported at finite n; read the trend over the ladder");
  return r;
}

CheckResult subset(const SequenceGenerator& a, const SequenceGenerator& b, const CheckParams& p) {
  const auto report = factor_subset_report(a, b, p.n_max, p.tail(), p.horizon);
  CheckResult r;
  r.passed = report.mutual();
  r.data = to_json(report);
  const std::string range = " for n <= " + std::to_string(p.n_max);
  if (report.mutual()) {
    r.verdict = "mutual inclusion" + range;
  } else if (report.forward()) {
    r.verdict = a.name() + " factors included in " + b.name() + " only" + range;
  } else if (report.backward()) {
    r.verdict = b.name() + " factors included in " + a.name() + " only" + range;
  } else {
    r.verdict = "neither factor language includes the other" + range;
  }
  for (const auto& row : report.rows) {
    for (const auto& w : row.missing_from_w) {
      r.witnesses.push_back({{"n", row.length}, {"factor", w.str()}, {"missing_from", b.name()}});
    }
    for (const auto& w : row.missing_from_v) {
      r.witnesses.push_back({{"n", row.length}, {"factor", w.str()}, {"missing_from", a.name()}});
    }
    if (r.witnesses.size() >= 16) break;
  }
  r.approximations.push_back(kTailApprox);
  return r;
}

}  // namespace

SequenceResolver default_resolver() {
  return [](std::string_view id) { return make_sequence(id); };
}

std::vector<std::string> check_names() {
  return {"forbidden-factors", "cubes", "balanced", "sturmian", "complexity", "entropy", "subset"};
}

std::vector<std::size_t> entropy_ladder(std::size_t n_max) {
  std::vector<std::size_t> out;
  for (std::size_t n = 1; n < n_max; n *= 2) out.push_back(n);
  if (n_max >= 1) out.push_back(n_max);
  return out;
}

CheckResult run_rank(std::string_view id, const CheckParams& params,
                     const SequenceResolver& resolve) {
  const SequenceGenerator seq = resolve(id);
  const std::size_t h = params.horizon;
  const std::size_t L = params.block_len();
  const auto mode = params.strict_q ? BlockCountMode::kMoreThanTwo : BlockCountMode::kAtLeastTwo;

  CheckResult r;
  r.check = "rank";
  r.params = params_json(params);
  r.params["sequence"] = std::string(id);
  r.horizon = h;
  r.approximations = {kBuilderApprox};

  const auto builders = enumerate_builders(seq, h, L);
  const auto chain = extract_generating_sequence(seq, h, L, mode);
  r.data["builders"] = to_json(builders);
  r.data["chain"] = to_json(chain);

  const bool refuted = builders.size() == 1;
  r.verdict = refuted ? "rank-one refuted at horizon (only builder is 0)" : "rank-one evidence";
  if (!refuted) {
    std::string lengths;
    for (const auto& link : chain.links) {
      r.witnesses.push_back(link.word().str());
      lengths += (lengths.empty() ? "" : ", ") + std::to_string(link.size());
    }
    r.verdict += ": generating sequence lengths [" + lengths + "]" +
                 (chain.stalled ? " (stalled at max_block_len)" : "");
  }

  std::optional<RankWitness> witness;
  if (id == "thue-morse") {
    witness = trim_to_horizon(thue_morse_rank2_witness(log_ceiling(h, 2) + 2), h);
  } else if (id == "rank3-w") {
    witness = trim_to_horizon(rank3_witness(log_ceiling(h, 3) + 2), h);
  } else if (const auto s = known_substitution(id); s && s->prolongable_at_zero()) {
    const auto analysis = rank2_witness_from_substitution(*s, params.substitution_depth, h);
    r.data["substitution"] = to_json(analysis);
    if (analysis.witness) witness = trim_to_horizon(*analysis.witness, h);
  }

  r.passed = true;
  if (witness && witness->depth() > 0) {
    const auto report = verify_rank_witness(*witness, seq);
    r.data["witness"] = to_json(*witness);
    r.data["witness_report"] = to_json(report);
    r.approximations.push_back(kWitnessApprox);
    const std::string rank = std::to_string(witness->rank);
    if (report.ok()) {
      r.verdict += "; rank-<=" + rank + " witness verified to depth " +
                   std::to_string(witness->depth());
      if (refuted) {
        for (const auto& w : witness->levels.back()) r.witnesses.push_back(w.str());
      }
    } else {
      r.passed = false;
      r.verdict += "; rank-<=" + rank + " witness failed at level " +
                   std::to_string(report.level) + " (" + to_string(report.status) + ")";
    }
  }
  return r;
}

CheckResult run_check(std::string_view name, std::span<const std::string> ids,
                      const CheckParams& params, const SequenceResolver& resolve) {
  const auto names = check_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) {
    throw UnknownCheck(std::string(name));
  }
  require_ids(name, ids, name == "subset" ? 2 : 1);
  const SequenceGenerator seq = resolve(ids[0]);

  CheckResult r;
  if (name == "forbidden-factors") r = forbidden_factors(seq, params);
  if (name == "cubes") r = cubes(seq, params);
  if (name == "balanced") r = balanced(seq, params);
  if (name == "sturmian") r = sturmian(seq, params);
  if (name == "complexity") r = complexity(seq, params);
  if (name == "entropy") r = entropy(seq, params);
  if (name == "subset") r = subset(seq, resolve(ids[1]), params);

  r.check = std::string(name);
  Json params_out = params_json(params);
  params_out["sequences"] = std::vector<std::string>(ids.begin(), ids.end());
  r.params = std::move(params_out);
  r.horizon = params.horizon;
  r.approximations.insert(r.approximations.begin(), kHorizonApprox);
  return r;
}

}  // namespace rankshift

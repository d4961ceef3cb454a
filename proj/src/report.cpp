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

#include "rankshift/report.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

namespace rankshift {
namespace {

Json words(const std::vector<FiniteWord>& ws) {
  Json out = Json::array();
  for (const auto& w : ws) out.push_back(w.str());
  return out;
}

Json window_json(const Window& w) { return {{"begin", w.begin}, {"end", w.end}}; }

}  // namespace

Json big_length_json(BigLength value) {
  if (value <= std::numeric_limits<std::uint64_t>::max()) {
    return static_cast<std::uint64_t>(value);
  }
  return to_string(value);
}

Json to_json(const Tail& tail) {
  Json out{{"kind", to_string(tail.kind)}};
  if (tail.kind == Tail::Kind::kTruncatedInBlock) out["offset"] = tail.count;
  if (tail.kind == Tail::Kind::kTruncatedInSpacer) out["count"] = tail.count;
  return out;
}

Json to_json(const BuildDecomposition& d) {
  return {{"block", d.block.word().str()},
          {"spacers", d.spacers},
          {"trailing", to_json(d.trailing)},
          {"offsets", d.offsets}};
}

Json to_json(const MultiBuildDecomposition& d, std::span<const BuilderWord> set) {
  Json blocks = Json::array();
  for (const auto i : d.blocks) blocks.push_back(set[i].word().str());
  Json out{{"blocks", blocks},
           {"block_indices", d.blocks},
           {"spacers", d.spacers},
           {"trailing", to_json(d.trailing)}};
  if (d.trailing.kind == Tail::Kind::kTruncatedInBlock) {
    out["trailing"]["block"] = set[d.partial_block].word().str();
  }
  return out;
}

Json to_json(const std::vector<BuilderWord>& builders) {
  Json out = Json::array();
  for (const auto& b : builders) out.push_back(b.word().str());
  return out;
}

Json to_json(const GeneratingChain& chain) {
  Json lengths = Json::array();
  for (const auto& l : chain.links) lengths.push_back(l.size());
  return {{"links", to_json(chain.links)},
          {"lengths", lengths},
          {"multiplicities", chain.multiplicities},
          {"stalled", chain.stalled}};
}

Json to_json(const RankWitness& witness) {
  Json levels = Json::array();
  for (const auto& level : witness.levels) levels.push_back(words(level));
  return {{"rank", witness.rank}, {"depth", witness.depth()}, {"levels", levels}};
}

Json to_json(const WitnessReport& report) {
  Json out{{"status", to_string(report.status)}, {"levels_checked", report.levels_checked}};
  if (!report.ok()) {
    out["level"] = report.level;
    out["index"] = report.index;
    out["detail"] = report.detail;
  }
  return out;
}

Json to_json(const ExpectedOccurrenceParse& parse) {
  return {{"block", parse.block.word().str()},
          {"offsets", parse.offsets},
          {"left_slack", parse.left_slack},
          {"right_slack", parse.right_slack},
          {"alternates", parse.alternates},
          {"decompositions", parse.decompositions}};
}

Json to_json(const SubstitutionRankParts& parts) {
  Json out{{"k", parts.level},
           {"v_length", big_length_json(parts.v_length)},
           {"w_length", big_length_json(parts.w_length)},
           {"x", big_length_json(parts.x)},
           {"y", big_length_json(parts.y)},
           {"z", big_length_json(parts.z)}};
  if (parts.v) out["v"] = parts.v->str();
  if (parts.w) out["w"] = parts.w->str();
  return out;
}

Json to_json(const SubstitutionRankAnalysis& analysis) {
  Json parts = Json::array();
  for (const auto& p : analysis.parts) parts.push_back(to_json(p));
  Json out{{"substitution", analysis.substitution.describe()},
           {"route", to_string(analysis.route)},
           {"parts", parts},
           {"witness_source_levels", analysis.witness_source_levels}};
  out["witness"] = analysis.witness ? to_json(*analysis.witness) : Json();
  return out;
}

Json to_json(const ComplexityProfile& profile) {
  Json rows = Json::array();
  for (const auto& [n, p] : profile.entries) rows.push_back({{"n", n}, {"p", p}});
  return {{"horizon", profile.horizon}, {"rows", rows}};
}

Json to_json(const CubeReport& report) {
  Json cubes = Json::array();
  for (const auto& c : report.cubes) {
    cubes.push_back({{"position", c.position}, {"root_length", c.root_length}});
  }
  return {{"horizon", report.horizon}, {"cubes", cubes}, {"truncated", report.truncated}};
}

Json to_json(const BalanceReport& report) {
  Json out{{"n_max", report.n_max}, {"horizon", report.horizon}, {"balanced", report.balanced()}};
  if (report.violation) {
    const auto& v = *report.violation;
    out["violation"] = {{"length", v.length},
                        {"light_position", v.light_position},
                        {"heavy_position", v.heavy_position},
                        {"light_ones", v.light_ones},
                        {"heavy_ones", v.heavy_ones}};
  }
  return out;
}

Json to_json(const SturmianVerdict& verdict) {
  Json out{{"is_sturmian_at_horizon", verdict.is_sturmian_at_horizon},
           {"balanced", verdict.balanced},
           {"complexity_ok", verdict.complexity_ok},
           {"balance", to_json(verdict.balance)}};
  out["type"] = verdict.type ? Json(*verdict.type) : Json();
  out["first_complexity_failure"] =
      verdict.first_complexity_failure ? Json(*verdict.first_complexity_failure) : Json();
  return out;
}

Json to_json(const InclusionReport& report) {
  Json rows = Json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"n", r.length},
                    {"forward", r.forward},
                    {"backward", r.backward},
                    {"missing_from_w", words(r.missing_from_w)},
                    {"missing_from_v", words(r.missing_from_v)}});
  }
  return {{"window", window_json(report.window)},
          {"forward", report.forward()},
          {"backward", report.backward()},
          {"mutual", report.mutual()},
          {"rows", rows}};
}

Json to_json(const ForbiddenFactorAudit& audit) {
  Json rows = Json::array();
  for (const auto& r : audit.rows) {
    Json row{{"pattern", r.pattern.str()}, {"occurrences", r.occurrences}};
    row["first_position"] = r.first_position ? Json(*r.first_position) : Json();
    rows.push_back(row);
  }
  return {{"horizon", audit.horizon}, {"clean", audit.clean()}, {"rows", rows}};
}

Json to_json(const CheckResult& result) {
  Json out{{"check", result.check},
           {"params", result.params},
           {"passed", result.passed},
           {"verdict", result.verdict},
           {"witnesses", result.witnesses},
           {"horizon", result.horizon},
           {"approximations", result.approximations},
           {"data", result.data}};
  if (result.seconds) out["seconds"] = *result.seconds;
  return out;
}

bool Report::all_passed() const noexcept {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.passed; });
}

Json to_json(const Report& report) {
  Json results = Json::array();
  for (const auto& r : report.results) results.push_back(to_json(r));
  return {{"tool_version", report.tool_version},
          {"config", report.config},
          {"passed", report.all_passed()},
          {"results", results}};
}

std::string render_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace rankshift

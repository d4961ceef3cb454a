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

#include "rankshift/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "rankshift/checks.hpp"
#include "rankshift/sequences.hpp"
#include "rankshift/suite.hpp"
#include "rankshift/word_io.hpp"

namespace rankshift {
namespace {

constexpr std::size_t kDefaultHorizon = 8192;

std::string tsv_cell(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

bool has_row_table(const CheckResult& r) {
  if (!r.data.is_object() || !r.data.contains("rows")) return false;
  const Json& rows = r.data["rows"];
  if (!rows.is_array() || rows.empty()) return false;
  for (const auto& row : rows) {
    if (!row.is_object()) return false;
    for (const auto& [key, value] : row.items()) {
      if (value.is_structured()) return false;
    }
  }
  return true;
}

std::string slug(const RunConfig& c) {
  std::string out = c.command;
  if (!c.check_name.empty()) out += "-" + c.check_name;
  for (const auto& s : c.sequences) out += "-" + s;
  for (auto& ch : out) {
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '-') ch = '_';
  }
  return out;
}

void write_output(const RunConfig& config, const std::string& text, std::ostream& out) {
  if (config.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(config.out_path, std::ios::binary);
  if (!file) throw ConfigError("cannot write '" + config.out_path + "'");
  file << text;
}

std::string render(const RunConfig& config, const Report& report) {
  switch (config.format) {
    case OutputFormat::kJson:
      return render_json(to_json(report));
    case OutputFormat::kTsv:
      return render_tsv(report);
    case OutputFormat::kText:
      return render_text(report);
  }
  return {};
}

CheckParams check_params(const RunConfig& c) {
  CheckParams p;
  p.horizon = c.effective_horizon();
  p.n_max = c.n_max;
  p.max_block_len = c.max_block_len;
  p.tail_start = c.tail_start;
  p.strict_q = c.strict_q;
  for (const auto& s : c.patterns) p.patterns.emplace_back(s);
  return p;
}

int cmd_generate(const RunConfig& c, std::ostream& out) {
  if (c.sequences.size() != 1) throw ConfigError("generate takes one sequence identifier");
  const std::size_t h = c.effective_horizon();
  const FiniteWord w = make_sequence(c.sequences[0]).prefix(h);
  std::ostringstream text;
  if (c.format == OutputFormat::kJson) {
    text << render_json({{"sequence", c.sequences[0]}, {"horizon", h}, {"word", w.str()}});
  } else {
    write_word_file(text, w, c.sequences[0]);
  }
  write_output(c, text.str(), out);
  return kExitOk;
}

int finish_report(const RunConfig& c, Report report, std::ostream& out) {
  report.config = c.to_json();
  const std::string text = render(c, report);
  write_output(c, text, out);
  if (c.bless && c.command != "suite") {
    const auto dir = default_fixtures_dir() / "golden";
    std::filesystem::create_directories(dir);
    std::ofstream golden(dir / (slug(c) + ".json"), std::ios::binary);
    if (!golden) throw ConfigError("cannot write golden fixture under " + dir.string());
    golden << render_json(to_json(report));
  }
  return report.all_passed() ? kExitOk : kExitCheckFailed;
}

template <typename Run>
CheckResult timed(const RunConfig& c, Run&& run) {
  const auto start = std::chrono::steady_clock::now();
  CheckResult r = run();
  if (c.timing) {
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  return r;
}

int cmd_rank(const RunConfig& c, std::ostream& out) {
  if (c.sequences.size() != 1) throw ConfigError("rank takes one sequence identifier");
  Report report;
  report.results.push_back(timed(c, [&] { return run_rank(c.sequences[0], check_params(c)); }));
  return finish_report(c, std::move(report), out);
}

int cmd_check(const RunConfig& c, std::ostream& out) {
  Report report;
  report.results.push_back(
      timed(c, [&] { return run_check(c.check_name, c.sequences, check_params(c)); }));
  return finish_report(c, std::move(report), out);
}

int cmd_suite(const RunConfig& c, std::ostream& out) {
  SuiteOptions options;
  options.only = c.only;
  options.seed = c.seed;
  options.bless = c.bless;
  options.timing = c.timing;
  for (const auto& o : c.overrides) {
    const auto eq = o.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == o.size()) {
      throw ConfigError("--override expects <id>=<replacement>, got '" + o + "'");
    }
    options.overrides[o.substr(0, eq)] = o.substr(eq + 1);
  }
  const auto tags = suite_tags();
  for (const auto& t : c.only) {
    const bool known = std::find(tags.begin(), tags.end(), t) != tags.end() ||
                       std::any_of(acceptance_criteria().begin(), acceptance_criteria().end(),
                                   [&](const Criterion& k) { return k.id == t; });
    if (!known) throw ConfigError("unknown suite tag '" + t + "'");
  }
  Report report = run_suite(options);
  report.config = c.to_json();
  write_output(c, render(c, report), out);
  return report.all_passed() ? kExitOk : kExitCheckFailed;
}

void add_common(CLI::App& sub, RunConfig& c, bool horizon_options = true) {
  if (horizon_options) {
    sub.add_option("--horizon", c.horizon, "Prefix length examined")->check(CLI::PositiveNumber);
    sub.add_option("--nmax", c.n_max, "Largest factor length")->check(CLI::PositiveNumber);
    sub.add_option("--max-block-len", c.max_block_len, "Longest builder candidate");
    sub.add_option("--tail-start", c.tail_start, "Start of the tail window for subset");
    sub.add_flag("--strict-q", c.strict_q, "Require more than two blocks per chain link");
  }
  sub.add_option("--format", c.format, "Output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, OutputFormat>{{"json", OutputFormat::kJson},
                                              {"tsv", OutputFormat::kTsv},
                                              {"text", OutputFormat::kText}}))
      ->option_text("json|tsv|text");
  sub.add_option("--out", c.out_path, "Write output to PATH instead of stdout");
  sub.add_option("--seed", c.seed, "Seed for randomized property checks");
  sub.add_flag("--bless", c.bless, "Regenerate golden fixtures");
  sub.add_flag("--timing", c.timing, "Record wall-clock seconds per check");
}

}  // namespace

std::size_t RunConfig::effective_horizon() const { return horizon.value_or(kDefaultHorizon); }

void RunConfig::validate() const {
  const std::size_t h = effective_horizon();
  if (command == "check" && h < 2 * n_max) {
    throw ConfigError("horizon " + std::to_string(h) + " is below 2 * nmax = " +
                      std::to_string(2 * n_max));
  }
  if (max_block_len && *max_block_len > h / 2) {
    throw ConfigError("max-block-len " + std::to_string(*max_block_len) +
                      " exceeds horizon / 2 = " + std::to_string(h / 2));
  }
  if (tail_start && *tail_start >= h) {
    throw ConfigError("tail-start must lie below the horizon");
  }
  if (command == "check" && check_name == "subset") {
    const std::size_t tail = tail_start.value_or(h / 4);
    if (h <= tail + 2 * n_max) {
      throw ConfigError("subset needs horizon > tail-start + 2 * nmax");
    }
  }
  for (const auto& p : patterns) {
    if (p.empty() || p.find_first_not_of("01") != std::string::npos) {
      throw ConfigError("pattern '" + p + "' is not a non-empty binary word");
    }
  }
}

Json RunConfig::to_json() const {
  Json j{{"command", command}, {"sequences", sequences}};
  if (command == "suite") {
    j["only"] = only;
    j["overrides"] = overrides;
    j["seed"] = seed;
    j["timing"] = timing;
    return j;
  }
  j["horizon"] = effective_horizon();
  if (command == "check") {
    j["check"] = check_name;
    j["n_max"] = n_max;
    if (!patterns.empty()) j["patterns"] = patterns;
  }
  if (command == "rank") j["strict_q"] = strict_q;
  if (max_block_len) j["max_block_len"] = *max_block_len;
  if (tail_start) j["tail_start"] = *tail_start;
  return j;
}

std::string render_tsv(const Report& report) {
  std::ostringstream out;
  if (report.results.size() == 1 && has_row_table(report.results.front())) {
    const CheckResult& r = report.results.front();
    const Json& rows = r.data["rows"];
    std::vector<std::string> keys;
    for (const auto& [key, value] : rows.front().items()) keys.push_back(key);
    // The per-n index leads so the table plots directly.
    std::stable_partition(keys.begin(), keys.end(), [](const std::string& k) { return k == "n"; });
    out << "check";
    for (const auto& k : keys) out << '\t' << k;
    out << '\n';
    for (const auto& row : rows) {
      out << r.check;
      for (const auto& k : keys) out << '\t' << (row.contains(k) ? tsv_cell(row[k]) : "");
      out << '\n';
    }
    return out.str();
  }
  out << "check\tpassed\thorizon\tverdict\n";
  for (const auto& r : report.results) {
    out << r.check << '\t' << (r.passed ? "true" : "false") << '\t' << r.horizon << '\t'
        << r.verdict << '\n';
  }
  return out.str();
}

std::string render_text(const Report& report) {
  std::ostringstream out;
  std::size_t passed = 0;
  for (const auto& r : report.results) {
    passed += r.passed;
    out << (r.passed ? "PASS " : "FAIL ") << r.check << ": " << r.verdict << '\n';
    if (r.horizon > 0) out << "     horizon " << r.horizon << '\n';
    for (const auto& a : r.approximations) out << "     approx: " << a << '\n';
    if (r.seconds) out << "     " << *r.seconds << " s\n";
  }
  out << passed << "/" << report.results.size() << " checks passed\n";
  return out.str();
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Rank-one and rank-n analysis of binary sequences", "rankshift"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("generate", "Write prefix(horizon) as a word file");
  gen->add_option("sequence", c.sequences, "Sequence identifier")->required()->expected(1);
  add_common(*gen, c);
  // generate writes the word file format unless JSON is asked for explicitly.
  gen->preparse_callback([&c](std::size_t) { c.format = OutputFormat::kText; });

  auto* rank = app.add_subcommand("rank", "Builder sets, generating chain and rank witnesses");
  rank->add_option("sequence", c.sequences, "Sequence identifier")->required()->expected(1);
  add_common(*rank, c);

  auto* check = app.add_subcommand("check", "Run one analysis check");
  check->add_option("check", c.check_name, "Check name")
      ->required()
      ->check(CLI::IsMember(check_names()));
  check->add_option("sequences", c.sequences, "Sequence identifier(s)")->required()->expected(1, 2);
  check->add_option("--pattern", c.patterns, "Forbidden factor (repeatable)");
  add_common(*check, c);

  auto* suite = app.add_subcommand("suite", "Run the acceptance suite");
  bool all = false;
  suite->add_flag("--all", all, "Run every criterion (the default)");
  suite->add_option("--only", c.only, "Run criteria with this tag or id (repeatable)");
  suite->add_option("--override", c.overrides, "Replace a sequence: <id>=<replacement>");
  add_common(*suite, c, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitConfigError;
  }
  if (all && !c.only.empty()) {
    err << "rankshift: --all and --only are mutually exclusive\n";
    return kExitConfigError;
  }

  try {
    c.command = app.get_subcommands().front()->get_name();
    c.validate();
    if (c.command == "generate") return cmd_generate(c, out);
    if (c.command == "rank") return cmd_rank(c, out);
    if (c.command == "check") return cmd_check(c, out);
    return cmd_suite(c, out);
  } catch (const std::exception& e) {
    err << "rankshift: " << e.what() << '\n';
    return kExitConfigError;
  }
}

}  // namespace rankshift

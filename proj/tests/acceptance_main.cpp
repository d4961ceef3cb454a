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

// Runs every acceptance criterion with budgets enforced and prints one line per
// criterion. Exit status is 0 only when all of them pass.
#include <cstdio>
#include <iostream>

#include "rankshift/suite.hpp"

int main(int argc, char** argv) {
  rankshift::SuiteOptions options;
  options.timing = true;
  for (int i = 1; i < argc; ++i) options.only.emplace_back(argv[i]);

  const rankshift::Report report = rankshift::run_suite(options);
  std::size_t passed = 0;
  for (const auto& r : report.results) {
    passed += r.passed;
    char seconds[32];
    std::snprintf(seconds, sizeof seconds, "%.3f s", r.seconds.value_or(0.0));
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.check << " [" << seconds << "] " << r.verdict
              << '\n';
  }
  std::cout << passed << "/" << report.results.size() << " acceptance criteria passed\n";
  return report.all_passed() && !report.results.empty() ? 0 : 1;
}

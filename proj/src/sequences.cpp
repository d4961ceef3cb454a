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

#include "rankshift/sequences.hpp"

#include <bit>
#include <charconv>
#include <stdexcept>

#include "rankshift/error.hpp"
#include "rankshift/word_io.hpp"

namespace rankshift {
namespace {

std::vector<unsigned> parse_coefficients(std::string_view text) {
  std::vector<unsigned> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const std::string_view item = text.substr(start, comma - start);
    unsigned value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size() || value == 0) {
      throw std::invalid_argument("continued-fraction coefficient '" + std::string(item) +
                                  "' must be a positive integer");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string join(const std::vector<unsigned>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

SequenceGenerator substitution_sequence(std::string_view images) {
  const auto comma = images.find(',');
  if (comma == std::string_view::npos) {
    throw std::invalid_argument("subst: expects <image0>,<image1>");
  }
  const Substitution s(FiniteWord(images.substr(0, comma)), FiniteWord(images.substr(comma + 1)));
  return substitution_fixed_point(s, "subst:" + std::string(images));
}

}  // namespace

Substitution thue_morse_substitution() { return {FiniteWord("01"), FiniteWord("10")}; }
Substitution chacon_substitution() { return {FiniteWord("0010"), FiniteWord("1")}; }
Substitution fibonacci_substitution() { return {FiniteWord("01"), FiniteWord("0")}; }
Substitution cantor_substitution() { return {FiniteWord("010"), FiniteWord("111")}; }

SequenceGenerator thue_morse() {
  return SequenceGenerator("thue-morse", [](std::size_t wanted) {
    std::string out(wanted, '0');
    for (std::size_t i = 0; i < wanted; ++i) {
      if (std::popcount(i) % 2 != 0) out[i] = '1';
    }
    return out;
  });
}

SequenceGenerator chacon() {
  return SequenceGenerator("chacon", [](std::size_t wanted) {
    std::string block = "0";
    while (block.size() < wanted) block = block + block + "1" + block;
    return block;
  });
}

SequenceGenerator chacon_from_substitution() {
  return substitution_fixed_point(chacon_substitution(), "chacon-subst");
}

SequenceGenerator fibonacci() {
  return substitution_fixed_point(fibonacci_substitution(), "fibonacci");
}

SequenceGenerator cantor() { return substitution_fixed_point(cantor_substitution(), "cantor"); }

SequenceGenerator bernoulli() {
  return SequenceGenerator("bernoulli", [](std::size_t wanted) {
    std::string out;
    out.reserve(wanted + 64);
    for (std::size_t len = 1; out.size() < wanted; ++len) {
      for (std::uint64_t x = 0; x >> len == 0 && out.size() < wanted; ++x) {
        for (std::size_t bit = len; bit-- > 0;) out.push_back((x >> bit) & 1 ? '1' : '0');
      }
    }
    return out;
  });
}

std::size_t bernoulli_horizon(std::size_t max_len) {
  std::size_t total = 0;
  for (std::size_t len = 1; len <= max_len; ++len) total += len << len;
  return total;
}

SequenceGenerator periodic(const FiniteWord& period) {
  if (period.empty()) throw std::invalid_argument("periodic word needs a non-empty period");
  return SequenceGenerator("periodic:" + period.str(), [period](std::size_t wanted) {
    std::string out;
    out.reserve(wanted + period.size());
    while (out.size() < wanted) out += period.str();
    return out;
  });
}

SequenceGenerator digit_flipped(const SequenceGenerator& inner, std::size_t position) {
  std::string name = position == 0 ? "flip:" + inner.name()
                                   : "flip@" + std::to_string(position) + ":" + inner.name();
  return SequenceGenerator(std::move(name), [inner, position](std::size_t wanted) {
    std::string out = inner.prefix(std::max(wanted, position + 1)).str();
    out[position] = out[position] == '0' ? '1' : '0';
    return out;
  });
}

SequenceGenerator from_word(const FiniteWord& w, std::string name) {
  return SequenceGenerator(std::move(name), [w](std::size_t) { return w.str(); });
}

unsigned SturmianSpec::coefficient(std::size_t n) const {
  if (n == 0) throw std::invalid_argument("coefficients are indexed from 1");
  if (n <= preperiod.size()) return preperiod[n - 1];
  if (period.empty()) throw std::invalid_argument("Sturmian spec has an empty period");
  return period[(n - 1 - preperiod.size()) % period.size()];
}

std::string SturmianSpec::id() const {
  std::string out = "sturmian:";
  if (!preperiod.empty()) out += join(preperiod) + ";";
  return out + join(period);
}

SturmianSpec parse_sturmian_spec(std::string_view text) {
  SturmianSpec spec;
  const auto semi = text.find(';');
  if (semi == std::string_view::npos) {
    spec.period = parse_coefficients(text);
  } else {
    spec.preperiod = parse_coefficients(text.substr(0, semi));
    spec.period = parse_coefficients(text.substr(semi + 1));
  }
  if (spec.period.empty()) {
    throw std::invalid_argument("Sturmian spec '" + std::string(text) + "' has no period");
  }
  return spec;
}

SequenceGenerator sturmian(const SturmianSpec& spec) {
  if (spec.period.empty()) throw std::invalid_argument("Sturmian spec has an empty period");
  return SequenceGenerator(spec.id(), [spec](std::size_t wanted) {
    std::string before = "1";
    std::string current = "0";
    for (std::size_t n = 1; current.size() < wanted || n <= 1; ++n) {
      std::string next;
      const unsigned d = spec.coefficient(n);
      next.reserve(current.size() * d + before.size());
      for (unsigned i = 0; i < d; ++i) next += current;
      next += before;
      before = std::move(current);
      current = std::move(next);
    }
    return current;
  });
}

RankWitness rank3_witness(std::size_t depth) {
  RankWitness witness{3, {{FiniteWord("0"), FiniteWord("0"), FiniteWord("0")}}};
  const FiniteWord one("1");
  for (std::size_t n = 0; n < depth; ++n) {
    const auto& w = witness.levels.back();
    witness.levels.push_back({w[0] + w[1] + one + w[2], w[1] + w[2] + w[0], w[2] + one + w[0] + w[1]});
  }
  return witness;
}

SequenceGenerator rank3_w() {
  return SequenceGenerator("rank3-w", [](std::size_t wanted) {
    std::string a = "0", b = "0", c = "0";
    while (a.size() < wanted) {
      std::string na = a + b + "1" + c;
      std::string nb = b + c + a;
      std::string nc = c + "1" + a + b;
      a = std::move(na);
      b = std::move(nb);
      c = std::move(nc);
    }
    return a;
  });
}

RankWitness thue_morse_rank2_witness(std::size_t depth) {
  if (depth == 0) throw std::invalid_argument("witness depth must be at least 1");
  RankWitness witness{2, {{FiniteWord("0"), FiniteWord("0")}}};
  for (std::size_t n = 0; n < depth; ++n) {
    const FiniteWord& m1 = witness.levels.back()[0];
    const FiniteWord& m2 = witness.levels.back()[1];
    std::vector<FiniteWord> next;
    if (n % 2 == 0) {
      next = {m1 + FiniteWord("11") + m2, m2 + m1};
    } else {
      next = {m1 + FiniteWord("1") + m2, m2 + FiniteWord("1") + m1};
    }
    witness.levels.push_back(std::move(next));
  }
  return witness;
}

RandomConstruction random_generating_sequence(std::mt19937_64& rng, std::size_t depth) {
  RandomConstruction out{{FiniteWord("0")}, {}};
  for (std::size_t k = 0; k < depth; ++k) {
    const std::size_t q = 3 + rng() % 2;
    const FiniteWord& v = out.levels.back();
    WordAssembler next;
    next.append(v);
    for (std::size_t i = 1; i < q; ++i) next.append_ones(rng() % 3).append(v);
    out.copies.push_back(q);
    out.levels.push_back(std::move(next).finish());
  }
  return out;
}

SequenceGenerator make_sequence(std::string_view id) {
  if (id == "thue-morse") return thue_morse();
  if (id == "chacon") return chacon();
  if (id == "chacon-subst") return chacon_from_substitution();
  if (id == "chacon-flip") return digit_flipped(chacon());
  if (id == "fibonacci") return fibonacci();
  if (id == "cantor") return cantor();
  if (id == "bernoulli") return bernoulli();
  if (id == "rank3-w") return rank3_w();
  if (id.starts_with("sturmian:")) return sturmian(parse_sturmian_spec(id.substr(9)));
  if (id.starts_with("subst:")) return substitution_sequence(id.substr(6));
  if (id.starts_with("periodic:")) return periodic(FiniteWord(id.substr(9)));
  if (id.starts_with("flip:")) return digit_flipped(make_sequence(id.substr(5)));
  if (id.starts_with("flip@")) {
    const auto colon = id.find(':');
    std::size_t pos = 0;
    const std::string_view digits = id.substr(5, colon == std::string_view::npos ? 0 : colon - 5);
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), pos);
    if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
      throw std::invalid_argument("flip@ expects flip@<position>:<id>");
    }
    return digit_flipped(make_sequence(id.substr(colon + 1)), pos);
  }
  if (id.starts_with("file:")) {
    WordFile file = read_word_file(std::filesystem::path(std::string(id.substr(5))));
    return from_word(file.word, std::string(id));
  }
  throw UnknownSequence(std::string(id));
}

std::vector<std::string> registered_sequence_names() {
  return {"thue-morse", "chacon", "chacon-subst", "chacon-flip", "fibonacci",
          "cantor",     "bernoulli", "rank3-w"};
}

}  // namespace rankshift

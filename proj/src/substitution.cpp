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

#include "rankshift/substitution.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "rankshift/error.hpp"

namespace rankshift {
namespace {

BigLength checked_mul(BigLength a, BigLength b) {
  BigLength out;
  if (__builtin_mul_overflow(a, b, &out)) throw LengthOverflow("substitution length overflow");
  return out;
}

BigLength checked_add(BigLength a, BigLength b) {
  BigLength out;
  if (__builtin_add_overflow(a, b, &out)) throw LengthOverflow("substitution length overflow");
  return out;
}

/// Summary of tau(u) from the summary of u and of tau's images. tau(0) must
/// contain a 0, which holds for every power of a substitution prolongable at 0.
ImageSummary apply_summary(const SubstitutionSummary& tau, const ImageSummary& u) {
  const ImageSummary& t0 = tau.image0;
  const ImageSummary& t1 = tau.image1;
  if (!t0.has_zero()) throw std::logic_error("summary composition needs a 0 in tau(0)");

  const BigLength ones = u.length - u.zeros;
  ImageSummary out;
  out.length = checked_add(checked_mul(u.zeros, t0.length), checked_mul(ones, t1.length));
  out.zeros = checked_add(checked_mul(u.zeros, t0.zeros), checked_mul(ones, t1.zeros));
  out.first = tau.image(u.first).first;
  out.last = tau.image(u.last).last;

  if (u.leading_ones == 0) {
    out.leading_ones = t0.leading_ones;
  } else if (t1.has_zero()) {
    out.leading_ones = t1.leading_ones;
  } else {
    out.leading_ones = checked_add(checked_mul(u.leading_ones, t1.length),
                                   u.has_zero() ? t0.leading_ones : 0);
  }

  if (u.trailing_ones == 0) {
    out.trailing_ones = t0.trailing_ones;
  } else if (t1.has_zero()) {
    out.trailing_ones = t1.trailing_ones;
  } else {
    out.trailing_ones = checked_add(checked_mul(u.trailing_ones, t1.length),
                                    u.has_zero() ? t0.trailing_ones : 0);
  }
  return out;
}

SubstitutionRankParts split_parts(std::size_t level, const SubstitutionSummary& tau) {
  SubstitutionRankParts p;
  p.level = level;
  p.x = tau.image0.trailing_ones;
  p.v_length = tau.image0.length - p.x;
  if (tau.image1.has_zero()) {
    p.y = tau.image1.leading_ones;
    p.z = tau.image1.trailing_ones;
    p.w_length = tau.image1.length - p.y - p.z;
  } else {
    p.y = tau.image1.length;
    p.z = 0;
    p.w_length = 0;
  }
  return p;
}

void attach_words(SubstitutionRankParts& p, const Substitution& tau) {
  const FiniteWord& zero_image = tau.image(0);
  const FiniteWord& one_image = tau.image(1);
  const auto x = static_cast<std::size_t>(p.x);
  p.v = zero_image.prefix(zero_image.size() - x);
  if (p.w_length == 0) {
    p.w = FiniteWord();
  } else {
    const auto y = static_cast<std::size_t>(p.y);
    p.w = factor_at(one_image, y, static_cast<std::size_t>(p.w_length));
  }
}

}  // namespace

Substitution::Substitution(FiniteWord image0, FiniteWord image1)
    : image0_(std::move(image0)), image1_(std::move(image1)) {
  if (image0_.empty() || image1_.empty()) {
    throw std::invalid_argument("substitution images must be non-empty");
  }
}

FiniteWord Substitution::operator()(const FiniteWord& w) const {
  WordAssembler out;
  out.reserve(w.count_zeros() * image0_.size() + w.count_ones() * image1_.size());
  for (std::size_t i = 0; i < w.size(); ++i) out.append(image(w[i]));
  return std::move(out).finish();
}

Substitution Substitution::after(const Substitution& inner) const {
  return Substitution((*this)(inner.image0_), (*this)(inner.image1_));
}

bool Substitution::prolongable_at_zero() const noexcept {
  return image0_.size() >= 2 && image0_[0] == 0;
}

FiniteWord apply_substitution(const Substitution& s, const FiniteWord& w) { return s(w); }

FiniteWord iterate_substitution(const Substitution& s, const FiniteWord& w, std::size_t times) {
  FiniteWord out = w;
  for (std::size_t i = 0; i < times; ++i) out = s(out);
  return out;
}

SequenceGenerator substitution_fixed_point(const Substitution& s, std::string name) {
  if (!s.prolongable_at_zero()) {
    throw NotProlongable("substitution " + s.describe() +
                         " is not prolongable at 0 (image of 0 must start with 0 and have "
                         "length >= 2)");
  }
  if (name.empty()) name = "subst:" + s.describe();
  return SequenceGenerator(std::move(name), [s](std::size_t wanted) {
    FiniteWord w("0");
    while (w.size() < wanted) w = s(w);
    return w.str();
  });
}

std::string to_string(BigLength value) {
  if (value == 0) return "0";
  std::string digits;
  while (value > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

ImageSummary ImageSummary::of(const FiniteWord& w) {
  ImageSummary s;
  s.length = w.size();
  s.zeros = w.count_zeros();
  if (!w.empty()) {
    s.first = w[0];
    s.last = w[w.size() - 1];
  }
  const std::string_view v = w.view();
  const auto lead = v.find('0');
  const auto trail = v.rfind('0');
  s.leading_ones = lead == std::string_view::npos ? v.size() : lead;
  s.trailing_ones = trail == std::string_view::npos ? v.size() : v.size() - 1 - trail;
  return s;
}

SubstitutionSummary SubstitutionSummary::of(const Substitution& s) {
  return {ImageSummary::of(s.image(0)), ImageSummary::of(s.image(1))};
}

SubstitutionSummary SubstitutionSummary::squared() const {
  return {apply_summary(*this, image0), apply_summary(*this, image1)};
}

std::string to_string(SubstitutionRoute route) {
  switch (route) {
    case SubstitutionRoute::kMain:
      return "main";
    case SubstitutionRoute::kMainAfterSquaring:
      return "main-after-squaring";
    case SubstitutionRoute::kRankOne:
      return "rank-one";
    case SubstitutionRoute::kDegenerate:
      return "degenerate";
  }
  return "unknown";
}

SubstitutionRankAnalysis rank2_witness_from_substitution(const Substitution& s,
                                                         std::size_t depth,
                                                         std::size_t materialize_limit) {
  (void)substitution_fixed_point(s);  // throws NotProlongable

  SubstitutionRankAnalysis analysis{s, SubstitutionRoute::kMain, {}, std::nullopt, {}};
  const FiniteWord& one_image = s.image(1);
  if (one_image.count_zeros() == 0) {
    const bool rest_is_ones = s.image(0).suffix(s.image(0).size() - 1).count_zeros() == 0;
    analysis.route = rest_is_ones ? SubstitutionRoute::kDegenerate : SubstitutionRoute::kRankOne;
  } else if (one_image == FiniteWord("0")) {
    analysis.route = SubstitutionRoute::kMainAfterSquaring;
  }
  const bool two_towers = analysis.route == SubstitutionRoute::kMain ||
                          analysis.route == SubstitutionRoute::kMainAfterSquaring;

  SubstitutionSummary summary = SubstitutionSummary::of(s).squared();
  std::optional<Substitution> power = s.squared();
  for (std::size_t k = 1; k <= depth; ++k) {
    if (k > 1) {
      summary = summary.squared();
      const bool fits = summary.image0.length <= materialize_limit &&
                        summary.image1.length <= materialize_limit;
      power = (power && fits) ? std::optional<Substitution>(power->squared()) : std::nullopt;
    } else if (summary.image0.length > materialize_limit ||
               summary.image1.length > materialize_limit) {
      power.reset();
    }
    SubstitutionRankParts parts = split_parts(k, summary);
    if (power) attach_words(parts, *power);
    analysis.parts.push_back(std::move(parts));
  }

  if (analysis.route == SubstitutionRoute::kDegenerate) return analysis;

  RankWitness witness;
  witness.rank = two_towers ? 2 : 1;
  witness.levels.push_back(std::vector<FiniteWord>(witness.rank, FiniteWord("0")));
  for (const auto& parts : analysis.parts) {
    if (!parts.v) break;
    std::vector<FiniteWord> level{*parts.v};
    if (two_towers) level.push_back(*parts.w);
    std::vector<BuilderWord> previous;
    for (const auto& w : witness.levels.back()) previous.emplace_back(w);
    const bool builds = std::all_of(level.begin(), level.end(), [&](const FiniteWord& w) {
      return BuilderWord::eligible(w) && is_built_from_set(w, previous, TailPolicy::kExact);
    });
    if (!builds) continue;
    witness.levels.push_back(std::move(level));
    analysis.witness_source_levels.push_back(parts.level);
  }
  analysis.witness = std::move(witness);
  return analysis;
}

}  // namespace rankshift

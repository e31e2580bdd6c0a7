// Copyright 2026 The smlab Authors.
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

#include <gtest/gtest.h>

#include <algorithm>

#include "smlab/core/oracle.hpp"
#include "smlab/core/text.hpp"
#include "smlab/error.hpp"
#include "smlab/learning/erm.hpp"
#include "smlab/rng.hpp"

namespace smlab::learning {
namespace {

Symbols bits(const char* s) { return core::parse_symbols(s, 2); }

Symbols random_text(Rng& rng, std::size_t n, int sigma = 2) {
  Symbols s(n);
  for (auto& c : s) c = static_cast<Symbol>(rng.below(sigma));
  return s;
}

std::vector<Sample> labeled(Rng& rng, const Symbols& target, std::size_t m,
                            std::size_t n) {
  std::vector<Sample> out;
  for (std::size_t i = 0; i < m; ++i) {
    Symbols s = random_text(rng, n);
    const bool label = core::contains(s, target);
    out.push_back({std::move(s), label});
  }
  return out;
}

// Minimum empirical errors over every pattern of length <= k.
std::size_t exhaustive_min_errors(const std::vector<Sample>& samples,
                                  std::size_t k) {
  std::size_t best = samples.size();
  for (std::size_t len = 0; len <= k; ++len) {
    for (std::uint64_t w = 0; w < (1ULL << len); ++w) {
      best = std::min(best, empirical_errors(samples, core::unpack_bits(w, len)));
    }
  }
  return best;
}

TEST(ErmTest, RealizableHasZeroLoss) {
  Rng rng(11);
  for (int rep = 0; rep < 20; ++rep) {
    const auto samples = labeled(rng, bits("101"), 30 + rep, 50);
    const ErmResult r = erm_learn(samples, 3, 2);
    EXPECT_EQ(r.errors, 0u);
    EXPECT_EQ(r.loss, 0.0);
    EXPECT_EQ(empirical_errors(samples, r.pattern), 0u);
  }
}

TEST(ErmTest, AllNegativeUsesAbsentPattern) {
  Rng rng(5);
  std::vector<Sample> samples;
  for (int i = 0; i < 40; ++i) samples.push_back({random_text(rng, 20), false});
  const ErmResult r = erm_learn(samples, 8, 2);
  EXPECT_EQ(r.errors, 0u);
  EXPECT_FALSE(r.pattern.empty());
  for (const Sample& s : samples) EXPECT_FALSE(core::contains(s.text, r.pattern));
}

TEST(ErmTest, MatchesExhaustiveOracle) {
  Rng rng(2024);
  for (std::size_t n = 1; n <= 8; ++n) {
    for (std::size_t k = 1; k <= 3; ++k) {
      for (int rep = 0; rep < 15; ++rep) {
        const Symbols target = random_text(rng, 1 + rng.below(k));
        auto samples = labeled(rng, target, 1 + rng.below(12), n);
        for (Sample& s : samples) {
          if (rng.below(10) == 0) s.label = !s.label;  // agnostic noise
        }
        if (rep % 3 == 0) {
          for (Sample& s : samples) s.label = rng.coin();
        }
        const ErmResult r = erm_learn(samples, k, 2);
        ASSERT_LE(r.pattern.size(), k);
        ASSERT_EQ(r.errors, empirical_errors(samples, r.pattern));
        ASSERT_EQ(r.errors, exhaustive_min_errors(samples, k))
            << "n=" << n << " k=" << k << " rep=" << rep;
      }
    }
  }
}

TEST(ErmTest, DeterministicUnderReordering) {
  Rng rng(9);
  auto samples = labeled(rng, bits("0110"), 60, 30);
  const ErmResult first = erm_learn(samples, 4, 2);
  for (int rep = 0; rep < 5; ++rep) {
    std::reverse(samples.begin(), samples.end());
    std::swap(samples[rep], samples[samples.size() - 1 - 2 * rep]);
    EXPECT_EQ(erm_learn(samples, 4, 2).pattern, first.pattern);
  }
}

TEST(ErmTest, PrefersShortestThenLexicographic) {
  // "1" and "11" both separate perfectly; the shorter wins.
  const std::vector<Sample> samples{{bits("0110"), true}, {bits("0000"), false}};
  EXPECT_EQ(erm_learn(samples, 2, 2).pattern, bits("1"));
}

TEST(ErmTest, Errors) {
  EXPECT_THROW(erm_learn(std::vector<Sample>{}, 2, 2), InputError);
  const std::vector<Sample> bad{{Symbols{3}, true}};
  EXPECT_THROW(erm_learn(bad, 2, 2), InputError);
}

TEST(ErmTest, FallbackLength) {
  EXPECT_EQ(fallback_length(10, 10, 20, 2), 8u);  // 2^7 >= 100
  EXPECT_EQ(fallback_length(10, 10, 4, 2), 4u);
  EXPECT_EQ(fallback_length(1, 1, 5, 3), 1u);
}

TEST(ErmTest, AbsentPatternIsAbsent) {
  const std::vector<Sample> samples{{bits("0001"), true}, {bits("0101"), false}};
  const auto p = absent_pattern(samples, 2, 2);
  ASSERT_TRUE(p);
  EXPECT_EQ(*p, bits("11"));
  const std::vector<Sample> full{{bits("00110"), true}};
  EXPECT_FALSE(absent_pattern(full, 2, 2));
}

}  // namespace
}  // namespace smlab::learning

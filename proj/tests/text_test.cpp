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

#include "oracles.hpp"
#include "smlab/core/oracle.hpp"
#include "smlab/core/text.hpp"
#include "smlab/error.hpp"
#include "smlab/rng.hpp"

namespace smlab::core {
namespace {

TEST(TextTest, ParsesAndPrints) {
  const Text t = Text::parse("0110");
  EXPECT_EQ(t.size(), 4U);
  EXPECT_EQ(t[1], 1);
  EXPECT_EQ(t.str(), "0110");
  const Text big = Text::parse("0a3z", 36);
  EXPECT_EQ(big[1], 10);
  EXPECT_EQ(big[3], 35);
  EXPECT_EQ(big.str(), "0a3z");
}

TEST(TextTest, RejectsSymbolsOutsideAlphabet) {
  EXPECT_THROW(Text::parse("012"), InputError);
  EXPECT_THROW(Text::parse("01x"), InputError);
  EXPECT_THROW(Text(Symbols{0, 3}, 3), InputError);
  EXPECT_THROW(Text(Symbols{}, 1), InputError);
}

TEST(TextTest, PatternMustBeNonEmptyAndWithinLimit) {
  EXPECT_THROW(Pattern::parse(""), InputError);
  EXPECT_THROW(Pattern(Symbols{0, 1, 1}, 2, 2), InputError);
  EXPECT_NO_THROW(Pattern(Symbols{0, 1}, 2, 2));
}

TEST(TextTest, PackRoundTrip) {
  const Symbols s{1, 0, 1, 1, 0};
  EXPECT_EQ(pack_bits(s), 0b01101U);
  EXPECT_EQ(unpack_bits(pack_bits(s), s.size()), s);
}

TEST(OracleTest, Examples) {
  EXPECT_TRUE(sm_oracle(Text::parse("0110"), Pattern::parse("11")));
  EXPECT_FALSE(sm_oracle(Text::parse("0101"), Pattern::parse("11")));
  EXPECT_TRUE(sm_oracle(Text::parse("1"), Pattern::parse("1")));
  EXPECT_FALSE(sm_oracle(Text::parse("0"), Pattern::parse("1")));
}

TEST(OracleTest, Preconditions) {
  EXPECT_THROW(sm_oracle(Text::parse("01"), Pattern::parse("011")),
               InputError);
  EXPECT_THROW(sm_oracle(Text::parse("01", 3), Pattern::parse("1")),
               InputError);
}

TEST(OracleTest, MatchesKmpExhaustively) {
  for (std::size_t n = 1; n <= 8; ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      for (std::uint64_t x = 0; x < (1ULL << n); ++x) {
        for (std::uint64_t y = 0; y < (1ULL << k); ++y) {
          const Symbols xs = unpack_bits(x, n);
          const Symbols ys = unpack_bits(y, k);
          const bool want = testing::kmp_contains(xs, ys);
          ASSERT_EQ(sm_oracle(Text(xs), Pattern(ys)), want);
          ASSERT_EQ(sm_packed(x, n, y, k), want);
        }
      }
    }
  }
}

TEST(OracleTest, LargerAlphabetAgreesWithKmp) {
  Rng rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const int sigma = 2 + static_cast<int>(rng.below(4));
    const std::size_t n = 1 + rng.below(20);
    const std::size_t k = 1 + rng.below(std::min<std::size_t>(n, 4));
    Symbols x(n), y(k);
    for (auto& c : x) c = static_cast<Symbol>(rng.below(sigma));
    for (auto& c : y) c = static_cast<Symbol>(rng.below(sigma));
    ASSERT_EQ(sm_oracle(Text(x, sigma), Pattern(y, sigma)),
              testing::kmp_contains(x, y));
  }
}

TEST(OracleTest, FindFirst) {
  const Symbols x{0, 1, 1, 0, 1, 1};
  const Symbols y{1, 1};
  EXPECT_EQ(find_first(x, y), 1);
  EXPECT_EQ(find_first(x, y, 2), 4);
  EXPECT_EQ(find_first(x, y, 5), -1);
}

}  // namespace
}  // namespace smlab::core

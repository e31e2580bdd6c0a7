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

#include <numeric>

#include "oracles.hpp"
#include "smlab/core/periods.hpp"

namespace smlab::core {
namespace {

TEST(PeriodsTest, Examples) {
  const Text t = Text::parse("010101");
  const PeriodInfo info = period_orders(t);
  EXPECT_EQ(info.orders, (std::vector<std::size_t>{2, 4}));
  EXPECT_EQ(info.primitive_order, 2U);
  EXPECT_FALSE(period_orders(Text::parse("0110")).primitive_order);
  EXPECT_EQ(period_orders(Text::parse("0000")).orders,
            (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_EQ(period_orders(Text::parse("0")).orders.size(), 0U);
}

TEST(PeriodsTest, OrdersMatchBorderChainExhaustively) {
  for (std::size_t n = 1; n <= 14; ++n) {
    for (std::uint64_t w = 0; w < (1ULL << n); ++w) {
      const Symbols x = unpack_bits(w, n);
      const PeriodInfo info = period_orders(x);
      ASSERT_EQ(info.orders, testing::border_periods(x));
      std::optional<std::size_t> shortest;
      for (std::size_t o : info.orders) {
        if (2 * o <= n) {
          shortest = o;
          break;
        }
      }
      ASSERT_EQ(info.primitive_order, shortest);
      ASSERT_EQ(primitive_order(x), shortest);
    }
  }
}

TEST(PeriodsTest, ShortPeriodsAreMultiplesOfPrimitive) {
  for (std::size_t n = 2; n <= 14; ++n) {
    for (std::uint64_t w = 0; w < (1ULL << n); ++w) {
      const Symbols x = unpack_bits(w, n);
      ASSERT_TRUE(divisor_structure_check(x));
      const PeriodInfo info = period_orders(x);
      for (std::size_t o : info.orders) {
        if (2 * o > n) break;
        ASSERT_EQ(o % *info.primitive_order, 0U);
      }
    }
  }
}

TEST(PeriodsTest, ShortestUpToLimit) {
  const Symbols x = unpack_bits(0b0011'0011'0011, 12);
  EXPECT_EQ(shortest_period_up_to(x, 3), std::nullopt);
  EXPECT_EQ(shortest_period_up_to(x, 4), 4U);
  EXPECT_EQ(shortest_period_up_to(x, 11), 4U);
}

}  // namespace
}  // namespace smlab::core

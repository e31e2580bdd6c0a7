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

#include "smlab/circuits/builders.hpp"
#include "smlab/circuits/equivalence.hpp"
#include "smlab/error.hpp"

namespace smlab::circuits {
namespace {

TEST(BuildersTest, SizeExamples) {
  EXPECT_EQ(build_threshold_depth2(8, 3).size(), 13U);
  EXPECT_EQ(build_threshold_depth2(5, 5).size(), 3U);
  EXPECT_EQ(build_dnf(6, 2).size(), 21U);
  EXPECT_EQ(build_dnf(4, 4).size(), 17U);
  EXPECT_EQ(build_depth3(6, 2).size(), 26U);
}

TEST(BuildersTest, ShapesMatchMaterializedCircuits) {
  for (std::size_t n = 1; n <= 10; ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      for (const auto& [c, shape] :
           {std::pair{build_threshold_depth2(n, k),
                      threshold_depth2_shape(n, k)},
            std::pair{build_dnf(n, k), dnf_shape(n, k)},
            std::pair{build_depth3(n, k), depth3_shape(n, k)}}) {
        ASSERT_EQ(c.size(), shape.size);
        ASSERT_EQ(c.depth(), shape.depth);
      }
    }
  }
}

TEST(BuildersTest, Depths) {
  EXPECT_EQ(build_threshold_depth2(7, 3).depth(), 2U);
  EXPECT_EQ(build_dnf(7, 3).depth(), 2U);
  EXPECT_EQ(build_depth3(7, 3).depth(), 3U);
}

TEST(BuildersTest, Preconditions) {
  EXPECT_THROW(build_threshold_depth2(3, 0), InputError);
  EXPECT_THROW(build_depth3(3, 4), InputError);
  EXPECT_THROW(build_dnf(30, 25), CapacityError);
  EXPECT_THROW(build_dnf(10, 4, 10), CapacityError);
}

// Evaluates only gate `g` (which reads inputs only) of a circuit.
bool eval_gate(const Circuit& c, std::size_t g, const Symbols& bits) {
  Circuit single(c.n(), c.k());
  single.add(c.gates()[g]);
  return eval(single, bits);
}

TEST(BuildersTest, ComparisonPairDecidesWindowEquality) {
  for (std::size_t k = 1; k <= 12; ++k) {
    const Circuit c = build_threshold_depth2(k, k);
    Circuit g1(k, k), l1(k, k);
    g1.add(c.gates()[0]);
    l1.add(c.gates()[1]);
    const Evaluator eg(g1), el(l1);
    for (std::uint64_t w = 0; w < (1ULL << (2 * k)); ++w) {
      const std::uint64_t x = w & ((1ULL << k) - 1);
      const std::uint64_t y = w >> k;
      const bool g = eg.eval_word(w);
      const bool l = el.eval_word(w);
      ASSERT_EQ(g, x >= y);
      ASSERT_EQ(l, x <= y);
      ASSERT_TRUE(g || l);
      ASSERT_EQ(g && l, x == y);
    }
  }
}

TEST(BuildersTest, WindowGatesReadTheRightOffset) {
  const Circuit c = build_threshold_depth2(5, 2);
  // x = 00110, y = 11: only window 2 matches.
  const Symbols bits{0, 0, 1, 1, 0, 1, 1};
  for (std::size_t i = 0; i < 4; ++i) {
    const bool both = eval_gate(c, 2 * i, bits) && eval_gate(c, 2 * i + 1, bits);
    EXPECT_EQ(both, i == 2) << i;
  }
}

TEST(BuildersTest, ExhaustiveEquivalenceSmall) {
  for (std::size_t n = 1; n <= 8; ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      EXPECT_EQ(verify_equivalence(build_threshold_depth2(n, k),
                                   CheckMode::kExhaustive)
                    .summary.errors,
                0U);
      EXPECT_EQ(
          verify_equivalence(build_depth3(n, k), CheckMode::kExhaustive)
              .summary.errors,
          0U);
      if (k <= 4) {
        EXPECT_EQ(
            verify_equivalence(build_dnf(n, k), CheckMode::kExhaustive)
                .summary.errors,
            0U);
      }
    }
  }
}

}  // namespace
}  // namespace smlab::circuits

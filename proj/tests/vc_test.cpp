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

#include <cmath>

#include "smlab/core/oracle.hpp"
#include "smlab/core/text.hpp"
#include "smlab/error.hpp"
#include "smlab/learning/shatter.hpp"
#include "smlab/learning/vc.hpp"
#include "smlab/rng.hpp"

namespace smlab::learning {
namespace {

// Largest shattered subset by trying subsets against every pattern.
std::size_t vc_naive(std::size_t k, const std::vector<Symbols>& pool) {
  std::vector<std::uint32_t> sigs;
  for (std::size_t len = 0; len <= k; ++len) {
    for (std::uint64_t w = 0; w < (1ULL << len); ++w) {
      const Symbols p = core::unpack_bits(w, len);
      std::uint32_t sig = 0;
      for (std::size_t i = 0; i < pool.size(); ++i) {
        if (core::contains(pool[i], p)) sig |= 1U << i;
      }
      sigs.push_back(sig);
    }
  }
  std::size_t best = 0;
  for (std::uint32_t set = 1; set < (1U << pool.size()); ++set) {
    const int size = std::popcount(set);
    if (std::size_t(size) <= best) continue;
    bool all = true;
    for (std::uint32_t sub = set;; sub = (sub - 1) & set) {
      bool hit = false;
      for (std::uint32_t s : sigs) hit |= (s & set) == sub;
      all &= hit;
      if (!all || sub == 0) break;
    }
    if (all) best = size;
  }
  return best;
}

TEST(VcTest, AllStrings) {
  EXPECT_EQ(all_strings(3, 2).size(), 8u);
  EXPECT_EQ(all_strings(2, 3).size(), 9u);
  EXPECT_EQ(core::to_string(all_strings(3, 2)[3]), "011");
  EXPECT_THROW(all_strings(23, 2), CapacityError);
}

TEST(VcTest, MatchesNaiveSearch) {
  Rng rng(77);
  for (int rep = 0; rep < 60; ++rep) {
    const std::size_t n = 2 + rng.below(6);
    const std::size_t k = 1 + rng.below(3);
    std::vector<Symbols> pool;
    const std::size_t size = 1 + rng.below(9);
    for (std::size_t i = 0; i < size; ++i) {
      pool.push_back(core::unpack_bits(rng.next(), n));
    }
    EXPECT_EQ(vc_exact({2, n, k, Variant::kAtMostK, 1}, pool), vc_naive(k, pool))
        << "rep=" << rep;
  }
}

TEST(VcTest, WindowOverAllStrings) {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto pool = all_strings(n, 2);
    for (std::size_t k = 1; k <= n; ++k) {
      const std::size_t vc = vc_exact({2, n, k, Variant::kAtMostK, 1}, pool);
      EXPECT_LE(double(vc), vc_upper_bound(n, k, 2)) << n << ' ' << k;
      if (auto cert = build_shattered_set(n, k, 2)) {
        EXPECT_GE(vc, cert->d());
      }
      EXPECT_GE(vc, 1u);
    }
  }
  EXPECT_EQ(vc_exact({2, 4, 2, Variant::kAtMostK, 1}, all_strings(4, 2)), 2u);
}

TEST(VcTest, IdenticalStrings) {
  const std::vector<Symbols> same(5, core::parse_symbols("0101", 2));
  EXPECT_EQ(vc_exact({2, 4, 2, Variant::kAtMostK, 1}, same), 1u);
  // Every pattern of length <= 1 occurs in 01, so nothing is separated.
  const std::vector<Symbols> full(3, core::parse_symbols("01", 2));
  EXPECT_EQ(vc_exact({2, 2, 1, Variant::kAtMostK, 1}, full), 0u);
}

TEST(VcTest, CertificatePool) {
  const auto cert = build_shattered_set(2048, 12, 2);
  ASSERT_TRUE(cert);
  EXPECT_GE(vc_exact(cert->cls, cert->strings), cert->d());
  const auto exact = build_shattered_exact_k(4096, 12, 2);
  EXPECT_EQ(vc_exact(exact->cls, exact->strings), exact->d());
}

TEST(VcTest, Capacity) {
  std::vector<Symbols> big(33, Symbols{0});
  EXPECT_THROW(vc_exact({2, 1, 1, Variant::kAtMostK, 1}, big), CapacityError);
  EXPECT_THROW(vc_exact({2, 4, 20, Variant::kAtMostK, 1}, {}), CapacityError);
  EXPECT_THROW(vc_exact({2, 4, 2, Variant::kAnd, 2}, {}), InputError);
}

}  // namespace
}  // namespace smlab::learning

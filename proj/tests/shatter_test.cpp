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

#include "json.hpp"
#include "oracles.hpp"
#include "smlab/core/text.hpp"
#include "smlab/error.hpp"
#include "smlab/learning/shatter.hpp"
#include "smlab/learning/tm.hpp"
#include "smlab/rng.hpp"

namespace smlab::learning {
namespace {

using testing::kmp_contains;

TEST(TmTest, SmallestFamily) {
  const TmFamily f = tm_full_family(1, 2);
  ASSERT_EQ(f.members.size(), 1u);
  EXPECT_EQ(core::to_string(f.members[0]), "101");
  EXPECT_EQ(f.member_length(), 3u);
}

TEST(TmTest, MemberShape) {
  for (std::size_t m = 1; m <= 8; ++m) {
    const TmFamily f = tm_full_family(m, 2);
    const std::size_t z = f.zero_run;
    const Symbols block(z, 0);
    for (const Symbols& t : f.members) {
      ASSERT_EQ(t.size(), f.member_length());
      EXPECT_EQ(t.back(), 1);
      EXPECT_TRUE(std::all_of(t.end() - 1 - z, t.end() - 1,
                              [](Symbol c) { return c == 0; }));
      EXPECT_FALSE(kmp_contains(std::span(t).first(m), block));
    }
  }
}

TEST(TmTest, EnoughMembers) {
  for (int sigma = 2; sigma <= 3; ++sigma) {
    for (std::size_t m = 1; m <= 6; ++m) {
      EXPECT_GE(tm_full_family(m, sigma).members.size(),
                tm_guaranteed_size(m, sigma))
          << "m=" << m << " sigma=" << sigma;
    }
  }
}

TEST(TmTest, TripleProperty) {
  for (int sigma = 2; sigma <= 3; ++sigma) {
    for (std::size_t m = 1; m <= (sigma == 2 ? 5u : 3u); ++m) {
      const auto& members = tm_full_family(m, sigma).members;
      for (std::size_t a = 0; a < members.size(); ++a) {
        for (std::size_t b = 0; b < members.size(); ++b) {
          if (a == b) continue;
          Symbols joined = members[a];
          joined.insert(joined.end(), members[b].begin(), members[b].end());
          for (std::size_t c = 0; c < members.size(); ++c) {
            if (c == a || c == b) continue;
            ASSERT_FALSE(kmp_contains(joined, members[c]))
                << "m=" << m << " sigma=" << sigma;
          }
        }
      }
      EXPECT_TRUE(verify_non_containment(members));
    }
  }
}

TEST(TmTest, SampledTriplesUpToEight) {
  Rng rng(8);
  for (std::size_t m = 6; m <= 8; ++m) {
    const auto& members = tm_full_family(m, 2).members;
    for (int rep = 0; rep < 3000; ++rep) {
      const std::size_t a = rng.below(members.size());
      const std::size_t b = rng.below(members.size());
      const std::size_t c = rng.below(members.size());
      if (a == b || c == a || c == b) continue;
      Symbols joined = members[a];
      joined.insert(joined.end(), members[b].begin(), members[b].end());
      ASSERT_FALSE(kmp_contains(joined, members[c]));
    }
  }
}

TEST(TmTest, BuildIsLexicographicPrefix) {
  const TmFamily full = tm_full_family(4, 2);
  const TmFamily part = build_tm(4, 2, 5);
  ASSERT_EQ(part.members.size(), 5u);
  for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(part.members[i], full.members[i]);
  EXPECT_THROW(build_tm(4, 2, 9), CapacityError);
  EXPECT_THROW(build_tm(0, 2, 1), InputError);
}

TEST(TmTest, NonContainmentDetectsViolation) {
  std::vector<Symbols> fake{core::parse_symbols("10", 2),
                            core::parse_symbols("01", 2),
                            core::parse_symbols("00", 2)};
  EXPECT_FALSE(verify_non_containment(fake));
}

TEST(ShatterTest, Parameters) {
  const ShatterParams p = shatter_params(2048, 12, 2);
  EXPECT_EQ(p.m, 5);
  EXPECT_EQ(p.d, 4);
  EXPECT_LT(shatter_params(100, 2, 2).m, 1);
  const ShatterParams e = shatter_exact_params(4096, 12, 2);
  EXPECT_EQ(e.m, 6);
  EXPECT_EQ(e.d, 4);
}

TEST(ShatterTest, Binary2048) {
  const auto cert = build_shattered_set(2048, 12, 2);
  ASSERT_TRUE(cert);
  EXPECT_EQ(cert->d(), 4u);
  EXPECT_EQ(cert->hypotheses.size(), 16u);
  EXPECT_EQ(cert->m, 5u);
  for (const Symbols& s : cert->strings) EXPECT_EQ(s.size(), 2048u);
  for (const auto& h : cert->hypotheses) EXPECT_LE(h[0].size(), 12u);
  EXPECT_TRUE(verify_shattering(*cert));
}

TEST(ShatterTest, DegenerateSignal) {
  EXPECT_FALSE(build_shattered_set(100, 2, 2));
  EXPECT_FALSE(build_shattered_exact_k(100, 3, 2));
}

TEST(ShatterTest, SweepSelfCertifies) {
  for (int sigma = 2; sigma <= 4; ++sigma) {
    for (std::size_t k = 1; k <= 16; ++k) {
      for (std::size_t n : {16u, 64u, 300u, 2048u}) {
        if (k > n) continue;
        if (auto c = build_shattered_set(n, k, sigma)) {
          ASSERT_TRUE(verify_shattering(*c)) << n << ' ' << k << ' ' << sigma;
        }
        if (auto c = build_shattered_exact_k(n, k, sigma)) {
          for (const auto& h : c->hypotheses) ASSERT_EQ(h[0].size(), k);
          ASSERT_TRUE(verify_shattering(*c)) << n << ' ' << k << ' ' << sigma;
        }
      }
    }
  }
}

TEST(ShatterTest, FaultInjection) {
  auto cert = build_shattered_set(2048, 12, 2);
  ASSERT_TRUE(cert);
  cert->hypotheses[cert->mapping[0]] = {Symbols(12, 1)};
  EXPECT_FALSE(verify_shattering(*cert));

  auto swapped = build_shattered_set(2048, 12, 2);
  std::swap(swapped->mapping[1], swapped->mapping[2]);
  EXPECT_FALSE(verify_shattering(*swapped));

  auto too_long = build_shattered_set(2048, 12, 2);
  too_long->hypotheses[3] = {Symbols(13, 0)};
  EXPECT_FALSE(verify_shattering(*too_long));
}

TEST(ShatterTest, EmptySetIsShattered) {
  ShatterCertificate empty;
  empty.cls = {2, 8, 2, Variant::kAtMostK, 1};
  empty.hypotheses = {{Symbols{}}};
  empty.mapping = {0};
  EXPECT_TRUE(verify_shattering(empty));
}

TEST(ShatterTest, SingleStringAlwaysShattered) {
  // d = 1 from a string containing the pattern and one that does not.
  ShatterCertificate one;
  one.cls = {2, 3, 1, Variant::kAtMostK, 1};
  one.strings = {core::parse_symbols("000", 2)};
  one.hypotheses = {{core::parse_symbols("1", 2)}, {core::parse_symbols("0", 2)}};
  one.mapping = {0, 1};
  EXPECT_TRUE(verify_shattering(one));
}

TEST(ShatterTest, MultiPattern) {
  auto and1 = build_shattered_multi(2048, 12, 2, 1, Variant::kAnd);
  ASSERT_TRUE(and1);
  EXPECT_EQ(and1->cls.variant, Variant::kAtMostK);
  for (Variant v : {Variant::kAnd, Variant::kOr}) {
    for (std::size_t c = 2; c <= 4; ++c) {
      auto cert = build_shattered_multi(2048, 12, 2, c, v);
      ASSERT_TRUE(cert);
      EXPECT_EQ(cert->cls.variant, v);
      for (const auto& h : cert->hypotheses) EXPECT_EQ(h.size(), c);
      EXPECT_TRUE(verify_shattering(*cert)) << "c=" << c;
    }
  }
  auto and2 = build_shattered_multi(2048, 12, 2, 2, Variant::kAnd);
  EXPECT_EQ(and2->d(), 4u);
  auto or2 = build_shattered_multi(2048, 12, 2, 2, Variant::kOr);
  EXPECT_EQ(or2->d(), 3u);
  EXPECT_THROW(build_shattered_multi(2048, 12, 2, 8, Variant::kOr), InputError);
  EXPECT_THROW(build_shattered_multi(2048, 12, 2, 11, Variant::kAnd),
               InputError);
  EXPECT_THROW(build_shattered_multi(2048, 12, 2, 0, Variant::kAnd),
               InputError);
}

TEST(ShatterTest, MultiUnderWrongClassFails) {
  auto cert = build_shattered_multi(2048, 12, 2, 2, Variant::kAnd);
  HypothesisClass or_cls = cert->cls;
  or_cls.variant = Variant::kOr;
  EXPECT_FALSE(verify_shattering(*cert, or_cls));
}

TEST(ShatterTest, ExactLength) {
  auto cert = build_shattered_exact_k(4096, 12, 2);
  ASSERT_TRUE(cert);
  EXPECT_EQ(cert->d(), 4u);
  for (const auto& h : cert->hypotheses) EXPECT_EQ(h[0].size(), 12u);
  EXPECT_TRUE(verify_shattering(*cert));
}

TEST(ShatterTest, Json) {
  auto cert = build_shattered_set(2048, 12, 2);
  const auto j = nlohmann::json::parse(certificate_json(*cert));
  EXPECT_EQ(j["strings"].size(), 4u);
  EXPECT_EQ(j["patterns"].size(), 16u);
  EXPECT_EQ(j["mapping"].size(), 16u);
  auto multi = build_shattered_multi(2048, 12, 2, 2, Variant::kOr);
  const auto jm = nlohmann::json::parse(certificate_json(*multi));
  EXPECT_EQ(jm["patterns"][0].size(), 2u);
}

}  // namespace
}  // namespace smlab::learning

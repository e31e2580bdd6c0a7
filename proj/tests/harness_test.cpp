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

#include <stdexcept>

#include "smlab/comm/equality.hpp"
#include "smlab/comm/harness.hpp"
#include "smlab/error.hpp"

namespace smlab::comm {
namespace {

TEST(HarnessTest, Bipartitions) {
  EXPECT_EQ(Bipartition::canonical(3, 2).str(), "AAABB");
  EXPECT_EQ(Bipartition::interleaved(5).str(), "ABABA");
  EXPECT_EQ(Bipartition::uniform(3, Party::kBob).str(), "BBB");
  Rng a(3), b(3);
  EXPECT_EQ(Bipartition::random(30, a), Bipartition::random(30, b));
}

TEST(HarnessTest, ViewsOnlyReadOwnedCoordinates) {
  const TwoPartyInput in({1, 0, 1}, {1}, Bipartition::canonical(3, 1));
  const PartyView alice = in.view(Party::kAlice);
  const PartyView bob = in.view(Party::kBob);
  EXPECT_EQ(alice.bit(0), 1);
  EXPECT_EQ(bob.bit(in.y_coord(0)), 1);
  EXPECT_THROW(alice.bit(in.y_coord(0)), std::logic_error);
  EXPECT_THROW(bob.bit(0), std::logic_error);
}

TEST(HarnessTest, InputValidation) {
  EXPECT_THROW(TwoPartyInput({1, 0}, {1}, Bipartition::canonical(2, 2)),
               InputError);
  EXPECT_THROW(TwoPartyInput({2, 0}, {1}, Bipartition::canonical(2, 1)),
               InputError);
}

TEST(HarnessTest, ChannelCountsBitsAndRounds) {
  ProtocolRun run;
  Channel ch(run);
  ch.send(Party::kAlice, Tag::kIndices, 3, 2);
  ch.send(Party::kAlice, Tag::kIndices, 0, 2);
  ch.send(Party::kBob, Tag::kVerdict, 1, 1);
  ch.send(Party::kAlice, Tag::kIndices, 1, 1);
  EXPECT_EQ(run.comm_bits, 6U);
  EXPECT_EQ(run.transcript[1].round, 0U);
  EXPECT_EQ(run.transcript[2].round, 1U);
  EXPECT_EQ(run.transcript[3].round, 2U);
  EXPECT_THROW(ch.send(Party::kBob, Tag::kVerdict, 2, 1), std::logic_error);

  const Symbols bits(130, 1);
  ch.send_bits(Party::kBob, Tag::kPatternBits, bits);
  EXPECT_EQ(run.comm_bits, 136U);
  EXPECT_EQ(run.transcript.size(), 7U);
}

TEST(HarnessTest, CoinsAreReproducible) {
  Coins a(RandomSource{5, CoinMode::kPrivate});
  Coins b(RandomSource{5, CoinMode::kPrivate});
  EXPECT_EQ(a.of(Party::kAlice).next(), b.of(Party::kAlice).next());
  EXPECT_NE(a.of(Party::kAlice).next(), a.of(Party::kBob).next());
  Coins shared(RandomSource{5, CoinMode::kShared});
  EXPECT_EQ(&shared.of(Party::kAlice), &shared.of(Party::kBob));
}

TEST(EqualityTest, PrimalityCheck) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(kDefaultFieldPrime));
  EXPECT_TRUE(is_prime(1'000'000'007));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(561));
  EXPECT_FALSE(is_prime(kDefaultFieldPrime - 2));
  for (std::uint64_t q = 0; q < 2000; ++q) {
    bool naive = q >= 2;
    for (std::uint64_t d = 2; d * d <= q; ++d) naive = naive && q % d != 0;
    ASSERT_EQ(is_prime(q), naive) << q;
  }
}

TwoPartyInput split_pair(const Symbols& u, const Symbols& v, Rng& rng) {
  Symbols x = u;
  x.insert(x.end(), v.begin(), v.end());
  return TwoPartyInput(x, {}, Bipartition::random(x.size(), rng));
}

TEST(EqualityTest, EqualSegmentsAlwaysAccepted) {
  Rng rng(11);
  for (int t = 0; t < 500; ++t) {
    const std::size_t len = 1 + rng.below(40);
    Symbols u(len);
    for (auto& b : u) b = rng.coin();
    const TwoPartyInput in = split_pair(u, u, rng);
    for (auto mode : {EqualityMode::kFingerprint, EqualityMode::kExact}) {
      ProtocolRun run;
      Channel ch(run);
      Coins coins(RandomSource{std::uint64_t(t)});
      ASSERT_TRUE(equality_subprotocol(in, Segment::input(0),
                                       Segment::input(len), len,
                                       {mode, 1'000'003}, coins, ch));
    }
  }
}

TEST(EqualityTest, FingerprintCostIsTwoFieldElements) {
  Rng rng(2);
  const Symbols u{1, 0, 1, 1}, v{1, 0, 0, 1};
  const TwoPartyInput in = split_pair(u, v, rng);
  ProtocolRun run;
  Channel ch(run);
  Coins coins(RandomSource{});
  EXPECT_FALSE(equality_subprotocol(in, Segment::input(0), Segment::input(4),
                                    4, {}, coins, ch));
  EXPECT_EQ(run.comm_bits, 2U * 61U);
}

TEST(EqualityTest, PublicSegment) {
  Rng rng(4);
  const Symbols u{1, 1, 0};
  const TwoPartyInput in = split_pair(u, {}, rng);
  for (auto mode : {EqualityMode::kFingerprint, EqualityMode::kExact}) {
    ProtocolRun run;
    Channel ch(run);
    Coins coins(RandomSource{});
    const Symbols same{1, 1, 0}, diff{1, 0, 0};
    EXPECT_TRUE(equality_subprotocol(in, Segment::input(0),
                                     Segment::public_symbols(same), 3,
                                     {mode, 101}, coins, ch));
    EXPECT_FALSE(equality_subprotocol(in, Segment::input(0),
                                      Segment::public_symbols(diff), 3,
                                      {mode, 101}, coins, ch));
  }
}

TEST(EqualityTest, FalseAcceptRateWithinBound) {
  // Over a small field the false-accept rate for a fixed unequal pair must
  // stay below (len - 1) / q.
  const std::uint64_t q = 101;
  const std::size_t len = 20;
  Rng rng(9);
  Symbols u(len), v(len);
  for (std::size_t j = 0; j < len; ++j) u[j] = v[j] = rng.coin();
  v[3] ^= 1;
  v[17] ^= 1;
  const TwoPartyInput in = split_pair(u, v, rng);
  int accepted = 0;
  const int trials = 20000;
  for (int t = 0; t < trials; ++t) {
    ProtocolRun run;
    Channel ch(run);
    Coins coins(RandomSource{std::uint64_t(t)});
    accepted += equality_subprotocol(in, Segment::input(0),
                                     Segment::input(len), len, {{}, q}, coins,
                                     ch);
  }
  EXPECT_LE(double(accepted) / trials, double(len - 1) / q + 0.01);
}

TEST(EqualityTest, RejectsBadField) {
  const TwoPartyInput in({1, 1}, {}, Bipartition::canonical(2, 0));
  ProtocolRun run;
  Channel ch(run);
  Coins coins(RandomSource{});
  EXPECT_THROW(equality_subprotocol(in, Segment::input(0), Segment::input(1),
                                    1, {{}, 100}, coins, ch),
               ParameterError);
  const TwoPartyInput wide({1, 1, 1, 1}, {}, Bipartition::canonical(4, 0));
  EXPECT_THROW(equality_subprotocol(wide, Segment::input(0),
                                    Segment::input(2), 2, {{}, 2}, coins, ch),
               ParameterError);
}

}  // namespace
}  // namespace smlab::comm

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

#include "smlab/comm/equality.hpp"

#include <string>

#include "smlab/bits.hpp"
#include "smlab/error.hpp"

namespace smlab::comm {
namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1U) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

void check_field(std::uint64_t q, std::size_t len) {
  thread_local std::uint64_t last_prime = 0;
  if (q != last_prime) {
    if (!is_prime(q)) {
      throw ParameterError("fingerprint field size " + std::to_string(q) +
                           " is not prime");
    }
    last_prime = q;
  }
  if (q <= len) {
    throw ParameterError("fingerprint field size " + std::to_string(q) +
                         " must exceed the compared length " +
                         std::to_string(len));
  }
}

Party term_owner(const TwoPartyInput& in, Segment s, std::size_t j) {
  return s.known ? Party::kAlice : in.owner()[s.coord + j];
}

}  // namespace

bool is_prime(std::uint64_t q) {
  if (q < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    if (q % p == 0) return q == p;
  }
  std::uint64_t d = q - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are deterministic for all 64-bit integers.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, q);
    if (x == 1 || x == q - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, q);
      if (x == q - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool equality_subprotocol(const TwoPartyInput& in, Segment u, Segment v,
                          std::size_t len, const EqualityConfig& config,
                          Coins& coins, Channel& channel) {
  const PartyView alice = in.view(Party::kAlice);
  const PartyView bob = in.view(Party::kBob);
  auto value = [&](const PartyView& who, Segment s, std::size_t j) {
    return s.known ? s.known[j] : who.bit(s.coord + j);
  };

  if (config.mode == EqualityMode::kExact) {
    // Alice ships every input coordinate she owns; Bob then sees both sides.
    Symbols shipped;
    for (Segment s : {u, v}) {
      for (std::size_t j = 0; j < len; ++j) {
        if (!s.known && term_owner(in, s, j) == Party::kAlice) {
          shipped.push_back(alice.bit(s.coord + j));
        }
      }
    }
    channel.send_bits(Party::kAlice, Tag::kExactBits, shipped);
    std::size_t next = 0;
    auto bob_reads = [&](Segment s, std::size_t j) -> Symbol {
      if (s.known) return s.known[j];
      if (term_owner(in, s, j) == Party::kAlice) return shipped[next++];
      return bob.bit(s.coord + j);
    };
    Symbols us(len), vs(len);
    for (std::size_t j = 0; j < len; ++j) us[j] = bob_reads(u, j);
    for (std::size_t j = 0; j < len; ++j) vs[j] = bob_reads(v, j);
    return us == vs;
  }

  const std::uint64_t q = config.field_prime;
  check_field(q, len);
  const unsigned width = ceil_log2(q);

  // Partial sums of sum_j (u_j - v_j) r^j over the terms each party owns.
  auto partial = [&](const PartyView& who, std::uint64_t r) {
    std::uint64_t acc = 0;
    std::uint64_t power = 1;
    for (std::size_t j = 0; j < len; ++j) {
      if (term_owner(in, u, j) == who.who() && value(who, u, j)) {
        acc += power;
        if (acc >= q) acc -= q;
      }
      if (term_owner(in, v, j) == who.who() && value(who, v, j)) {
        acc += q - power;
        if (acc >= q) acc -= q;
      }
      power = mulmod(power, r, q);
    }
    return acc;
  };

  const std::uint64_t r = coins.of(Party::kAlice).below(q);
  const std::uint64_t sum_a = partial(alice, r);
  channel.send(Party::kAlice, Tag::kFingerprint, r, width);
  channel.send(Party::kAlice, Tag::kFingerprint, sum_a, width);
  const std::uint64_t sum_b = partial(bob, r);
  return (sum_a + sum_b) % q == 0;
}

}  // namespace smlab::comm

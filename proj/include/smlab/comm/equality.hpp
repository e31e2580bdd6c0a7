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

#ifndef SMLAB_COMM_EQUALITY_HPP_
#define SMLAB_COMM_EQUALITY_HPP_

#include <cstddef>
#include <cstdint>
#include <span>

#include "smlab/comm/harness.hpp"

namespace smlab::comm {

// 2^61 - 1.
inline constexpr std::uint64_t kDefaultFieldPrime = (1ULL << 61) - 1;

enum class EqualityMode : std::uint8_t { kFingerprint, kExact };

struct EqualityConfig {
  EqualityMode mode = EqualityMode::kFingerprint;
  std::uint64_t field_prime = kDefaultFieldPrime;
};

bool is_prime(std::uint64_t q);

// One side of an equality test: `len` consecutive input coordinates starting
// at `coord`, or a run of symbols both parties already know.
struct Segment {
  std::size_t coord = 0;
  const Symbol* known = nullptr;

  static Segment input(std::size_t coord) { return {coord, nullptr}; }
  static Segment public_symbols(std::span<const Symbol> s) {
    return {0, s.data()};
  }
};

// Tests u == v for two length-`len` segments whose coordinates may be spread
// over both parties. Fingerprint mode: Alice draws r in [0, q), sends r and
// her partial sum of (u_j - v_j) r^j mod q; Bob adds his part and checks for
// zero. Never rejects equal inputs; false-accept probability <= (len-1)/q.
// Costs 2*ceil(log2 q) bits. Exact mode: Alice ships her owned coordinates.
// Coordinates known to both are credited to Alice. The verdict is Bob's.
// Throws ParameterError if q is not a prime exceeding len.
bool equality_subprotocol(const TwoPartyInput& in, Segment u, Segment v,
                          std::size_t len, const EqualityConfig& config,
                          Coins& coins, Channel& channel);

}  // namespace smlab::comm

#endif  // SMLAB_COMM_EQUALITY_HPP_

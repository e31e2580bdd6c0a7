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

#ifndef SMLAB_COMM_PROTOCOLS_HPP_
#define SMLAB_COMM_PROTOCOLS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>

#include "smlab/comm/equality.hpp"
#include "smlab/comm/harness.hpp"

namespace smlab::comm {

// Deterministic protocol for SM(x, y) with y known to both parties; only the
// x part of `in` is read. Starting positions are scanned in blocks of k. Per
// block Alice sends the smallest and largest starts consistent with her bits
// (ceil(log2(k+2)) bits each, k+1 meaning "none"), Bob rebuilds her bits over
// [i, j+k) and announces whether the block holds a match. The run stops at
// the first match. Cost <= ceil(n/k) * (2*ceil(log2(k+2)) + 1).
ProtocolRun protocol_fixed_pattern(const TwoPartyInput& in,
                                   std::span<const Symbol> y,
                                   const RandomSource& coins = {});

// Both parties publish their pattern bits (k bits in total), then run the
// fixed-pattern protocol.
ProtocolRun protocol_small_k(const TwoPartyInput& in,
                             const RandomSource& coins = {});

// Block parameter defaulting to ceil(sqrt(n)).
std::size_t default_block(std::size_t n);

struct LargeKOptions {
  std::optional<std::size_t> block;  // b; ceil(sqrt(n)) when unset
  EqualityConfig equality;
  RandomSource coins;
};

// Randomized protocol for k >= 2b:
//  1. publish p = y[0, 2b);
//  2. if p has a period of order <= b, let pbar be its primitive period,
//     agree on m = max{m : pbar^m prefix of y} via consistent counts m_A,
//     m_B; if y is a prefix of pbar^(m+1) run the fixed-pattern protocol on
//     the now-public y, else publish the deviating block q and use
//     P = pbar^m q as the prefix;
//  3. scan starts in blocks of b: Alice sends min/max starts consistent with
//     P, Bob finds the unique candidate (P has no period of order <= b) and
//     the parties fingerprint-test x[l, l+k) == y.
// Throws ParameterError when k < 2b.
ProtocolRun protocol_large_k(const TwoPartyInput& in,
                             const LargeKOptions& options = {});

// Branch labels written to ProtocolRun::path by protocol_large_k.
inline constexpr const char* kPathAperiodic = "aperiodic";
inline constexpr const char* kPathPeriodicFull = "periodic-full";
inline constexpr const char* kPathPeriodicDeviating = "periodic-deviating";

}  // namespace smlab::comm

#endif  // SMLAB_COMM_PROTOCOLS_HPP_

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

#ifndef SMLAB_CORE_COUNTING_HPP_
#define SMLAB_CORE_COUNTING_HPP_

#include <cstddef>
#include <cstdint>

#include "smlab/bigint.hpp"

namespace smlab::core {

// Exhaustive enumeration limit for count_zero_preimages (n + k bits).
inline constexpr std::size_t kMaxZeroPreimageBits = 28;
// Restriction-search limit for min_maxterm_width (n + k variables).
inline constexpr std::size_t kMaxMaxtermVariables = 18;

// |{(x, y) in {0,1}^(n+k) : SM(x, y) = 0}| by full enumeration.
// Requires 1 <= k <= n and n + k <= kMaxZeroPreimageBits.
BigInt count_zero_preimages(std::size_t n, std::size_t k);

// Number of binary strings of length n avoiding 0^k, via
// F_j = 2^j (j < k), F_j = F_{j-1} + ... + F_{j-k} (j >= k).
BigInt count_avoiding(std::size_t n, std::size_t k);

// A partial assignment over the n + k variables (bit i < n is x_i, bit n + j
// is y_j). `values` is only meaningful on `support`.
struct Restriction {
  std::uint64_t support = 0;
  std::uint64_t values = 0;
};

// True iff the restriction forces SM to 0: every shift has a fixed text
// variable and its aligned fixed pattern variable holding different values.
bool forces_zero(std::size_t n, std::size_t k, Restriction rho);

// Minimum |support| over restrictions forcing SM = 0. Supports are scanned in
// increasing size and, within a support, all 2^|support| assignments are
// tried; the first forcing restriction found is minimal by construction.
std::size_t min_maxterm_width(std::size_t n, std::size_t k);

// The minimal restriction found by the same search.
Restriction min_maxterm(std::size_t n, std::size_t k);

}  // namespace smlab::core

#endif  // SMLAB_CORE_COUNTING_HPP_

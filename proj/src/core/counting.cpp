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

#include "smlab/core/counting.hpp"

#include <bit>
#include <string>
#include <vector>

#include "smlab/core/oracle.hpp"
#include "smlab/error.hpp"

namespace smlab::core {
namespace {

void check_shape(std::size_t n, std::size_t k) {
  if (k < 1 || k > n) {
    throw InputError("need 1 <= k <= n, got n=" + std::to_string(n) +
                     " k=" + std::to_string(k));
  }
}

// Every shift i has some j with x_{i+j} and y_j both in the support.
bool support_covers_all_shifts(std::size_t n, std::size_t k,
                               std::uint64_t support) {
  const std::uint64_t kmask = (1ULL << k) - 1;
  const std::uint64_t sx = support & ((1ULL << n) - 1);
  const std::uint64_t sy = (support >> n) & kmask;
  for (std::size_t i = 0; i + k <= n; ++i) {
    if (((sx >> i) & sy) == 0) return false;
  }
  return true;
}

// Next subset of the same popcount (Gosper's hack).
std::uint64_t next_same_popcount(std::uint64_t v) {
  const std::uint64_t t = v | (v - 1);
  return (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(v) + 1));
}

// Scatters the low popcount(mask) bits of `bits` into the set positions of
// `mask` (software pdep).
std::uint64_t deposit(std::uint64_t bits, std::uint64_t mask) {
  std::uint64_t out = 0;
  for (std::uint64_t m = mask; m != 0; m &= m - 1) {
    if (bits & 1U) out |= m & -m;
    bits >>= 1;
  }
  return out;
}

}  // namespace

BigInt count_zero_preimages(std::size_t n, std::size_t k) {
  check_shape(n, k);
  if (n + k > kMaxZeroPreimageBits) {
    throw CapacityError("count_zero_preimages enumerates 2^(n+k) pairs; n+k=" +
                        std::to_string(n + k) + " exceeds " +
                        std::to_string(kMaxZeroPreimageBits));
  }
  std::uint64_t zeros = 0;
  for (std::uint64_t y = 0; y < (1ULL << k); ++y) {
    for (std::uint64_t x = 0; x < (1ULL << n); ++x) {
      if (!sm_packed(x, n, y, k)) ++zeros;
    }
  }
  return BigInt(zeros);
}

BigInt count_avoiding(std::size_t n, std::size_t k) {
  if (k < 1) throw InputError("count_avoiding needs k >= 1");
  std::vector<BigInt> f(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    if (j < k) {
      f[j] = BigInt(1) << j;
    } else {
      for (std::size_t i = 1; i <= k; ++i) f[j] += f[j - i];
    }
  }
  return f[n];
}

bool forces_zero(std::size_t n, std::size_t k, Restriction rho) {
  const std::uint64_t kmask = (1ULL << k) - 1;
  const std::uint64_t nmask = (1ULL << n) - 1;
  const std::uint64_t sx = rho.support & nmask;
  const std::uint64_t vx = rho.values & nmask;
  const std::uint64_t sy = (rho.support >> n) & kmask;
  const std::uint64_t vy = (rho.values >> n) & kmask;
  for (std::size_t i = 0; i + k <= n; ++i) {
    const std::uint64_t conflict = (sx >> i) & sy & ((vx >> i) ^ vy) & kmask;
    if (conflict == 0) return false;
  }
  return true;
}

Restriction min_maxterm(std::size_t n, std::size_t k) {
  check_shape(n, k);
  const std::size_t vars = n + k;
  if (vars > kMaxMaxtermVariables) {
    throw CapacityError("min_maxterm_width searches restrictions over n+k=" +
                        std::to_string(vars) + " variables; limit is " +
                        std::to_string(kMaxMaxtermVariables));
  }
  const std::uint64_t all = (1ULL << vars) - 1;
  for (std::size_t size = 1; size <= vars; ++size) {
    for (std::uint64_t support = (1ULL << size) - 1; support <= all;
         support = next_same_popcount(support)) {
      // A shift with no fixed aligned pair can always be completed to a
      // match, so no assignment on this support forces 0.
      if (support_covers_all_shifts(n, k, support)) {
        for (std::uint64_t a = 0; a < (1ULL << size); ++a) {
          const Restriction rho{support, deposit(a, support)};
          if (forces_zero(n, k, rho)) return rho;
        }
      }
      if (support == all) break;
    }
  }
  // Fixing every variable with x = 1^n, y = 0^k always forces 0.
  throw std::logic_error("maxterm search exhausted without a forcing set");
}

std::size_t min_maxterm_width(std::size_t n, std::size_t k) {
  return static_cast<std::size_t>(std::popcount(min_maxterm(n, k).support));
}

}  // namespace smlab::core

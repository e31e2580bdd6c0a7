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

#ifndef SMLAB_CORE_ORACLE_HPP_
#define SMLAB_CORE_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <span>

#include "smlab/core/text.hpp"

namespace smlab::core {

// SM(x, y): true iff y occurs contiguously in x. Naive O(nk) window scan.
// Throws InputError when |y| > |x| or the alphabets differ.
bool sm_oracle(const Text& x, const Pattern& y);

// Unchecked containment on raw symbol spans. An empty needle occurs
// everywhere; a needle longer than the haystack occurs nowhere.
bool contains(std::span<const Symbol> haystack, std::span<const Symbol> needle);

// First occurrence (0-based) of needle in haystack at or after `from`.
std::ptrdiff_t find_first(std::span<const Symbol> haystack,
                          std::span<const Symbol> needle, std::size_t from = 0);

// SM on bit-packed binary strings (n <= 64, 1 <= k <= n).
inline bool sm_packed(std::uint64_t x, std::size_t n, std::uint64_t y,
                      std::size_t k) {
  const std::uint64_t mask = k == 64 ? ~0ULL : ((1ULL << k) - 1);
  for (std::size_t i = 0; i + k <= n; ++i) {
    if (((x >> i) & mask) == y) return true;
  }
  return false;
}

}  // namespace smlab::core

#endif  // SMLAB_CORE_ORACLE_HPP_

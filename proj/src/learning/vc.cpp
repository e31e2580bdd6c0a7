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

#include "smlab/learning/vc.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_set>

#include "smlab/core/oracle.hpp"
#include "smlab/error.hpp"

namespace smlab::learning {
namespace {

using Mask = std::uint32_t;

// Calls visit(p) for every string of the given length over [0, sigma).
template <typename Visit>
void for_each_string(std::size_t length, int sigma, Visit visit) {
  Symbols p(length, 0);
  while (true) {
    visit(p);
    std::size_t i = length;
    while (i > 0 && p[i - 1] == sigma - 1) p[--i] = 0;
    if (i == 0) return;
    ++p[i - 1];
  }
}

// Packs the bits of `sig` selected by `mask` into the low bits.
Mask extract(Mask sig, Mask mask) {
  Mask out = 0;
  int bit = 0;
  for (Mask m = mask; m; m &= m - 1, ++bit) {
    if (sig & (m & -m)) out |= Mask{1} << bit;
  }
  return out;
}

bool shattered(const std::vector<Mask>& sigs, Mask set, int size,
               std::vector<std::uint8_t>& seen) {
  const std::size_t need = std::size_t{1} << size;
  if (sigs.size() < need) return false;
  seen.assign(need, 0);
  std::size_t found = 0;
  for (Mask s : sigs) {
    const Mask p = extract(s, set);
    if (!seen[p]) {
      seen[p] = 1;
      if (++found == need) return true;
    }
  }
  return false;
}

}  // namespace

std::vector<Symbols> all_strings(std::size_t n, int sigma) {
  if (sigma < 2 || sigma > 256) throw InputError("alphabet size out of range");
  double count = 1;
  for (std::size_t i = 0; i < n; ++i) count *= sigma;
  if (count > double(1 << 22)) {
    throw CapacityError("all_strings limited to 2^22 strings");
  }
  std::vector<Symbols> out;
  for_each_string(n, sigma, [&](const Symbols& s) { out.push_back(s); });
  return out;
}

std::size_t vc_exact(const HypothesisClass& cls,
                     const std::vector<Symbols>& pool) {
  if (cls.variant != Variant::kAtMostK && cls.variant != Variant::kExactlyK) {
    throw InputError("vc_exact supports the single-pattern variants only");
  }
  if (pool.size() > kMaxVcPool) {
    throw CapacityError("vc_exact pool limited to " +
                        std::to_string(kMaxVcPool) + " strings");
  }
  if (class_size(cls) > kMaxVcPatterns) {
    throw CapacityError("vc_exact limited to 10^6 patterns");
  }
  const std::size_t first_len = cls.variant == Variant::kExactlyK ? cls.k : 0;
  std::vector<Mask> sigs;
  for (std::size_t len = first_len; len <= cls.k; ++len) {
    for_each_string(len, cls.sigma, [&](const Symbols& p) {
      Mask sig = 0;
      for (std::size_t i = 0; i < pool.size(); ++i) {
        if (core::contains(pool[i], p)) sig |= Mask{1} << i;
      }
      sigs.push_back(sig);
    });
  }
  std::sort(sigs.begin(), sigs.end());
  sigs.erase(std::unique(sigs.begin(), sigs.end()), sigs.end());

  std::vector<std::uint8_t> seen;
  std::vector<Mask> level{0};  // the empty set is always shattered
  std::size_t best = 0;
  for (int size = 1; size <= static_cast<int>(pool.size()); ++size) {
    const std::unordered_set<Mask> prev(level.begin(), level.end());
    std::vector<Mask> next;
    for (Mask s : level) {
      const int top = s ? 32 - std::countl_zero(s) : 0;
      for (int j = top; j < static_cast<int>(pool.size()); ++j) {
        const Mask cand = s | (Mask{1} << j);
        bool subsets_ok = true;
        for (Mask m = s; m && subsets_ok; m &= m - 1) {
          subsets_ok = prev.contains(cand & ~(m & -m));
        }
        if (subsets_ok && shattered(sigs, cand, size, seen)) {
          next.push_back(cand);
        }
      }
    }
    if (next.empty()) break;
    best = static_cast<std::size_t>(size);
    level = std::move(next);
  }
  return best;
}

}  // namespace smlab::learning

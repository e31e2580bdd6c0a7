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

#include "smlab/learning/tm.hpp"

#include <limits>
#include <string>

#include "smlab/bits.hpp"
#include "smlab/core/oracle.hpp"
#include "smlab/error.hpp"

namespace smlab::learning {
namespace {

void check_args(std::size_t m, int sigma) {
  if (m < 1) throw InputError("T_m needs m >= 1");
  if (sigma < 2 || sigma > 256) throw InputError("alphabet size out of range");
}

// Calls emit(member) for members in lexicographic order of s until it
// returns false.
template <typename Emit>
void enumerate(std::size_t m, int sigma, std::size_t zeros, Emit emit) {
  Symbols s(m, 0);
  const Symbols block(zeros, 0);
  while (true) {
    if (!core::contains(s, block)) {
      Symbols member = s;
      member.insert(member.end(), zeros, 0);
      member.push_back(1);
      if (!emit(std::move(member))) return;
    }
    std::size_t i = m;
    while (i > 0 && s[i - 1] == sigma - 1) s[--i] = 0;
    if (i == 0) return;
    ++s[i - 1];
  }
}

}  // namespace

std::size_t tm_guaranteed_size(std::size_t m, int sigma) {
  std::size_t v = 1;
  for (std::size_t i = 1; i < m; ++i) {
    if (v > std::numeric_limits<std::size_t>::max() / sigma) {
      return std::numeric_limits<std::size_t>::max();
    }
    v *= sigma;
  }
  return v;
}

TmFamily build_tm(std::size_t m, int sigma, std::size_t count) {
  check_args(m, sigma);
  if (count > tm_guaranteed_size(m, sigma)) {
    throw CapacityError("T_m guarantees only sigma^(m-1) members");
  }
  TmFamily f{m, sigma, ceil_log2(m) + 1, {}};
  if (count == 0) return f;
  enumerate(m, sigma, f.zero_run, [&](Symbols member) {
    f.members.push_back(std::move(member));
    return f.members.size() < count;
  });
  return f;
}

TmFamily tm_full_family(std::size_t m, int sigma) {
  check_args(m, sigma);
  double space = 1;
  for (std::size_t i = 0; i < m; ++i) space *= sigma;
  if (space > double(1 << 22)) {
    throw CapacityError("full T_m enumeration limited to sigma^m <= 2^22");
  }
  TmFamily f{m, sigma, ceil_log2(m) + 1, {}};
  enumerate(m, sigma, f.zero_run, [&](Symbols member) {
    f.members.push_back(std::move(member));
    return true;
  });
  return f;
}

bool verify_non_containment(const std::vector<Symbols>& members) {
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = 0; b < members.size(); ++b) {
      if (a == b) continue;
      Symbols joined = members[a];
      joined.insert(joined.end(), members[b].begin(), members[b].end());
      for (std::size_t c = 0; c < members.size(); ++c) {
        if (c == a || c == b) continue;
        if (core::contains(joined, members[c])) return false;
      }
    }
  }
  return true;
}

}  // namespace smlab::learning

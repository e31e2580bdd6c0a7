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

#ifndef SMLAB_LEARNING_TM_HPP_
#define SMLAB_LEARNING_TM_HPP_

#include <cstddef>
#include <vector>

#include "smlab/core/text.hpp"

namespace smlab::learning {

using core::Symbols;

// Strings s . 0^z 1 with |s| = m, z = ceil(log2 m) + 1 and s free of 0^z.
// No member occurs in the concatenation of two other distinct members.
struct TmFamily {
  std::size_t m = 0;
  int sigma = 2;
  std::size_t zero_run = 0;  // z
  std::vector<Symbols> members;

  std::size_t member_length() const { return m + zero_run + 1; }
};

// The first `count` members in lexicographic order of s. Throws
// CapacityError when count > sigma^(m-1), InputError for m < 1 or sigma < 2.
TmFamily build_tm(std::size_t m, int sigma, std::size_t count);

// Every member. Throws CapacityError when sigma^m exceeds 2^22.
TmFamily tm_full_family(std::size_t m, int sigma);

// sigma^(m-1), saturating at SIZE_MAX.
std::size_t tm_guaranteed_size(std::size_t m, int sigma);

// True iff no member occurs in tau1 . tau2 for distinct members tau1, tau2
// other than itself.
bool verify_non_containment(const std::vector<Symbols>& members);

}  // namespace smlab::learning

#endif  // SMLAB_LEARNING_TM_HPP_

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

#ifndef SMLAB_COMM_REDUCTIONS_HPP_
#define SMLAB_COMM_REDUCTIONS_HPP_

#include <cstddef>
#include <span>

#include "smlab/comm/harness.hpp"

namespace smlab::comm {

// An SM instance produced by a reduction, with the induced bipartition.
struct ReducedInstance {
  Symbols x;
  Symbols y;
  Bipartition owner;  // over x then y

  TwoPartyInput input() const { return TwoPartyInput(x, y, owner); }
};

// DISJ(a, b) = OR_i (a_i AND b_i).
bool disj(std::span<const Symbol> a, std::span<const Symbol> b);

// x = a_1 b_1 1^(k-2) 0  a_2 b_2 1^(k-2) 0 ..., y = 1^k. Alice owns the a
// slots and every fixed coordinate, Bob the b slots. Requires k >= 2.
ReducedInstance reduce_disj_to_sm(std::span<const Symbol> a,
                                  std::span<const Symbol> b, std::size_t k);

// OR_i [a_i >= b_i] over [1, k]^m.
bool or_gt(std::span<const int> a, std::span<const int> b);

// Per block, 4k interleaved coordinates: Bob owns positions 0, 2, ... and
// writes 0^b 1^(2k-b); Alice owns 1, 3, ... and writes 1^(k+a) 0^(k-a). The
// longest 1-run in a block is 2(k+a-b+1). A fixed 1 owned by Alice closes
// each block so the run also reaches 2k+2 when a = b = k. Blocks are
// separated by two fixed 0s owned by Alice. y = 1^(2k+2).
ReducedInstance reduce_or_gt_to_sm(std::span<const int> a,
                                   std::span<const int> b, std::size_t k);

std::size_t longest_one_run(std::span<const Symbol> x);

}  // namespace smlab::comm

#endif  // SMLAB_COMM_REDUCTIONS_HPP_

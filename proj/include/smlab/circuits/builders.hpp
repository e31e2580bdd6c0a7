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

#ifndef SMLAB_CIRCUITS_BUILDERS_HPP_
#define SMLAB_CIRCUITS_BUILDERS_HPP_

#include <cstddef>
#include <cstdint>

#include "smlab/circuits/circuit.hpp"

namespace smlab::circuits {

// build_dnf refuses to materialize more gates than this.
inline constexpr std::uint64_t kDefaultGateBudget = std::uint64_t{1} << 26;

// Gate count and depth of a construction, computed by running the builder
// against a counting sink instead of materializing gates.
struct CircuitShape {
  std::uint64_t size = 0;
  std::size_t depth = 0;

  bool operator==(const CircuitShape&) const = default;
};

// Per window i: g_i fires iff the window, read as a binary number with its
// first bit least significant, is >= y; l_i iff it is <= y. Gate order g_0,
// l_0, g_1, l_1, ..., then an output LTF with unit weights firing iff at
// least n-k+2 of them do. Size 2n-2k+3, depth 2. Requires 1 <= k <= n.
Circuit build_threshold_depth2(std::size_t n, std::size_t k);
CircuitShape threshold_depth2_shape(std::size_t n, std::size_t k);

// For every window i and every a in {0,1}^k, an AND of the 2k literals
// x_{i+j} = a_j, y_j = a_j; then one OR. Size (n-k+1)2^k + 1, depth 2.
// Throws CapacityError when (n-k+1)2^k exceeds `budget`.
Circuit build_dnf(std::size_t n, std::size_t k,
                  std::uint64_t budget = kDefaultGateBudget);
CircuitShape dnf_shape(std::size_t n, std::size_t k);

// For every window i: 2k clauses (x_{i+j} OR !y_j), (!x_{i+j} OR y_j) under
// one AND; then one OR over windows. Size (n-k+1)(2k+1) + 1, depth 3.
Circuit build_depth3(std::size_t n, std::size_t k);
CircuitShape depth3_shape(std::size_t n, std::size_t k);

}  // namespace smlab::circuits

#endif  // SMLAB_CIRCUITS_BUILDERS_HPP_

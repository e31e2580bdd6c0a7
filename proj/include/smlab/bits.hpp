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

#ifndef SMLAB_BITS_HPP_
#define SMLAB_BITS_HPP_

#include <bit>
#include <cstdint>

namespace smlab {

// Smallest w with 2^w >= x; 0 for x <= 1.
constexpr unsigned ceil_log2(std::uint64_t x) {
  return x <= 1 ? 0U : static_cast<unsigned>(std::bit_width(x - 1));
}

// Bits needed to send one value drawn from a set of `count` values.
constexpr unsigned width_for(std::uint64_t count) { return ceil_log2(count); }

}  // namespace smlab

#endif  // SMLAB_BITS_HPP_

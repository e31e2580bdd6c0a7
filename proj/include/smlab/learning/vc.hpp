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

#ifndef SMLAB_LEARNING_VC_HPP_
#define SMLAB_LEARNING_VC_HPP_

#include <cstddef>
#include <vector>

#include "smlab/learning/hypothesis.hpp"

namespace smlab::learning {

inline constexpr std::size_t kMaxVcPool = 32;
inline constexpr std::size_t kMaxVcPatterns = 1'000'000;

// All sigma^n strings in lexicographic order.
std::vector<Symbols> all_strings(std::size_t n, int sigma);

// Largest subset of `pool` shattered by the class. Each pattern's occurrence
// signature over the pool is computed once; shattered subsets are then grown
// level by level, extending only sets all of whose subsets were shattered.
// Supports the at-most-k and exactly-k variants. Throws CapacityError for a
// pool over 32 strings or more than 10^6 patterns.
std::size_t vc_exact(const HypothesisClass& cls,
                     const std::vector<Symbols>& pool);

}  // namespace smlab::learning

#endif  // SMLAB_LEARNING_VC_HPP_

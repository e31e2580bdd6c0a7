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

#ifndef SMLAB_LEARNING_HYPOTHESIS_HPP_
#define SMLAB_LEARNING_HYPOTHESIS_HPP_

#include <cstddef>
#include <span>

#include "smlab/bigint.hpp"
#include "smlab/core/text.hpp"

namespace smlab::learning {

using core::Symbol;
using core::Symbols;

enum class Variant {
  kAtMostK,   // one pattern of length <= k (the empty pattern included)
  kExactlyK,  // one pattern of length exactly k
  kAnd,       // c patterns of length <= k, all must occur
  kOr,        // c patterns of length <= k, one must occur
};

struct HypothesisClass {
  int sigma = 2;
  std::size_t n = 0;
  std::size_t k = 0;
  Variant variant = Variant::kAtMostK;
  std::size_t c = 1;
};

// (sigma^(k+1) - 1) / (sigma - 1) for at-most-k, sigma^k for exactly-k.
// Throws InputError for the multi-pattern variants.
BigInt class_size(const HypothesisClass& h);

// Throws InputError unless `patterns` is a member of the class: the right
// count, admissible lengths, symbols below sigma.
void check_hypothesis(const HypothesisClass& h,
                      std::span<const Symbols> patterns);

// Containment per variant; validates the hypothesis first.
bool classify(const HypothesisClass& h, std::span<const Symbols> patterns,
              std::span<const Symbol> s);
// Single pattern: 1 iff s contains p.
bool classify(std::span<const Symbol> p, std::span<const Symbol> s);

// min(ceil(k log2 sigma), log2 n + 0.5 log2 log2 n + 2); the second term is
// dropped for n = 1 where it is undefined.
double vc_upper_bound(std::size_t n, std::size_t k, int sigma);

}  // namespace smlab::learning

#endif  // SMLAB_LEARNING_HYPOTHESIS_HPP_

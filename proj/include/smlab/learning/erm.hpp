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

#ifndef SMLAB_LEARNING_ERM_HPP_
#define SMLAB_LEARNING_ERM_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "smlab/core/text.hpp"

namespace smlab::learning {

using core::Symbol;
using core::Symbols;

struct Sample {
  Symbols text;
  bool label = false;
};

struct ErmResult {
  Symbols pattern;  // may be empty: the hypothesis that accepts everything
  std::size_t errors = 0;
  double loss = 0.0;  // errors / samples
};

// Number of samples the pattern misclassifies.
std::size_t empirical_errors(std::span<const Sample> samples,
                             std::span<const Symbol> pattern);

// Length of the fallback pattern: min(k, ceil(log_sigma(m * n)) + 1).
std::size_t fallback_length(std::size_t m, std::size_t n, std::size_t k,
                            int sigma);

// First string of the given length, in lexicographic order, absent from
// every sample text; none when every such string occurs.
std::optional<Symbols> absent_pattern(std::span<const Sample> samples,
                                      std::size_t length, int sigma);

// Minimizes empirical loss over the empty pattern, every distinct substring
// of length <= k of a sample text, and one fallback pattern absent from all
// samples. Ties go to the shorter, then lexicographically smaller pattern.
// Throws InputError on an empty sample or symbols outside the alphabet.
ErmResult erm_learn(std::span<const Sample> samples, std::size_t k,
                    int sigma);

}  // namespace smlab::learning

#endif  // SMLAB_LEARNING_ERM_HPP_

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

#include "smlab/learning/hypothesis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "smlab/core/oracle.hpp"
#include "smlab/error.hpp"

namespace smlab::learning {

BigInt class_size(const HypothesisClass& h) {
  if (h.sigma < 2) throw InputError("alphabet size must be at least 2");
  BigInt power = 1;
  for (std::size_t i = 0; i < h.k; ++i) power *= h.sigma;
  switch (h.variant) {
    case Variant::kAtMostK: return (power * h.sigma - 1) / (h.sigma - 1);
    case Variant::kExactlyK: return power;
    default: throw InputError("class size is defined for single patterns");
  }
}

void check_hypothesis(const HypothesisClass& h,
                      std::span<const Symbols> patterns) {
  const bool multi = h.variant == Variant::kAnd || h.variant == Variant::kOr;
  const std::size_t want = multi ? h.c : 1;
  if (patterns.size() != want) {
    throw InputError("hypothesis needs " + std::to_string(want) +
                     " pattern(s), got " + std::to_string(patterns.size()));
  }
  for (const Symbols& p : patterns) {
    if (h.variant == Variant::kExactlyK ? p.size() != h.k : p.size() > h.k) {
      throw InputError("pattern " + core::to_string(p) +
                       " has inadmissible length for k=" +
                       std::to_string(h.k));
    }
    for (Symbol s : p) {
      if (s >= h.sigma) throw InputError("pattern symbol outside alphabet");
    }
  }
}

bool classify(std::span<const Symbol> p, std::span<const Symbol> s) {
  return core::contains(s, p);
}

bool classify(const HypothesisClass& h, std::span<const Symbols> patterns,
              std::span<const Symbol> s) {
  check_hypothesis(h, patterns);
  auto occurs = [&](const Symbols& p) { return core::contains(s, p); };
  if (h.variant == Variant::kOr) {
    return std::any_of(patterns.begin(), patterns.end(), occurs);
  }
  return std::all_of(patterns.begin(), patterns.end(), occurs);
}

double vc_upper_bound(std::size_t n, std::size_t k, int sigma) {
  const double by_count = std::ceil(double(k) * std::log2(double(sigma)));
  if (n <= 1) return by_count;
  const double ln = std::log2(double(n));
  return std::min(by_count, std::floor(ln + 0.5 * std::log2(ln) + 2));
}

}  // namespace smlab::learning

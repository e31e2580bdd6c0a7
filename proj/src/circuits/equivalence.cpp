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

#include "smlab/circuits/equivalence.hpp"

#include <algorithm>

#include "smlab/core/oracle.hpp"
#include "smlab/error.hpp"

namespace smlab::circuits {
namespace {

constexpr std::size_t kMaxCounterexamples = 5;

}  // namespace

EquivalenceReport verify_equivalence(const Circuit& c, CheckMode mode,
                                     std::uint64_t trials, std::uint64_t seed,
                                     const std::string& label) {
  const std::size_t n = c.n();
  const std::size_t k = c.k();
  if (k == 0 || k > n) throw InputError("equivalence needs 1 <= k <= n");
  const std::size_t total = n + k;
  EquivalenceReport rep;
  ReportRow& s = rep.summary;
  s.n = n;
  s.k = k;
  s.protocol = label;
  s.mode = mode == CheckMode::kExhaustive ? "exhaustive" : "montecarlo";
  s.seed = seed;
  s.max_bits = c.size();
  s.mean_bits = static_cast<double>(c.size());
  const Evaluator ev(c);

  auto record = [&](std::span<const Symbol> x, std::span<const Symbol> y,
                    bool got) {
    ++s.trials;
    if (got == core::contains(x, y)) return;
    ++s.errors;
    if (rep.counterexamples.size() < kMaxCounterexamples) {
      rep.counterexamples.push_back("x=" + core::to_string(x) +
                                    " y=" + core::to_string(y));
    }
  };

  if (mode == CheckMode::kExhaustive) {
    if (total > kMaxExhaustiveCircuitBits) {
      throw CapacityError("exhaustive equivalence limited to n+k <= " +
                          std::to_string(kMaxExhaustiveCircuitBits));
    }
    const std::uint64_t xmask = (1ULL << n) - 1;
    for (std::uint64_t w = 0; w < (1ULL << total); ++w) {
      const bool got = ev.eval_word(w);
      if (got != core::sm_packed(w & xmask, n, w >> n, k)) {
        const Symbols bits = core::unpack_bits(w, total);
        record(std::span(bits).first(n), std::span(bits).subspan(n), got);
      } else {
        ++s.trials;
      }
    }
    return rep;
  }

  Rng rng(seed);
  Symbols bits(total);
  for (std::uint64_t t = 0; t < trials; ++t) {
    for (auto& b : bits) b = rng.coin();
    if (rng.coin()) {
      const std::size_t at = rng.below(n - k + 1);
      std::copy(bits.begin() + n, bits.end(), bits.begin() + at);
    }
    record(std::span(bits).first(n), std::span(bits).subspan(n), ev(bits));
  }
  return rep;
}

}  // namespace smlab::circuits

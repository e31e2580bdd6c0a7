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

#ifndef SMLAB_CIRCUITS_EQUIVALENCE_HPP_
#define SMLAB_CIRCUITS_EQUIVALENCE_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "smlab/circuits/circuit.hpp"
#include "smlab/report.hpp"
#include "smlab/rng.hpp"

namespace smlab::circuits {

enum class CheckMode { kExhaustive, kMonteCarlo };

// Exhaustive checks enumerate all of {0,1}^(n+k).
inline constexpr std::size_t kMaxExhaustiveCircuitBits = 24;

struct EquivalenceReport {
  ReportRow summary;  // trials = inputs checked, errors = mismatches
  std::vector<std::string> counterexamples;  // "x=... y=...", first few
};

// Compares the circuit with sm_oracle. Monte Carlo inputs plant y in x with
// probability 1/2. Throws CapacityError when an exhaustive check would
// exceed 2^24 inputs, InputError when k is 0 or exceeds n.
EquivalenceReport verify_equivalence(const Circuit& c, CheckMode mode,
                                     std::uint64_t trials = 100000,
                                     std::uint64_t seed = kDefaultSeed,
                                     const std::string& label = "circuit");

}  // namespace smlab::circuits

#endif  // SMLAB_CIRCUITS_EQUIVALENCE_HPP_

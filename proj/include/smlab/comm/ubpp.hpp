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

#ifndef SMLAB_COMM_UBPP_HPP_
#define SMLAB_COMM_UBPP_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "smlab/comm/equality.hpp"
#include "smlab/comm/harness.hpp"

namespace smlab::comm {

// Unambiguous randomized protocols: a guessed witness (witness_bits) followed
// by a randomized verification (comm_bits). In exact mode verification uses
// zero-error equality. Otherwise a witness counts as accepted when at least
// half of `trials` independently seeded verifications accept.
struct UbppOptions {
  EqualityConfig equality;
  std::uint64_t seed = kDefaultSeed;
  unsigned trials = 200;
  // Permit ubpp_sm_large below k >= 0.9n; unambiguity is then not promised.
  bool allow_small_k = false;
};

struct WitnessCheck {
  bool accepted = false;
  ProtocolRun run;
};

struct UbppResult {
  std::vector<std::size_t> accepted;  // ascending witnesses
  ProtocolRun run;  // verification of the first accepted witness, if any
  std::size_t witness_space = 0;
};

// Period finding on x (the y part of `in` is ignored). Witness w in
// [1, floor(n/2)], sent in ceil(log2 n) bits. Verification tests that w is a
// period order and that no w/p, p a prime divisor of w, is one.
WitnessCheck ubpp_period_verify(const TwoPartyInput& in, std::size_t witness,
                                const EqualityConfig& equality,
                                const RandomSource& coins);
UbppResult ubpp_period_finding(const TwoPartyInput& in,
                               const UbppOptions& options = {});

// The unique accepted witness, i.e. the primitive order, if any.
std::optional<std::size_t> accepted_order(const UbppResult& result);

// SM for k >= 0.9n. Witness i in [0, n), sent in ceil(log2 n) bits.
// Verification finds the primitive period l of y (randomized scan over
// candidate orders), then checks an occurrence at i and, when l exists, no
// occurrence at i - l. Throws ParameterError for 10k < 9n unless
// allow_small_k is set.
WitnessCheck ubpp_sm_verify(const TwoPartyInput& in, std::size_t witness,
                            const EqualityConfig& equality,
                            const RandomSource& coins);
UbppResult ubpp_sm_large(const TwoPartyInput& in,
                         const UbppOptions& options = {});

}  // namespace smlab::comm

#endif  // SMLAB_COMM_UBPP_HPP_

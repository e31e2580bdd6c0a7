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

#ifndef SMLAB_COMM_VERIFY_HPP_
#define SMLAB_COMM_VERIFY_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "smlab/report.hpp"
#include "smlab/rng.hpp"

namespace smlab::comm {

enum class ProtocolId { kFixedPattern, kSmallK, kLargeK, kUbppPeriod, kUbppSm };
enum class VerifyMode { kExhaustive, kMonteCarlo };

std::string_view protocol_name(ProtocolId id);
ProtocolId parse_protocol(std::string_view name);
std::string_view mode_name(VerifyMode mode);
VerifyMode parse_mode(std::string_view name);

// Exhaustive verification enumerates all of {0,1}^(n+k).
inline constexpr std::size_t kMaxExhaustiveProtocolBits = 20;

struct VerifyConfig {
  ProtocolId protocol = ProtocolId::kSmallK;
  std::size_t n = 8;
  std::size_t k = 2;
  VerifyMode mode = VerifyMode::kExhaustive;
  std::uint64_t trials = 1000;  // Monte Carlo inputs
  std::uint64_t seed = kDefaultSeed;
  bool exact = false;  // zero-error equality inside randomized protocols
  std::optional<std::size_t> block;
  // Exhaustive mode: canonical, interleaved, then random bipartitions.
  std::size_t bipartitions = 3;
  unsigned ubpp_trials = 200;
};

struct VerificationReport {
  ReportRow summary;
  // Inputs on which the protocol disagreed with the oracle (first few).
  std::vector<std::string> counterexamples;
};

// Runs the protocol against sm_oracle (or, for the UBPP protocols, checks
// that the number of accepted witnesses equals the oracle value). Throws
// CapacityError when exhaustive mode would exceed 2^20 inputs.
VerificationReport verify_protocol(const VerifyConfig& config);

// Pattern length used when none is given: floor(sqrt n) for fixed-pattern and
// small-k, n/2 for large-k, ceil(0.9n) for ubpp-sm, 0 for ubpp-period.
std::size_t default_k(ProtocolId protocol, std::size_t n);

// One summary row per n in `sizes`, other settings from `config`. When
// config.k is 0 each row uses default_k.
std::vector<ReportRow> cost_table(const VerifyConfig& config,
                                  const std::vector<std::size_t>& sizes);

}  // namespace smlab::comm

#endif  // SMLAB_COMM_VERIFY_HPP_

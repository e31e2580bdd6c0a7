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

#include "smlab/comm/verify.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "smlab/comm/harness.hpp"
#include "smlab/comm/protocols.hpp"
#include "smlab/comm/ubpp.hpp"
#include "smlab/core/oracle.hpp"
#include "smlab/core/periods.hpp"
#include "smlab/error.hpp"

namespace smlab::comm {
namespace {

constexpr std::size_t kMaxCounterexamples = 5;

struct Outcome {
  bool correct;
  std::uint64_t bits;
};

Outcome run_once(const VerifyConfig& cfg, const TwoPartyInput& in,
                 std::uint64_t seed) {
  const EqualityConfig eq{cfg.exact ? EqualityMode::kExact
                                    : EqualityMode::kFingerprint,
                          kDefaultFieldPrime};
  const RandomSource coins{seed, CoinMode::kPrivate};
  const bool expected =
      in.k() == 0 || core::contains(in.x(), in.y());
  switch (cfg.protocol) {
    case ProtocolId::kFixedPattern: {
      const ProtocolRun r = protocol_fixed_pattern(in, in.y(), coins);
      return {r.output == expected, r.cost()};
    }
    case ProtocolId::kSmallK: {
      const ProtocolRun r = protocol_small_k(in, coins);
      return {r.output == expected, r.cost()};
    }
    case ProtocolId::kLargeK: {
      const ProtocolRun r =
          protocol_large_k(in, LargeKOptions{cfg.block, eq, coins});
      return {r.output == expected, r.cost()};
    }
    case ProtocolId::kUbppPeriod: {
      const UbppResult r = ubpp_period_finding(
          in, UbppOptions{eq, seed, cfg.ubpp_trials, false});
      const auto order = core::primitive_order(in.x());
      const bool ok = order ? (r.accepted.size() == 1 && r.accepted[0] == *order)
                            : r.accepted.empty();
      return {ok, r.run.cost()};
    }
    case ProtocolId::kUbppSm: {
      const UbppResult r =
          ubpp_sm_large(in, UbppOptions{eq, seed, cfg.ubpp_trials, false});
      bool ok = r.accepted.size() == (expected ? 1U : 0U);
      for (std::size_t w : r.accepted) {
        ok = ok && core::find_first(in.x(), in.y(), w) ==
                       static_cast<std::ptrdiff_t>(w);
      }
      return {ok, r.run.cost()};
    }
  }
  return {false, 0};
}

std::string describe(const TwoPartyInput& in) {
  return "x=" + core::to_string(in.x()) + " y=" + core::to_string(in.y()) +
         " owner=" + in.owner().str();
}

class Tally {
 public:
  explicit Tally(VerificationReport& rep) : rep_(&rep) {}

  void add(const TwoPartyInput& in, Outcome o) {
    ReportRow& s = rep_->summary;
    ++s.trials;
    s.max_bits = std::max(s.max_bits, o.bits);
    total_bits_ += static_cast<double>(o.bits);
    if (!o.correct) {
      ++s.errors;
      if (rep_->counterexamples.size() < kMaxCounterexamples) {
        rep_->counterexamples.push_back(describe(in));
      }
    }
  }

  void finish() {
    ReportRow& s = rep_->summary;
    s.mean_bits = s.trials ? total_bits_ / static_cast<double>(s.trials) : 0;
  }

 private:
  VerificationReport* rep_;
  double total_bits_ = 0;
};

std::size_t pattern_length(const VerifyConfig& cfg) {
  return cfg.protocol == ProtocolId::kUbppPeriod ? 0 : cfg.k;
}

}  // namespace

std::string_view protocol_name(ProtocolId id) {
  switch (id) {
    case ProtocolId::kFixedPattern: return "fixed-pattern";
    case ProtocolId::kSmallK: return "small-k";
    case ProtocolId::kLargeK: return "large-k";
    case ProtocolId::kUbppPeriod: return "ubpp-period";
    case ProtocolId::kUbppSm: return "ubpp-sm";
  }
  return "?";
}

ProtocolId parse_protocol(std::string_view name) {
  for (ProtocolId id :
       {ProtocolId::kFixedPattern, ProtocolId::kSmallK, ProtocolId::kLargeK,
        ProtocolId::kUbppPeriod, ProtocolId::kUbppSm}) {
    if (protocol_name(id) == name) return id;
  }
  throw InputError("unknown protocol '" + std::string(name) + "'");
}

std::string_view mode_name(VerifyMode mode) {
  return mode == VerifyMode::kExhaustive ? "exhaustive" : "montecarlo";
}

VerifyMode parse_mode(std::string_view name) {
  if (name == "exhaustive") return VerifyMode::kExhaustive;
  if (name == "montecarlo" || name == "monte-carlo") {
    return VerifyMode::kMonteCarlo;
  }
  throw InputError("unknown mode '" + std::string(name) +
                   "' (exhaustive or montecarlo)");
}

VerificationReport verify_protocol(const VerifyConfig& cfg) {
  const std::size_t n = cfg.n;
  const std::size_t k = pattern_length(cfg);
  if (n == 0) throw InputError("text length must be positive");
  if (k > n) throw InputError("pattern longer than text");
  VerificationReport rep;
  rep.summary.n = n;
  rep.summary.k = k;
  rep.summary.protocol = std::string(protocol_name(cfg.protocol));
  rep.summary.mode = std::string(mode_name(cfg.mode));
  rep.summary.seed = cfg.seed;
  Tally tally(rep);
  Rng rng(cfg.seed);

  if (cfg.mode == VerifyMode::kExhaustive) {
    const std::size_t total = n + k;
    if (total > kMaxExhaustiveProtocolBits) {
      throw CapacityError("exhaustive verification limited to n+k <= " +
                          std::to_string(kMaxExhaustiveProtocolBits));
    }
    for (std::size_t bi = 0; bi < cfg.bipartitions; ++bi) {
      const Bipartition owner =
          bi == 0   ? Bipartition::canonical(n, k)
          : bi == 1 ? Bipartition::interleaved(total)
                    : Bipartition::random(total, rng);
      for (std::uint64_t word = 0; word < (1ULL << total); ++word) {
        const Symbols bits = core::unpack_bits(word, total);
        const TwoPartyInput in(Symbols(bits.begin(), bits.begin() + n),
                               Symbols(bits.begin() + n, bits.end()), owner);
        tally.add(in, run_once(cfg, in, cfg.seed + word));
      }
    }
  } else {
    for (std::uint64_t t = 0; t < cfg.trials; ++t) {
      Symbols x(n), y(k);
      for (auto& b : x) b = rng.coin();
      for (auto& b : y) b = rng.coin();
      if (k > 0 && rng.coin()) {
        const std::size_t at = rng.below(n - k + 1);
        std::copy(y.begin(), y.end(), x.begin() + at);
      }
      const TwoPartyInput in(std::move(x), std::move(y),
                             Bipartition::random(n + k, rng));
      tally.add(in, run_once(cfg, in, cfg.seed + t));
    }
  }
  tally.finish();
  return rep;
}

std::size_t default_k(ProtocolId protocol, std::size_t n) {
  const auto root = static_cast<std::size_t>(std::sqrt(double(n)));
  switch (protocol) {
    case ProtocolId::kFixedPattern:
    case ProtocolId::kSmallK: return std::max<std::size_t>(1, root);
    case ProtocolId::kLargeK: return n / 2;
    case ProtocolId::kUbppSm: return (9 * n + 9) / 10;
    case ProtocolId::kUbppPeriod: return 0;
  }
  return 0;
}

std::vector<ReportRow> cost_table(const VerifyConfig& config,
                                  const std::vector<std::size_t>& sizes) {
  std::vector<ReportRow> rows;
  for (std::size_t n : sizes) {
    VerifyConfig cfg = config;
    cfg.n = n;
    if (config.k == 0) cfg.k = default_k(cfg.protocol, n);
    rows.push_back(verify_protocol(cfg).summary);
  }
  return rows;
}

}  // namespace smlab::comm

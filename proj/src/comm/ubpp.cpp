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

#include "smlab/comm/ubpp.hpp"

#include <string>

#include "smlab/bits.hpp"
#include "smlab/error.hpp"

namespace smlab::comm {
namespace {

std::vector<std::size_t> prime_divisors(std::size_t w) {
  std::vector<std::size_t> out;
  for (std::size_t p = 2; p * p <= w; ++p) {
    if (w % p != 0) continue;
    out.push_back(p);
    while (w % p == 0) w /= p;
  }
  if (w > 1) out.push_back(w);
  return out;
}

// Equality test on two input segments followed by Bob's verdict bit.
bool announced_equal(const TwoPartyInput& in, std::size_t u, std::size_t v,
                     std::size_t len, const EqualityConfig& eq, Coins& coins,
                     Channel& ch) {
  const bool equal = equality_subprotocol(in, Segment::input(u),
                                          Segment::input(v), len, eq, coins,
                                          ch);
  ch.send(Party::kBob, Tag::kVerdict, equal ? 1 : 0, 1);
  return equal;
}

template <typename Verify>
UbppResult enumerate_witnesses(std::size_t first, std::size_t last,
                               const UbppOptions& options, Verify verify) {
  UbppResult result;
  result.witness_space = last >= first ? last - first + 1 : 0;
  const bool exact = options.equality.mode == EqualityMode::kExact;
  const unsigned trials = exact ? 1 : std::max(1U, options.trials);
  for (std::size_t w = first; w <= last; ++w) {
    unsigned yes = 0;
    unsigned no = 0;
    std::optional<ProtocolRun> first_run;
    // Stop once the majority is decided.
    for (unsigned t = 0; t < trials && 2 * yes < trials &&
                         2 * (trials - no) >= trials;
         ++t) {
      WitnessCheck c = verify(w, RandomSource{options.seed + t,
                                              CoinMode::kPrivate});
      (c.accepted ? yes : no) += 1;
      if (!first_run) first_run = std::move(c.run);
    }
    if (2 * yes >= trials) {
      if (result.accepted.empty()) result.run = std::move(*first_run);
      result.accepted.push_back(w);
    }
  }
  return result;
}

}  // namespace

WitnessCheck ubpp_period_verify(const TwoPartyInput& in, std::size_t witness,
                                const EqualityConfig& equality,
                                const RandomSource& coins) {
  const std::size_t n = in.n();
  WitnessCheck out;
  out.run.seed = coins.seed;
  out.run.witness_bits = ceil_log2(n);
  if (witness < 1 || witness > n / 2) return out;
  Channel ch(out.run);
  Coins c(coins);
  auto is_order = [&](std::size_t order) {
    return announced_equal(in, in.x_coord(order), in.x_coord(0), n - order,
                           equality, c, ch);
  };
  if (!is_order(witness)) return out;
  for (std::size_t p : prime_divisors(witness)) {
    if (is_order(witness / p)) return out;
  }
  out.accepted = out.run.output = true;
  return out;
}

UbppResult ubpp_period_finding(const TwoPartyInput& in,
                               const UbppOptions& options) {
  return enumerate_witnesses(
      1, in.n() / 2, options, [&](std::size_t w, const RandomSource& rs) {
        return ubpp_period_verify(in, w, options.equality, rs);
      });
}

std::optional<std::size_t> accepted_order(const UbppResult& result) {
  if (result.accepted.size() != 1) return std::nullopt;
  return result.accepted.front();
}

WitnessCheck ubpp_sm_verify(const TwoPartyInput& in, std::size_t witness,
                            const EqualityConfig& equality,
                            const RandomSource& coins) {
  const std::size_t n = in.n();
  const std::size_t k = in.k();
  WitnessCheck out;
  out.run.seed = coins.seed;
  out.run.witness_bits = ceil_log2(n);
  if (k == 0 || witness + k > n) return out;
  Channel ch(out.run);
  Coins c(coins);
  if (!announced_equal(in, in.x_coord(witness), in.y_coord(0), k, equality, c,
                       ch)) {
    return out;
  }
  // Primitive period of y by a scan over candidate orders; only orders up to
  // the witness matter for the earlier-occurrence check.
  const std::size_t limit = std::min(k / 2, witness);
  for (std::size_t order = 1; order <= limit; ++order) {
    if (announced_equal(in, in.y_coord(order), in.y_coord(0), k - order,
                        equality, c, ch)) {
      if (announced_equal(in, in.x_coord(witness - order), in.y_coord(0), k,
                          equality, c, ch)) {
        return out;
      }
      break;
    }
  }
  out.accepted = out.run.output = true;
  return out;
}

UbppResult ubpp_sm_large(const TwoPartyInput& in, const UbppOptions& options) {
  const std::size_t n = in.n();
  const std::size_t k = in.k();
  if (k == 0 || k > n) {
    throw InputError("ubpp_sm_large needs 1 <= k <= n");
  }
  if (10 * k < 9 * n && !options.allow_small_k) {
    throw ParameterError("ubpp_sm_large needs k >= 0.9n (n=" +
                         std::to_string(n) + ", k=" + std::to_string(k) + ")");
  }
  return enumerate_witnesses(
      0, n - 1, options, [&](std::size_t w, const RandomSource& rs) {
        return ubpp_sm_verify(in, w, options.equality, rs);
      });
}

}  // namespace smlab::comm

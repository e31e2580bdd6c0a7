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

#include "smlab/comm/protocols.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "smlab/bits.hpp"
#include "smlab/core/periods.hpp"
#include "smlab/error.hpp"

namespace smlab::comm {
namespace {

void check_lengths(const TwoPartyInput& in, std::size_t k) {
  if (k > in.n()) {
    throw InputError("pattern length " + std::to_string(k) +
                     " exceeds text length " + std::to_string(in.n()));
  }
}

// Does Alice's view of x agree with `pattern` placed at `start`?
bool alice_consistent(const PartyView& alice, std::size_t start,
                      std::span<const Symbol> pattern) {
  for (std::size_t j = 0; j < pattern.size(); ++j) {
    const std::size_t c = start + j;
    if (alice.owns(c) && alice.bit(c) != pattern[j]) return false;
  }
  return true;
}

struct StartRange {
  std::size_t first;
  std::size_t last;
};

// Smallest and largest start in [lo, hi] consistent with Alice's bits.
std::optional<StartRange> alice_range(const PartyView& alice, std::size_t lo,
                                      std::size_t hi,
                                      std::span<const Symbol> pattern) {
  std::optional<StartRange> r;
  for (std::size_t s = lo; s <= hi; ++s) {
    if (!alice_consistent(alice, s, pattern)) continue;
    if (!r) r = StartRange{s, s};
    r->last = s;
  }
  return r;
}

// Bob's copy of x over [first, last + |pattern|): his own bits plus Alice's
// bits recovered from her consistency with the pattern at both ends.
Symbols bob_window(const PartyView& bob, StartRange range,
                   std::span<const Symbol> pattern) {
  const std::size_t len = range.last - range.first + pattern.size();
  Symbols w(len);
  for (std::size_t j = 0; j < len; ++j) {
    const std::size_t c = range.first + j;
    if (bob.owns(c)) {
      w[j] = bob.bit(c);
    } else if (j < pattern.size()) {
      w[j] = pattern[j];
    } else {
      w[j] = pattern[c - range.last];
    }
  }
  return w;
}

bool occurs_at(std::span<const Symbol> w, std::size_t off,
               std::span<const Symbol> pattern) {
  return std::equal(pattern.begin(), pattern.end(), w.begin() + off);
}

bool run_fixed_pattern(const TwoPartyInput& in, std::span<const Symbol> y,
                       Channel& ch) {
  const std::size_t k = y.size();
  if (k == 0) return true;
  const std::size_t n = in.n();
  const PartyView alice = in.view(Party::kAlice);
  const PartyView bob = in.view(Party::kBob);
  const unsigned width = ceil_log2(k + 2);
  const std::uint64_t none = k + 1;
  const std::size_t last_start = n - k;
  for (std::size_t lo = 0; lo <= last_start; lo += k) {
    const std::size_t hi = std::min(lo + k - 1, last_start);
    const auto range = alice_range(alice, lo, hi, y);
    ch.send(Party::kAlice, Tag::kIndices, range ? range->first - lo : none,
            width);
    ch.send(Party::kAlice, Tag::kIndices, range ? range->last - lo : none,
            width);
    if (!range) continue;
    const Symbols w = bob_window(bob, *range, y);
    bool hit = false;
    for (std::size_t s = 0; s + k <= w.size() && !hit; ++s) {
      hit = occurs_at(w, s, y);
    }
    ch.send(Party::kBob, Tag::kVerdict, hit ? 1 : 0, 1);
    if (hit) return true;
  }
  return false;
}

// Each party publishes its own bits of y[from, to), Alice first.
Symbols publish_pattern_bits(const TwoPartyInput& in, std::size_t from,
                             std::size_t to, Channel& ch) {
  Symbols out(to - from);
  for (Party p : {Party::kAlice, Party::kBob}) {
    const PartyView v = in.view(p);
    Symbols mine;
    for (std::size_t j = from; j < to; ++j) {
      const std::size_t c = in.y_coord(j);
      if (v.owns(c)) {
        mine.push_back(v.bit(c));
        out[j - from] = mine.back();
      }
    }
    ch.send_bits(p, Tag::kPatternBits, mine);
  }
  return out;
}

// Largest m <= cap such that the party's bits of y[0, m*len) agree with the
// periodic extension of `period`.
std::size_t consistent_repetitions(const TwoPartyInput& in, const PartyView& v,
                                   std::span<const Symbol> period,
                                   std::size_t cap) {
  const std::size_t len = period.size();
  for (std::size_t m = 0; m < cap; ++m) {
    for (std::size_t j = m * len; j < (m + 1) * len; ++j) {
      const std::size_t c = in.y_coord(j);
      if (v.owns(c) && v.bit(c) != period[j % len]) return m;
    }
  }
  return cap;
}

bool tail_agrees(const TwoPartyInput& in, const PartyView& v,
                 std::span<const Symbol> period, std::size_t from) {
  for (std::size_t j = from; j < in.k(); ++j) {
    const std::size_t c = in.y_coord(j);
    if (v.owns(c) && v.bit(c) != period[j % period.size()]) return false;
  }
  return true;
}

}  // namespace

ProtocolRun protocol_fixed_pattern(const TwoPartyInput& in,
                                   std::span<const Symbol> y,
                                   const RandomSource& coins) {
  check_lengths(in, y.size());
  ProtocolRun run;
  run.seed = coins.seed;
  Channel ch(run);
  run.output = run_fixed_pattern(in, y, ch);
  return run;
}

ProtocolRun protocol_small_k(const TwoPartyInput& in,
                             const RandomSource& coins) {
  check_lengths(in, in.k());
  ProtocolRun run;
  run.seed = coins.seed;
  Channel ch(run);
  const Symbols y = publish_pattern_bits(in, 0, in.k(), ch);
  run.output = run_fixed_pattern(in, y, ch);
  return run;
}

std::size_t default_block(std::size_t n) {
  std::size_t b = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
  while (b * b < n) ++b;
  while (b > 1 && (b - 1) * (b - 1) >= n) --b;
  return std::max<std::size_t>(b, 1);
}

ProtocolRun protocol_large_k(const TwoPartyInput& in,
                             const LargeKOptions& options) {
  const std::size_t n = in.n();
  const std::size_t k = in.k();
  check_lengths(in, k);
  const std::size_t b = options.block.value_or(default_block(n));
  if (b == 0 || k < 2 * b) {
    throw ParameterError("large-k protocol needs k >= 2b (k=" +
                         std::to_string(k) + ", b=" + std::to_string(b) + ")");
  }
  ProtocolRun run;
  run.seed = options.coins.seed;
  Channel ch(run);
  Coins coins(options.coins);
  const PartyView alice = in.view(Party::kAlice);
  const PartyView bob = in.view(Party::kBob);

  Symbols prefix = publish_pattern_bits(in, 0, 2 * b, ch);
  run.path = kPathAperiodic;
  if (const auto order = core::shortest_period_up_to(prefix, b)) {
    const Symbols period(prefix.begin(), prefix.begin() + *order);
    const std::size_t cap = k / *order;
    const unsigned width = ceil_log2(cap + 1);
    const std::size_t m_a = ch.send(
        Party::kAlice, Tag::kRepetition,
        consistent_repetitions(in, alice, period, cap), width);
    const std::size_t m_b = ch.send(
        Party::kBob, Tag::kRepetition,
        consistent_repetitions(in, bob, period, cap), width);
    const std::size_t m = std::min(m_a, m_b);
    const std::size_t tail = m * *order;
    const bool tail_a = ch.send(Party::kAlice, Tag::kTailCheck,
                                tail_agrees(in, alice, period, tail), 1) != 0;
    const bool tail_b = ch.send(Party::kBob, Tag::kTailCheck,
                                tail_agrees(in, bob, period, tail), 1) != 0;
    if (tail_a && tail_b) {
      Symbols y(k);
      for (std::size_t j = 0; j < k; ++j) y[j] = period[j % *order];
      run.path = kPathPeriodicFull;
      run.output = run_fixed_pattern(in, y, ch);
      return run;
    }
    const std::size_t end = std::min(k, tail + *order);
    const Symbols block = publish_pattern_bits(in, tail, end, ch);
    std::size_t t = 0;
    while (block[t] == period[(tail + t) % *order]) ++t;
    prefix.clear();
    for (std::size_t j = 0; j < tail; ++j) prefix.push_back(period[j % *order]);
    prefix.insert(prefix.end(), block.begin(), block.begin() + t + 1);
    run.path = kPathPeriodicDeviating;
  }

  // The prefix has no period of order <= b, so each block of b starts holds
  // at most one occurrence of it.
  const std::size_t plen = prefix.size();
  const unsigned index_width = ceil_log2(b + 2);
  const unsigned candidate_width = ceil_log2(b + 1);
  const std::size_t last_start = n - k;
  for (std::size_t lo = 0; lo <= last_start; lo += b) {
    const std::size_t hi = std::min(lo + b - 1, last_start);
    const auto range = alice_range(alice, lo, hi, prefix);
    ch.send(Party::kAlice, Tag::kIndices, range ? range->first - lo : b + 1,
            index_width);
    ch.send(Party::kAlice, Tag::kIndices, range ? range->last - lo : b + 1,
            index_width);
    if (!range) continue;
    const Symbols w = bob_window(bob, *range, prefix);
    std::optional<std::size_t> candidate;
    for (std::size_t s = 0; s + plen <= w.size(); ++s) {
      if (occurs_at(w, s, prefix)) {
        candidate = range->first + s;
        break;
      }
    }
    ch.send(Party::kBob, Tag::kCandidate, candidate ? *candidate - lo : b,
            candidate_width);
    if (!candidate) continue;
    const bool equal = equality_subprotocol(
        in, Segment::input(in.x_coord(*candidate)),
        Segment::input(in.y_coord(0)), k, options.equality, coins, ch);
    ch.send(Party::kBob, Tag::kVerdict, equal ? 1 : 0, 1);
    if (equal) {
      run.output = true;
      return run;
    }
  }
  run.output = false;
  return run;
}

}  // namespace smlab::comm

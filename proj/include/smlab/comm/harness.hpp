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

#ifndef SMLAB_COMM_HARNESS_HPP_
#define SMLAB_COMM_HARNESS_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "smlab/core/text.hpp"
#include "smlab/rng.hpp"

namespace smlab::comm {

using core::Symbol;
using core::Symbols;

enum class Party : std::uint8_t { kAlice = 0, kBob = 1 };

constexpr Party other(Party p) {
  return p == Party::kAlice ? Party::kBob : Party::kAlice;
}
std::string_view party_name(Party p);

// Owner of every coordinate of the concatenated input (x then y).
class Bipartition {
 public:
  explicit Bipartition(std::vector<Party> owner) : owner_(std::move(owner)) {}

  // Alice holds x, Bob holds y.
  static Bipartition canonical(std::size_t n, std::size_t k);
  // Alice holds even coordinates, Bob odd ones.
  static Bipartition interleaved(std::size_t total);
  static Bipartition uniform(std::size_t total, Party p);
  static Bipartition random(std::size_t total, Rng& rng);

  std::size_t size() const { return owner_.size(); }
  Party operator[](std::size_t coord) const { return owner_[coord]; }
  std::string str() const;  // "AABAB..."

  bool operator==(const Bipartition&) const = default;

 private:
  std::vector<Party> owner_;
};

class PartyView;

// Binary input (x, y) split between two parties. Coordinate i < n is x_i,
// coordinate n + j is y_j. k may be 0 for single-string problems.
class TwoPartyInput {
 public:
  TwoPartyInput(Symbols x, Symbols y, Bipartition owner);

  std::size_t n() const { return n_; }
  std::size_t k() const { return bits_.size() - n_; }
  std::size_t total() const { return bits_.size(); }
  std::size_t x_coord(std::size_t i) const { return i; }
  std::size_t y_coord(std::size_t j) const { return n_ + j; }

  const Bipartition& owner() const { return owner_; }
  PartyView view(Party p) const;

  // Unrestricted access, reserved for harness bookkeeping and oracles.
  std::span<const Symbol> x() const { return {bits_.data(), n_}; }
  std::span<const Symbol> y() const { return {bits_.data() + n_, k()}; }
  Symbol raw(std::size_t coord) const { return bits_[coord]; }

 private:
  Symbols bits_;
  std::size_t n_;
  Bipartition owner_;
};

// One party's knowledge: it may read only coordinates it owns.
class PartyView {
 public:
  PartyView(const TwoPartyInput& input, Party who) : in_(&input), who_(who) {}

  Party who() const { return who_; }
  bool owns(std::size_t coord) const { return in_->owner()[coord] == who_; }
  Symbol bit(std::size_t coord) const;
  const TwoPartyInput& shape() const { return *in_; }

 private:
  const TwoPartyInput* in_;
  Party who_;
};

enum class Tag : std::uint8_t {
  kPatternBits,   // exchange of owned pattern bits
  kIndices,       // min/max consistent start offsets
  kCandidate,     // unique candidate start found by Bob
  kVerdict,       // one-bit decision announcement
  kFingerprint,   // evaluation point or partial sum
  kExactBits,     // raw coordinates for zero-error equality
  kRepetition,    // consistent power count of the primitive period
  kTailCheck,     // "my bits agree with the periodic extension"
};
std::string_view tag_name(Tag t);

struct Message {
  Party sender;
  Tag tag;
  std::uint16_t width;
  std::uint32_t round;  // increments whenever the sender changes
  std::uint64_t value;

  bool operator==(const Message&) const = default;
};

struct ProtocolRun {
  std::vector<Message> transcript;
  std::uint64_t comm_bits = 0;
  std::uint64_t witness_bits = 0;  // nondeterministic guess, not in comm_bits
  bool output = false;
  std::uint64_t seed = 0;
  std::string path;  // branch label for protocols with several cases

  std::uint64_t cost() const { return comm_bits + witness_bits; }
};

// Records every message of a run; the only way parties exchange data.
class Channel {
 public:
  explicit Channel(ProtocolRun& run) : run_(&run) {}

  // Sends value in [0, 2^width). width <= 64.
  std::uint64_t send(Party from, Tag tag, std::uint64_t value, unsigned width);
  // Sends one bit per symbol, split into messages of at most 64 bits.
  void send_bits(Party from, Tag tag, std::span<const Symbol> bits);

  ProtocolRun& run() { return *run_; }

 private:
  ProtocolRun* run_;
};

enum class CoinMode : std::uint8_t { kShared, kPrivate };

struct RandomSource {
  std::uint64_t seed = kDefaultSeed;
  CoinMode mode = CoinMode::kPrivate;
};

// Per-party random streams derived from a RandomSource.
class Coins {
 public:
  explicit Coins(const RandomSource& src);
  Rng& of(Party p);

 private:
  CoinMode mode_;
  Rng alice_;
  Rng bob_;
};

}  // namespace smlab::comm

#endif  // SMLAB_COMM_HARNESS_HPP_

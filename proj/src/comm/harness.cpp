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

#include "smlab/comm/harness.hpp"

#include <stdexcept>
#include <string>

#include "smlab/error.hpp"

namespace smlab::comm {

std::string_view party_name(Party p) {
  return p == Party::kAlice ? "alice" : "bob";
}

Bipartition Bipartition::canonical(std::size_t n, std::size_t k) {
  std::vector<Party> owner(n + k, Party::kAlice);
  for (std::size_t j = 0; j < k; ++j) owner[n + j] = Party::kBob;
  return Bipartition(std::move(owner));
}

Bipartition Bipartition::interleaved(std::size_t total) {
  std::vector<Party> owner(total);
  for (std::size_t i = 0; i < total; ++i) {
    owner[i] = i % 2 == 0 ? Party::kAlice : Party::kBob;
  }
  return Bipartition(std::move(owner));
}

Bipartition Bipartition::uniform(std::size_t total, Party p) {
  return Bipartition(std::vector<Party>(total, p));
}

Bipartition Bipartition::random(std::size_t total, Rng& rng) {
  std::vector<Party> owner(total);
  for (auto& o : owner) o = rng.coin() ? Party::kBob : Party::kAlice;
  return Bipartition(std::move(owner));
}

std::string Bipartition::str() const {
  std::string s;
  s.reserve(owner_.size());
  for (Party p : owner_) s += p == Party::kAlice ? 'A' : 'B';
  return s;
}

TwoPartyInput::TwoPartyInput(Symbols x, Symbols y, Bipartition owner)
    : bits_(std::move(x)), n_(bits_.size()), owner_(std::move(owner)) {
  bits_.insert(bits_.end(), y.begin(), y.end());
  if (owner_.size() != bits_.size()) {
    throw InputError("bipartition covers " + std::to_string(owner_.size()) +
                     " coordinates, input has " +
                     std::to_string(bits_.size()));
  }
  for (Symbol b : bits_) {
    if (b > 1) throw InputError("two-party inputs must be binary");
  }
}

PartyView TwoPartyInput::view(Party p) const { return PartyView(*this, p); }

Symbol PartyView::bit(std::size_t coord) const {
  if (!owns(coord)) {
    throw std::logic_error(std::string(party_name(who_)) +
                           " read coordinate " + std::to_string(coord) +
                           " it does not own");
  }
  return in_->raw(coord);
}

std::string_view tag_name(Tag t) {
  switch (t) {
    case Tag::kPatternBits: return "pattern-bits";
    case Tag::kIndices: return "indices";
    case Tag::kCandidate: return "candidate";
    case Tag::kVerdict: return "verdict";
    case Tag::kFingerprint: return "fingerprint";
    case Tag::kExactBits: return "exact-bits";
    case Tag::kRepetition: return "repetition";
    case Tag::kTailCheck: return "tail-check";
  }
  return "?";
}

std::uint64_t Channel::send(Party from, Tag tag, std::uint64_t value,
                            unsigned width) {
  if (width > 64 || (width < 64 && (value >> width) != 0)) {
    throw std::logic_error("message value does not fit its width");
  }
  auto& t = run_->transcript;
  std::uint32_t round = 0;
  if (!t.empty()) round = t.back().round + (t.back().sender != from ? 1 : 0);
  t.push_back(Message{from, tag, static_cast<std::uint16_t>(width), round,
                      value});
  run_->comm_bits += width;
  return value;
}

void Channel::send_bits(Party from, Tag tag, std::span<const Symbol> bits) {
  for (std::size_t start = 0; start < bits.size(); start += 64) {
    const std::size_t len = std::min<std::size_t>(64, bits.size() - start);
    std::uint64_t word = 0;
    for (std::size_t i = 0; i < len; ++i) {
      word |= static_cast<std::uint64_t>(bits[start + i] & 1U) << i;
    }
    send(from, tag, word, static_cast<unsigned>(len));
  }
}

Coins::Coins(const RandomSource& src)
    : mode_(src.mode),
      alice_(splitmix64(src.seed)),
      bob_(splitmix64(src.seed ^ 0xb0b0b0b0b0b0b0b0ULL)) {}

Rng& Coins::of(Party p) {
  if (mode_ == CoinMode::kShared || p == Party::kAlice) return alice_;
  return bob_;
}

}  // namespace smlab::comm

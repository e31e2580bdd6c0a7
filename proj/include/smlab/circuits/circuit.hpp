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

#ifndef SMLAB_CIRCUITS_CIRCUIT_HPP_
#define SMLAB_CIRCUITS_CIRCUIT_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "smlab/bigint.hpp"
#include "smlab/core/text.hpp"

namespace smlab::circuits {

using core::Symbol;
using core::Symbols;

enum class GateKind : std::uint8_t { kAnd, kOr, kNot, kLtf };

std::string_view kind_name(GateKind kind);  // "AND", "OR", "NOT", "LTF"
GateKind parse_kind(std::string_view s);

// A gate input: a text bit x_i, a pattern bit y_j (either possibly negated),
// or the output of an earlier gate.
struct Wire {
  enum class Source : std::uint8_t { kX, kY, kGate };

  Source source = Source::kX;
  bool negated = false;
  std::uint32_t index = 0;

  static Wire x(std::size_t i, bool negated = false) {
    return {Source::kX, negated, static_cast<std::uint32_t>(i)};
  }
  static Wire y(std::size_t j, bool negated = false) {
    return {Source::kY, negated, static_cast<std::uint32_t>(j)};
  }
  static Wire gate(std::size_t g) {
    return {Source::kGate, false, static_cast<std::uint32_t>(g)};
  }

  bool operator==(const Wire&) const = default;
};

std::string wire_token(const Wire& w);  // x3, !x3, y0, !y0, g5
Wire parse_wire(std::string_view token);

// LTF gates fire iff sum(weights[i] * input[i]) >= threshold. AND() is true
// and OR() is false.
struct Gate {
  GateKind kind = GateKind::kAnd;
  std::vector<Wire> inputs;
  std::vector<BigInt> weights;  // LTF only, aligned with inputs
  BigInt threshold = 0;         // LTF only

  bool operator==(const Gate&) const = default;
};

// A topologically ordered gate list over inputs x (length n) and y (length
// k). The last gate is the output; size counts gates, not inputs.
class Circuit {
 public:
  Circuit(std::size_t n, std::size_t k) : n_(n), k_(k) {}

  // Appends a gate and returns its index. Throws InputError when the gate
  // references a later gate or an input out of range, negates a gate wire,
  // has misaligned weights, or is a NOT without exactly one input.
  std::size_t add(Gate gate);

  std::size_t n() const { return n_; }
  std::size_t k() const { return k_; }
  std::size_t size() const { return gates_.size(); }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t output() const;
  // Longest input-to-output path counted in gates. Literal negation is free.
  std::size_t depth() const;

  bool operator==(const Circuit&) const = default;

 private:
  std::size_t n_;
  std::size_t k_;
  std::vector<Gate> gates_;
};

// Compiled form for repeated evaluation. LTF gates whose weights provably fit
// run on 64-bit integers; the rest use big integers.
class Evaluator {
 public:
  explicit Evaluator(const Circuit& c);

  // bits = x then y.
  bool operator()(std::span<const Symbol> bits) const;
  // Packed input, bit i = coordinate i. Requires n + k <= 64.
  bool eval_word(std::uint64_t word) const;

  std::size_t big_gates() const { return big_gates_; }

 private:
  struct Term {
    std::uint32_t src;
    bool from_gate;
    bool negated;
    std::int64_t weight;
  };
  struct Node {
    GateKind kind = GateKind::kAnd;
    bool wide = false;  // LTF evaluated with big integers
    std::uint64_t pos_mask = 0;
    std::uint64_t neg_mask = 0;
    std::vector<Term> literals;  // input wires
    std::vector<std::uint32_t> children;  // gate wires
    std::vector<Term> terms;  // LTF: all wires in order
    std::int64_t threshold = 0;
    std::size_t source = 0;  // index into the circuit for wide gates
  };

  template <typename Bits>
  bool run(const Bits& bits) const;

  const Circuit* circuit_;  // must outlive the evaluator
  std::size_t inputs_;
  bool packed_;
  std::vector<Node> nodes_;
  std::size_t big_gates_ = 0;
};

// One-shot evaluation. Throws InputError on length or alphabet mismatch.
bool eval(const Circuit& c, const core::Text& x, const core::Text& y);
bool eval(const Circuit& c, std::span<const Symbol> bits);

// Direct big-integer evaluation with no compilation; slow but simple.
bool eval_reference(const Circuit& c, std::span<const Symbol> bits);

}  // namespace smlab::circuits

#endif  // SMLAB_CIRCUITS_CIRCUIT_HPP_

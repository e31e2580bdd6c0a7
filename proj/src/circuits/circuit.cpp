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

#include "smlab/circuits/circuit.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <string>

#include "smlab/error.hpp"

namespace smlab::circuits {
namespace {

constexpr std::int64_t kFastLimit = std::int64_t{1} << 62;

std::size_t input_position(const Wire& w, std::size_t n) {
  return w.source == Wire::Source::kX ? w.index : n + w.index;
}

}  // namespace

std::string_view kind_name(GateKind kind) {
  switch (kind) {
    case GateKind::kAnd: return "AND";
    case GateKind::kOr: return "OR";
    case GateKind::kNot: return "NOT";
    case GateKind::kLtf: return "LTF";
  }
  return "?";
}

GateKind parse_kind(std::string_view s) {
  for (GateKind k :
       {GateKind::kAnd, GateKind::kOr, GateKind::kNot, GateKind::kLtf}) {
    if (kind_name(k) == s) return k;
  }
  throw InputError("unknown gate kind '" + std::string(s) + "'");
}

std::string wire_token(const Wire& w) {
  std::string s = w.negated ? "!" : "";
  switch (w.source) {
    case Wire::Source::kX: s += 'x'; break;
    case Wire::Source::kY: s += 'y'; break;
    case Wire::Source::kGate: s += 'g'; break;
  }
  return s + std::to_string(w.index);
}

Wire parse_wire(std::string_view token) {
  Wire w;
  std::string_view t = token;
  if (!t.empty() && t.front() == '!') {
    w.negated = true;
    t.remove_prefix(1);
  }
  if (t.size() < 2) throw InputError("bad wire '" + std::string(token) + "'");
  switch (t.front()) {
    case 'x': w.source = Wire::Source::kX; break;
    case 'y': w.source = Wire::Source::kY; break;
    case 'g': w.source = Wire::Source::kGate; break;
    default: throw InputError("bad wire '" + std::string(token) + "'");
  }
  t.remove_prefix(1);
  const auto [end, ec] = std::from_chars(t.data(), t.data() + t.size(), w.index);
  if (ec != std::errc() || end != t.data() + t.size()) {
    throw InputError("bad wire '" + std::string(token) + "'");
  }
  return w;
}

std::size_t Circuit::add(Gate gate) {
  const std::size_t id = gates_.size();
  for (const Wire& w : gate.inputs) {
    const bool ok =
        (w.source == Wire::Source::kX && w.index < n_) ||
        (w.source == Wire::Source::kY && w.index < k_) ||
        (w.source == Wire::Source::kGate && w.index < id && !w.negated);
    if (!ok) {
      throw InputError("gate " + std::to_string(id) + ": invalid input " +
                       wire_token(w));
    }
  }
  if (gate.kind == GateKind::kNot && gate.inputs.size() != 1) {
    throw InputError("gate " + std::to_string(id) +
                     ": NOT needs exactly one input");
  }
  if (gate.kind == GateKind::kLtf) {
    if (gate.weights.size() != gate.inputs.size()) {
      throw InputError("gate " + std::to_string(id) +
                       ": weight count differs from input count");
    }
  } else if (!gate.weights.empty() || gate.threshold != 0) {
    throw InputError("gate " + std::to_string(id) +
                     ": only LTF gates carry weights");
  }
  gates_.push_back(std::move(gate));
  return id;
}

std::size_t Circuit::output() const {
  if (gates_.empty()) throw InputError("circuit has no gates");
  return gates_.size() - 1;
}

std::size_t Circuit::depth() const {
  std::vector<std::size_t> d(gates_.size(), 1);
  std::size_t best = 0;
  for (std::size_t g = 0; g < gates_.size(); ++g) {
    for (const Wire& w : gates_[g].inputs) {
      if (w.source == Wire::Source::kGate) {
        d[g] = std::max(d[g], d[w.index] + 1);
      }
    }
    best = std::max(best, d[g]);
  }
  return gates_.empty() ? 0 : d[output()];
}

Evaluator::Evaluator(const Circuit& c)
    : circuit_(&c), inputs_(c.n() + c.k()), packed_(inputs_ <= 64) {
  nodes_.reserve(c.size());
  for (std::size_t g = 0; g < c.size(); ++g) {
    const Gate& gate = c.gates()[g];
    Node node;
    node.kind = gate.kind;
    node.source = g;
    if (gate.kind == GateKind::kLtf) {
      // Fast only if every partial sum stays inside 64 bits.
      BigInt budget = abs(gate.threshold);
      for (const BigInt& w : gate.weights) budget += abs(w);
      node.wide = budget >= kFastLimit;
      if (node.wide) {
        ++big_gates_;
      } else {
        node.threshold = static_cast<std::int64_t>(gate.threshold);
        for (std::size_t i = 0; i < gate.inputs.size(); ++i) {
          const Wire& w = gate.inputs[i];
          const bool from_gate = w.source == Wire::Source::kGate;
          node.terms.push_back(
              {static_cast<std::uint32_t>(
                   from_gate ? w.index : input_position(w, c.n())),
               from_gate, w.negated,
               static_cast<std::int64_t>(gate.weights[i])});
        }
      }
    } else {
      for (const Wire& w : gate.inputs) {
        if (w.source == Wire::Source::kGate) {
          node.children.push_back(w.index);
          continue;
        }
        const std::size_t pos = input_position(w, c.n());
        node.literals.push_back(
            {static_cast<std::uint32_t>(pos), false, w.negated, 0});
        if (packed_) (w.negated ? node.neg_mask : node.pos_mask) |= 1ULL << pos;
      }
    }
    nodes_.push_back(std::move(node));
  }
}

namespace {

struct SpanBits {
  std::span<const Symbol> bits;
  bool bit(std::size_t pos) const { return bits[pos] != 0; }
  static constexpr bool kPacked = false;
};

struct WordBits {
  std::uint64_t word;
  bool bit(std::size_t pos) const { return (word >> pos) & 1U; }
  static constexpr bool kPacked = true;
};

}  // namespace

template <typename Bits>
bool Evaluator::run(const Bits& in) const {
  std::vector<std::uint8_t> val(nodes_.size());
  for (std::size_t g = 0; g < nodes_.size(); ++g) {
    const Node& node = nodes_[g];
    bool out = false;
    switch (node.kind) {
      case GateKind::kNot:
        out = node.children.empty() ? !(in.bit(node.literals[0].src) !=
                                        node.literals[0].negated)
                                    : !val[node.children[0]];
        break;
      case GateKind::kAnd:
      case GateKind::kOr: {
        const bool is_and = node.kind == GateKind::kAnd;
        bool hit = false;  // some input equals the absorbing value
        if constexpr (Bits::kPacked) {
          hit = is_and ? ((in.word & node.pos_mask) != node.pos_mask ||
                          (in.word & node.neg_mask) != 0)
                       : ((in.word & node.pos_mask) != 0 ||
                          (~in.word & node.neg_mask) != 0);
        } else {
          for (const Term& t : node.literals) {
            if ((in.bit(t.src) != t.negated) != is_and) {
              hit = true;
              break;
            }
          }
        }
        for (std::size_t i = 0; !hit && i < node.children.size(); ++i) {
          hit = (val[node.children[i]] != 0) != is_and;
        }
        out = is_and ? !hit : hit;
        break;
      }
      case GateKind::kLtf: {
        if (node.wide) {
          const Gate& gate = circuit_->gates()[node.source];
          BigInt sum = 0;
          for (std::size_t i = 0; i < gate.inputs.size(); ++i) {
            const Wire& w = gate.inputs[i];
            const bool v =
                w.source == Wire::Source::kGate
                    ? val[w.index] != 0
                    : in.bit(input_position(w, circuit_->n())) != w.negated;
            if (v) sum += gate.weights[i];
          }
          out = sum >= gate.threshold;
        } else {
          std::int64_t sum = 0;
          for (const Term& t : node.terms) {
            const bool v = t.from_gate ? val[t.src] != 0
                                       : in.bit(t.src) != t.negated;
            if (v) sum += t.weight;
          }
          out = sum >= node.threshold;
        }
        break;
      }
    }
    val[g] = out;
  }
  if (val.empty()) throw InputError("circuit has no gates");
  return val.back() != 0;
}

bool Evaluator::operator()(std::span<const Symbol> bits) const {
  if (bits.size() != inputs_) {
    throw InputError("circuit expects " + std::to_string(inputs_) +
                     " input bits, got " + std::to_string(bits.size()));
  }
  return run(SpanBits{bits});
}

bool Evaluator::eval_word(std::uint64_t word) const {
  if (!packed_) throw InputError("packed evaluation needs n + k <= 64");
  return run(WordBits{word});
}

bool eval(const Circuit& c, std::span<const Symbol> bits) {
  return Evaluator(c)(bits);
}

bool eval(const Circuit& c, const core::Text& x, const core::Text& y) {
  if (x.alphabet_size() != 2 || y.alphabet_size() != 2) {
    throw InputError("circuits take binary inputs");
  }
  if (x.size() != c.n() || y.size() != c.k()) {
    throw InputError("input lengths (" + std::to_string(x.size()) + ", " +
                     std::to_string(y.size()) + ") do not match circuit (" +
                     std::to_string(c.n()) + ", " + std::to_string(c.k()) +
                     ")");
  }
  Symbols bits(x.symbols().begin(), x.symbols().end());
  bits.insert(bits.end(), y.symbols().begin(), y.symbols().end());
  return eval(c, bits);
}

bool eval_reference(const Circuit& c, std::span<const Symbol> bits) {
  if (bits.size() != c.n() + c.k()) {
    throw InputError("input length does not match circuit");
  }
  std::vector<bool> val;
  for (const Gate& gate : c.gates()) {
    std::vector<bool> in;
    for (const Wire& w : gate.inputs) {
      in.push_back(w.source == Wire::Source::kGate
                       ? bool(val[w.index])
                       : (bits[input_position(w, c.n())] != 0) != w.negated);
    }
    bool out = false;
    switch (gate.kind) {
      case GateKind::kAnd:
        out = std::all_of(in.begin(), in.end(), [](bool b) { return b; });
        break;
      case GateKind::kOr:
        out = std::any_of(in.begin(), in.end(), [](bool b) { return b; });
        break;
      case GateKind::kNot: out = !in[0]; break;
      case GateKind::kLtf: {
        BigInt sum = 0;
        for (std::size_t i = 0; i < in.size(); ++i) {
          if (in[i]) sum += gate.weights[i];
        }
        out = sum >= gate.threshold;
        break;
      }
    }
    val.push_back(out);
  }
  if (val.empty()) throw InputError("circuit has no gates");
  return val.back();
}

}  // namespace smlab::circuits

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

#include "smlab/circuits/serialize.hpp"

#include <sstream>
#include <vector>

#include "smlab/error.hpp"

namespace smlab::circuits {
namespace {

BigInt parse_integer(const std::string& token, std::size_t line) {
  const std::size_t digits = token[0] == '-' ? 1 : 0;
  if (token.size() == digits ||
      token.find_first_not_of("0123456789", digits) != std::string::npos) {
    throw InputError("line " + std::to_string(line) + ": bad integer '" +
                     token + "'");
  }
  return BigInt(token);
}

bool is_wire(const std::string& token) {
  const char c = token[0] == '!' && token.size() > 1 ? token[1] : token[0];
  return c == 'x' || c == 'y' || c == 'g';
}

}  // namespace

void write_circuit(std::ostream& out, const Circuit& c) {
  out << c.n() << ' ' << c.k() << ' ' << c.size() << ' ' << c.depth() << '\n';
  for (std::size_t g = 0; g < c.size(); ++g) {
    const Gate& gate = c.gates()[g];
    out << g << ' ' << kind_name(gate.kind);
    for (const Wire& w : gate.inputs) out << ' ' << wire_token(w);
    if (gate.kind == GateKind::kLtf) {
      for (const BigInt& w : gate.weights) out << ' ' << w;
      out << ' ' << gate.threshold;
    }
    out << '\n';
  }
}

std::string to_text(const Circuit& c) {
  std::ostringstream out;
  write_circuit(out, c);
  return out.str();
}

Circuit read_circuit(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line[0] != '#') return true;
    }
    return false;
  };
  if (!next_line()) throw InputError("empty circuit file");
  std::istringstream header(line);
  std::size_t n = 0, k = 0, size = 0, depth = 0;
  if (!(header >> n >> k >> size >> depth)) {
    throw InputError("line " + std::to_string(line_no) +
                     ": expected 'n k size depth'");
  }
  Circuit c(n, k);
  while (c.size() < size && next_line()) {
    std::istringstream ls(line);
    std::size_t idx = 0;
    std::string kind;
    if (!(ls >> idx >> kind)) {
      throw InputError("line " + std::to_string(line_no) +
                       ": expected 'idx KIND ...'");
    }
    if (idx != c.size()) {
      throw InputError("line " + std::to_string(line_no) + ": gate index " +
                       std::to_string(idx) + " out of order");
    }
    Gate gate{parse_kind(kind), {}, {}, 0};
    std::vector<std::string> numbers;
    for (std::string tok; ls >> tok;) {
      if (is_wire(tok) && numbers.empty()) {
        gate.inputs.push_back(parse_wire(tok));
      } else {
        numbers.push_back(tok);
      }
    }
    if (gate.kind == GateKind::kLtf) {
      if (numbers.size() != gate.inputs.size() + 1) {
        throw InputError("line " + std::to_string(line_no) +
                         ": LTF needs one weight per input and a threshold");
      }
      for (std::size_t i = 0; i < gate.inputs.size(); ++i) {
        gate.weights.push_back(parse_integer(numbers[i], line_no));
      }
      gate.threshold = parse_integer(numbers.back(), line_no);
    } else if (!numbers.empty()) {
      throw InputError("line " + std::to_string(line_no) +
                       ": unexpected token '" + numbers[0] + "'");
    }
    c.add(std::move(gate));
  }
  if (c.size() != size) {
    throw InputError("header announces " + std::to_string(size) +
                     " gates, found " + std::to_string(c.size()));
  }
  if (c.depth() != depth) {
    throw InputError("header depth " + std::to_string(depth) +
                     " differs from computed depth " +
                     std::to_string(c.depth()));
  }
  return c;
}

Circuit from_text(const std::string& text) {
  std::istringstream in(text);
  return read_circuit(in);
}

}  // namespace smlab::circuits

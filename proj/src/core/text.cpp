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

#include "smlab/core/text.hpp"

#include <string>
#include <utility>

#include "smlab/error.hpp"

namespace smlab::core {
namespace {

void check_alphabet(int alphabet_size) {
  if (alphabet_size < 2 || alphabet_size > 256) {
    throw InputError("alphabet size must be in [2, 256], got " +
                     std::to_string(alphabet_size));
  }
}

}  // namespace

Text::Text(Symbols symbols, int alphabet_size)
    : symbols_(std::move(symbols)), alphabet_size_(alphabet_size) {
  check_alphabet(alphabet_size);
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i] >= alphabet_size_) {
      throw InputError("symbol " + std::to_string(symbols_[i]) +
                       " at position " + std::to_string(i) +
                       " is outside alphabet of size " +
                       std::to_string(alphabet_size_));
    }
  }
}

Text Text::parse(std::string_view s, int alphabet_size) {
  return Text(parse_symbols(s, alphabet_size), alphabet_size);
}

std::string Text::str() const { return to_string(symbols_); }

Pattern::Pattern(Symbols symbols, int alphabet_size,
                 std::optional<std::size_t> k_max)
    : Text(std::move(symbols), alphabet_size) {
  if (empty()) throw InputError("pattern must be non-empty");
  if (k_max && size() > *k_max) {
    throw InputError("pattern length " + std::to_string(size()) +
                     " exceeds class bound " + std::to_string(*k_max));
  }
}

Pattern::Pattern(const Text& text, std::optional<std::size_t> k_max)
    : Pattern(Symbols(text.symbols().begin(), text.symbols().end()),
              text.alphabet_size(), k_max) {}

Pattern Pattern::parse(std::string_view s, int alphabet_size) {
  return Pattern(parse_symbols(s, alphabet_size), alphabet_size);
}

char symbol_char(Symbol s) {
  return s < 10 ? static_cast<char>('0' + s) : static_cast<char>('a' + s - 10);
}

std::string to_string(std::span<const Symbol> symbols) {
  std::string out;
  out.reserve(symbols.size());
  for (Symbol s : symbols) {
    if (s >= kMaxPrintableAlphabet) {
      out += '<' + std::to_string(s) + '>';
    } else {
      out += symbol_char(s);
    }
  }
  return out;
}

Symbols parse_symbols(std::string_view s, int alphabet_size) {
  check_alphabet(alphabet_size);
  if (alphabet_size > kMaxPrintableAlphabet) {
    throw InputError("textual form supports alphabets up to 36 symbols");
  }
  Symbols out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    int v = -1;
    if (c >= '0' && c <= '9') v = c - '0';
    if (c >= 'a' && c <= 'z') v = c - 'a' + 10;
    if (v < 0 || v >= alphabet_size) {
      throw InputError("invalid symbol '" + std::string(1, c) +
                       "' at position " + std::to_string(i) +
                       " (alphabet size " + std::to_string(alphabet_size) +
                       ")");
    }
    out.push_back(static_cast<Symbol>(v));
  }
  return out;
}

std::uint64_t pack_bits(std::span<const Symbol> bits) {
  if (bits.size() > 64) throw CapacityError("packed view holds at most 64 bits");
  std::uint64_t word = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] > 1) throw InputError("packed view requires a binary string");
    word |= static_cast<std::uint64_t>(bits[i]) << i;
  }
  return word;
}

Symbols unpack_bits(std::uint64_t word, std::size_t n) {
  if (n > 64) throw CapacityError("packed view holds at most 64 bits");
  Symbols out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = (word >> i) & 1U;
  return out;
}

}  // namespace smlab::core

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

#ifndef SMLAB_CORE_TEXT_HPP_
#define SMLAB_CORE_TEXT_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace smlab::core {

using Symbol = std::uint8_t;
using Symbols = std::vector<Symbol>;

// Largest alphabet with a printable one-character-per-symbol form (0-9a-z).
inline constexpr int kMaxPrintableAlphabet = 36;

// A string over [0, alphabet_size), stored one symbol per byte.
class Text {
 public:
  Text() = default;
  explicit Text(Symbols symbols, int alphabet_size = 2);

  // Parses "0110", or "0a3z" for larger alphabets. Throws InputError naming
  // the offending position.
  static Text parse(std::string_view s, int alphabet_size = 2);

  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  int alphabet_size() const { return alphabet_size_; }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  std::span<const Symbol> symbols() const { return symbols_; }
  std::string str() const;

  bool operator==(const Text&) const = default;

 private:
  Symbols symbols_;
  int alphabet_size_ = 2;
};

// A non-empty search pattern; optionally bounded by a class limit k_max.
class Pattern : public Text {
 public:
  Pattern() = delete;
  explicit Pattern(Symbols symbols, int alphabet_size = 2,
                   std::optional<std::size_t> k_max = std::nullopt);
  explicit Pattern(const Text& text,
                   std::optional<std::size_t> k_max = std::nullopt);

  static Pattern parse(std::string_view s, int alphabet_size = 2);
};

char symbol_char(Symbol s);
std::string to_string(std::span<const Symbol> symbols);
Symbols parse_symbols(std::string_view s, int alphabet_size);

// Bit-packed view for binary strings of length <= 64: bit i holds symbol i.
std::uint64_t pack_bits(std::span<const Symbol> bits);
Symbols unpack_bits(std::uint64_t word, std::size_t n);

}  // namespace smlab::core

#endif  // SMLAB_CORE_TEXT_HPP_

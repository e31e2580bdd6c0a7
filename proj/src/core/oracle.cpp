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

#include "smlab/core/oracle.hpp"

#include <string>

#include "smlab/error.hpp"

namespace smlab::core {

bool sm_oracle(const Text& x, const Pattern& y) {
  if (x.alphabet_size() != y.alphabet_size()) {
    throw InputError("text and pattern use different alphabets");
  }
  if (y.size() > x.size()) {
    throw InputError("pattern length " + std::to_string(y.size()) +
                     " exceeds text length " + std::to_string(x.size()));
  }
  return contains(x.symbols(), y.symbols());
}

bool contains(std::span<const Symbol> haystack,
              std::span<const Symbol> needle) {
  return find_first(haystack, needle) >= 0;
}

std::ptrdiff_t find_first(std::span<const Symbol> haystack,
                          std::span<const Symbol> needle, std::size_t from) {
  const std::size_t n = haystack.size();
  const std::size_t k = needle.size();
  if (k > n) return -1;
  for (std::size_t i = from; i + k <= n; ++i) {
    std::size_t j = 0;
    while (j < k && haystack[i + j] == needle[j]) ++j;
    if (j == k) return static_cast<std::ptrdiff_t>(i);
  }
  return -1;
}

}  // namespace smlab::core

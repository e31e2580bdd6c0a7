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

#ifndef SMLAB_CIRCUITS_SPARSE_HPP_
#define SMLAB_CIRCUITS_SPARSE_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "smlab/core/text.hpp"

namespace smlab::circuits {

using core::Symbol;
using core::Symbols;

enum class DupVariant { kEven, kOdd };

// Every bit written twice, then "01" (even) or "010" (odd). dup(010) is
// 00110001.
Symbols dup(std::span<const Symbol> a, DupVariant variant = DupVariant::kEven);

// A Boolean function on {0,1}^ell given by its ones.
class SparseFunction {
 public:
  // Throws InputError on duplicates, wrong lengths or an empty set.
  SparseFunction(std::size_t ell, std::vector<Symbols> ones);

  std::size_t ell() const { return ell_; }
  std::size_t t() const { return ones_.size(); }
  const std::vector<Symbols>& ones() const { return ones_; }  // sorted
  bool operator()(std::span<const Symbol> y) const;

 private:
  std::size_t ell_;
  std::vector<Symbols> ones_;
};

// Lexicographic order reads each string from its first bit.
// x_f = dup(a_1) dup(a_2) ... over the ones in that order, zero-padded at the
// end up to `pad_to` when it is longer.
Symbols sparse_encode(const SparseFunction& f,
                      std::optional<std::size_t> pad_to = std::nullopt,
                      DupVariant variant = DupVariant::kEven);

inline constexpr std::size_t kMaxSparseEll = 14;

// Checks f(y) == SM(x_f, dup(y)) for every y in {0,1}^ell. Throws
// CapacityError for ell > kMaxSparseEll.
bool verify_sparse_reduction(const SparseFunction& f,
                             DupVariant variant = DupVariant::kEven);

}  // namespace smlab::circuits

#endif  // SMLAB_CIRCUITS_SPARSE_HPP_

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

#include "smlab/circuits/sparse.hpp"

#include <algorithm>
#include <string>

#include "smlab/core/oracle.hpp"
#include "smlab/error.hpp"

namespace smlab::circuits {

Symbols dup(std::span<const Symbol> a, DupVariant variant) {
  if (a.empty()) throw InputError("dup needs a non-empty string");
  Symbols out;
  out.reserve(2 * a.size() + 3);
  for (Symbol b : a) {
    if (b > 1) throw InputError("dup takes binary strings");
    out.push_back(b);
    out.push_back(b);
  }
  out.push_back(0);
  out.push_back(1);
  if (variant == DupVariant::kOdd) out.push_back(0);
  return out;
}

SparseFunction::SparseFunction(std::size_t ell, std::vector<Symbols> ones)
    : ell_(ell), ones_(std::move(ones)) {
  if (ell_ == 0) throw InputError("sparse functions need ell >= 1");
  if (ones_.empty()) throw InputError("sparse functions need t >= 1");
  for (const Symbols& a : ones_) {
    if (a.size() != ell_) {
      throw InputError("every one of f must have length " +
                       std::to_string(ell_));
    }
    for (Symbol b : a) {
      if (b > 1) throw InputError("sparse functions are over {0,1}");
    }
  }
  std::sort(ones_.begin(), ones_.end());
  if (std::adjacent_find(ones_.begin(), ones_.end()) != ones_.end()) {
    throw InputError("ones of f must be distinct");
  }
}

bool SparseFunction::operator()(std::span<const Symbol> y) const {
  return std::binary_search(ones_.begin(), ones_.end(),
                            Symbols(y.begin(), y.end()));
}

Symbols sparse_encode(const SparseFunction& f, std::optional<std::size_t> pad_to,
                      DupVariant variant) {
  Symbols x;
  for (const Symbols& a : f.ones()) {
    const Symbols d = dup(a, variant);
    x.insert(x.end(), d.begin(), d.end());
  }
  if (pad_to && *pad_to > x.size()) x.resize(*pad_to, 0);
  return x;
}

bool verify_sparse_reduction(const SparseFunction& f, DupVariant variant) {
  const std::size_t ell = f.ell();
  if (ell > kMaxSparseEll) {
    throw CapacityError("sparse reduction check limited to ell <= " +
                        std::to_string(kMaxSparseEll));
  }
  const core::Text x(sparse_encode(f, std::nullopt, variant));
  for (std::uint64_t w = 0; w < (1ULL << ell); ++w) {
    // Strings are enumerated with the first bit most significant.
    Symbols y(ell);
    for (std::size_t j = 0; j < ell; ++j) y[j] = (w >> (ell - 1 - j)) & 1U;
    if (f(y) != core::sm_oracle(x, core::Pattern(dup(y, variant)))) {
      return false;
    }
  }
  return true;
}

}  // namespace smlab::circuits

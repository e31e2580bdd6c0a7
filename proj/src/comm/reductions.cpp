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

#include "smlab/comm/reductions.hpp"

#include <algorithm>
#include <string>

#include "smlab/error.hpp"

namespace smlab::comm {

bool disj(std::span<const Symbol> a, std::span<const Symbol> b) {
  if (a.size() != b.size()) throw InputError("DISJ operands differ in length");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] && b[i]) return true;
  }
  return false;
}

ReducedInstance reduce_disj_to_sm(std::span<const Symbol> a,
                                  std::span<const Symbol> b, std::size_t k) {
  if (a.size() != b.size()) throw InputError("DISJ operands differ in length");
  if (a.empty()) throw InputError("DISJ needs at least one coordinate");
  if (k < 2) throw ParameterError("DISJ reduction needs k >= 2");
  ReducedInstance r{{}, Symbols(k, 1), Bipartition({})};
  std::vector<Party> owner;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > 1 || b[i] > 1) throw InputError("DISJ operands must be binary");
    r.x.push_back(a[i]);
    owner.push_back(Party::kAlice);
    r.x.push_back(b[i]);
    owner.push_back(Party::kBob);
    r.x.insert(r.x.end(), k - 2, 1);
    r.x.push_back(0);
    owner.insert(owner.end(), k - 1, Party::kAlice);
  }
  owner.insert(owner.end(), k, Party::kAlice);
  r.owner = Bipartition(std::move(owner));
  return r;
}

bool or_gt(std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size()) throw InputError("OR-GT operands differ in length");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] >= b[i]) return true;
  }
  return false;
}

ReducedInstance reduce_or_gt_to_sm(std::span<const int> a,
                                   std::span<const int> b, std::size_t k) {
  if (a.size() != b.size()) throw InputError("OR-GT operands differ in length");
  if (a.empty()) throw InputError("OR-GT needs at least one block");
  if (k < 1) throw ParameterError("OR-GT reduction needs k >= 1");
  const int top = static_cast<int>(k);
  ReducedInstance r{{}, Symbols(2 * k + 2, 1), Bipartition({})};
  std::vector<Party> owner;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 1 || a[i] > top || b[i] < 1 || b[i] > top) {
      throw InputError("OR-GT values must lie in [1, " + std::to_string(k) +
                       "]");
    }
    if (i > 0) {
      r.x.insert(r.x.end(), 2, 0);
      owner.insert(owner.end(), 2, Party::kAlice);
    }
    const auto ka = static_cast<std::size_t>(a[i]);
    const auto kb = static_cast<std::size_t>(b[i]);
    for (std::size_t t = 0; t < 2 * k; ++t) {
      r.x.push_back(t >= kb ? 1 : 0);
      owner.push_back(Party::kBob);
      r.x.push_back(t < k + ka ? 1 : 0);
      owner.push_back(Party::kAlice);
    }
    r.x.push_back(1);
    owner.push_back(Party::kAlice);
  }
  owner.insert(owner.end(), r.y.size(), Party::kAlice);
  r.owner = Bipartition(std::move(owner));
  return r;
}

std::size_t longest_one_run(std::span<const Symbol> x) {
  std::size_t best = 0;
  std::size_t cur = 0;
  for (Symbol s : x) {
    cur = s ? cur + 1 : 0;
    best = std::max(best, cur);
  }
  return best;
}

}  // namespace smlab::comm

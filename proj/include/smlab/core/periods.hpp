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

#ifndef SMLAB_CORE_PERIODS_HPP_
#define SMLAB_CORE_PERIODS_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "smlab/core/text.hpp"

namespace smlab::core {

// Period orders use the overlap condition x[i..n) == x[0..n-i) (0-based),
// i.e. x[j] == x[j+i] wherever both sides exist, for 1 <= i <= n-1.
struct PeriodInfo {
  std::vector<std::size_t> orders;  // ascending
  // Shortest order <= floor(n/2); every order <= n/2 is a multiple of it.
  std::optional<std::size_t> primitive_order;
};

bool has_period(std::span<const Symbol> x, std::size_t order);

PeriodInfo period_orders(std::span<const Symbol> x);
inline PeriodInfo period_orders(const Text& x) {
  return period_orders(x.symbols());
}

// Smallest order <= limit, if any. limit defaults to floor(n/2).
std::optional<std::size_t> primitive_order(std::span<const Symbol> x);
std::optional<std::size_t> shortest_period_up_to(std::span<const Symbol> x,
                                                 std::size_t limit);

// Self-test of the gcd property: for every pair of orders (i, j) with
// i + j <= n, gcd(i, j) is also an order.
bool divisor_structure_check(std::span<const Symbol> x);
inline bool divisor_structure_check(const Text& x) {
  return divisor_structure_check(x.symbols());
}

}  // namespace smlab::core

#endif  // SMLAB_CORE_PERIODS_HPP_

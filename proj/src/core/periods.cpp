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

#include "smlab/core/periods.hpp"

#include <numeric>

namespace smlab::core {

bool has_period(std::span<const Symbol> x, std::size_t order) {
  const std::size_t n = x.size();
  if (order == 0 || order >= n) return false;
  for (std::size_t j = 0; j + order < n; ++j) {
    if (x[j] != x[j + order]) return false;
  }
  return true;
}

PeriodInfo period_orders(std::span<const Symbol> x) {
  PeriodInfo info;
  const std::size_t n = x.size();
  for (std::size_t i = 1; i < n; ++i) {
    if (has_period(x, i)) info.orders.push_back(i);
  }
  if (!info.orders.empty() && info.orders.front() <= n / 2) {
    info.primitive_order = info.orders.front();
  }
  return info;
}

std::optional<std::size_t> shortest_period_up_to(std::span<const Symbol> x,
                                                 std::size_t limit) {
  for (std::size_t i = 1; i <= limit && i < x.size(); ++i) {
    if (has_period(x, i)) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> primitive_order(std::span<const Symbol> x) {
  return shortest_period_up_to(x, x.size() / 2);
}

bool divisor_structure_check(std::span<const Symbol> x) {
  const PeriodInfo info = period_orders(x);
  std::vector<bool> is_order(x.size() + 1, false);
  for (std::size_t i : info.orders) is_order[i] = true;
  for (std::size_t a = 0; a < info.orders.size(); ++a) {
    for (std::size_t b = a; b < info.orders.size(); ++b) {
      const std::size_t i = info.orders[a];
      const std::size_t j = info.orders[b];
      if (i + j > x.size()) break;
      if (!is_order[std::gcd(i, j)]) return false;
    }
  }
  return true;
}

}  // namespace smlab::core

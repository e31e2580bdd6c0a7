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

#include "smlab/circuits/builders.hpp"

#include <algorithm>
#include <iterator>
#include <string>
#include <vector>

#include "smlab/error.hpp"

namespace smlab::circuits {
namespace {

void check_sizes(std::size_t n, std::size_t k) {
  if (k < 1 || k > n) {
    throw InputError("constructions need 1 <= k <= n (n=" + std::to_string(n) +
                     ", k=" + std::to_string(k) + ")");
  }
}

// Sinks receive gates from the builders below. add_family emits `count`
// gates built by make(0..count-1); add_over emits one AND/OR over `count`
// consecutive gates starting at `first`.
class MaterializingSink {
 public:
  MaterializingSink(std::size_t n, std::size_t k) : circuit_(n, k) {}

  std::size_t add(Gate g) { return circuit_.add(std::move(g)); }

  template <typename Make>
  std::size_t add_family(std::uint64_t count, Make make) {
    const std::size_t first = circuit_.size();
    for (std::uint64_t j = 0; j < count; ++j) circuit_.add(make(j));
    return first;
  }

  std::size_t add_over(GateKind kind, std::size_t first, std::uint64_t count) {
    Gate g{kind, {}, {}, 0};
    g.inputs.reserve(count);
    for (std::uint64_t j = 0; j < count; ++j) {
      g.inputs.push_back(Wire::gate(first + j));
    }
    return circuit_.add(std::move(g));
  }

  Circuit take() { return std::move(circuit_); }

 private:
  Circuit circuit_;
};

// Counts gates and tracks depth per run of structurally alike gates; a
// family is represented by its first member only.
class TallySink {
 public:
  std::uint64_t add(const Gate& g) { return push(1, depth_of(g)); }

  template <typename Make>
  std::uint64_t add_family(std::uint64_t count, Make make) {
    if (count == 0) return size_;
    return push(count, depth_of(make(0)));
  }

  std::uint64_t add_over(GateKind, std::uint64_t first, std::uint64_t count) {
    std::size_t d = 0;
    for (const Run& r : runs_) {
      if (r.first < first + count && first < r.first + r.count) {
        d = std::max(d, r.depth);
      }
    }
    return push(1, d + 1);
  }

  CircuitShape shape() const {
    return {size_, runs_.empty() ? 0 : runs_.back().depth};
  }

 private:
  struct Run {
    std::uint64_t first;
    std::uint64_t count;
    std::size_t depth;
  };

  std::size_t gate_depth(std::uint64_t id) const {
    auto it = std::upper_bound(
        runs_.begin(), runs_.end(), id,
        [](std::uint64_t v, const Run& r) { return v < r.first; });
    return std::prev(it)->depth;
  }

  std::size_t depth_of(const Gate& g) const {
    std::size_t d = 0;
    for (const Wire& w : g.inputs) {
      if (w.source == Wire::Source::kGate) d = std::max(d, gate_depth(w.index));
    }
    return d + 1;
  }

  std::uint64_t push(std::uint64_t count, std::size_t depth) {
    runs_.push_back({size_, count, depth});
    size_ += count;
    return runs_.back().first;
  }

  std::uint64_t size_ = 0;
  std::vector<Run> runs_;
};

Gate comparison(std::size_t offset, std::size_t k, bool window_ge) {
  Gate g{GateKind::kLtf, {}, {}, 0};
  const int sign = window_ge ? 1 : -1;
  for (std::size_t j = 0; j < k; ++j) {
    g.inputs.push_back(Wire::x(offset + j));
    g.weights.push_back(sign * (BigInt(1) << j));
  }
  for (std::size_t j = 0; j < k; ++j) {
    g.inputs.push_back(Wire::y(j));
    g.weights.push_back(-sign * (BigInt(1) << j));
  }
  return g;
}

template <typename Sink>
void emit_threshold_depth2(std::size_t n, std::size_t k, Sink& sink) {
  const std::size_t windows = n - k + 1;
  Gate out{GateKind::kLtf, {}, {}, BigInt(windows + 1)};
  for (std::size_t i = 0; i < windows; ++i) {
    out.inputs.push_back(Wire::gate(sink.add(comparison(i, k, true))));
    out.inputs.push_back(Wire::gate(sink.add(comparison(i, k, false))));
  }
  out.weights.assign(out.inputs.size(), BigInt(1));
  sink.add(std::move(out));
}

template <typename Sink>
void emit_dnf(std::size_t n, std::size_t k, Sink& sink) {
  const std::size_t windows = n - k + 1;
  const std::uint64_t per_window = std::uint64_t{1} << k;
  std::uint64_t first = 0;
  for (std::size_t i = 0; i < windows; ++i) {
    const auto id = sink.add_family(per_window, [&](std::uint64_t a) {
      Gate g{GateKind::kAnd, {}, {}, 0};
      g.inputs.reserve(2 * k);
      for (std::size_t j = 0; j < k; ++j) {
        const bool one = (a >> j) & 1U;
        g.inputs.push_back(Wire::x(i + j, !one));
        g.inputs.push_back(Wire::y(j, !one));
      }
      return g;
    });
    if (i == 0) first = id;
  }
  sink.add_over(GateKind::kOr, first, windows * per_window);
}

template <typename Sink>
void emit_depth3(std::size_t n, std::size_t k, Sink& sink) {
  const std::size_t windows = n - k + 1;
  Gate top{GateKind::kOr, {}, {}, 0};
  for (std::size_t i = 0; i < windows; ++i) {
    const auto first = sink.add_family(2 * k, [&](std::uint64_t c) {
      const std::size_t j = c / 2;
      const bool flip = c % 2 == 1;
      return Gate{GateKind::kOr,
                  {Wire::x(i + j, flip), Wire::y(j, !flip)}, {}, 0};
    });
    top.inputs.push_back(Wire::gate(sink.add_over(GateKind::kAnd, first, 2 * k)));
  }
  sink.add(std::move(top));
}

template <typename Emit>
CircuitShape tally(Emit emit) {
  TallySink sink;
  emit(sink);
  return sink.shape();
}

}  // namespace

Circuit build_threshold_depth2(std::size_t n, std::size_t k) {
  check_sizes(n, k);
  MaterializingSink sink(n, k);
  emit_threshold_depth2(n, k, sink);
  return sink.take();
}

CircuitShape threshold_depth2_shape(std::size_t n, std::size_t k) {
  check_sizes(n, k);
  return tally([&](TallySink& s) { emit_threshold_depth2(n, k, s); });
}

Circuit build_dnf(std::size_t n, std::size_t k, std::uint64_t budget) {
  check_sizes(n, k);
  const std::uint64_t windows = n - k + 1;
  if (k >= 63 || windows > (budget >> k)) {
    throw CapacityError("DNF for n=" + std::to_string(n) + ", k=" +
                        std::to_string(k) + " exceeds the gate budget of " +
                        std::to_string(budget));
  }
  MaterializingSink sink(n, k);
  emit_dnf(n, k, sink);
  return sink.take();
}

CircuitShape dnf_shape(std::size_t n, std::size_t k) {
  check_sizes(n, k);
  if (k >= 63) throw CapacityError("DNF shape needs k < 63");
  return tally([&](TallySink& s) { emit_dnf(n, k, s); });
}

Circuit build_depth3(std::size_t n, std::size_t k) {
  check_sizes(n, k);
  MaterializingSink sink(n, k);
  emit_depth3(n, k, sink);
  return sink.take();
}

CircuitShape depth3_shape(std::size_t n, std::size_t k) {
  check_sizes(n, k);
  return tally([&](TallySink& s) { emit_depth3(n, k, s); });
}

}  // namespace smlab::circuits

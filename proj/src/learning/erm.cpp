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

#include "smlab/learning/erm.hpp"

#include <string>
#include <unordered_map>
#include <unordered_set>

#include "smlab/core/oracle.hpp"
#include "smlab/error.hpp"

namespace smlab::learning {
namespace {

std::string key_of(std::span<const Symbol> s) {
  return std::string(s.begin(), s.end());
}

struct Counts {
  std::size_t positives = 0;  // positive samples containing the substring
  std::size_t negatives = 0;
};

}  // namespace

std::size_t empirical_errors(std::span<const Sample> samples,
                             std::span<const Symbol> pattern) {
  std::size_t errors = 0;
  for (const Sample& s : samples) {
    errors += core::contains(s.text, pattern) != s.label;
  }
  return errors;
}

std::size_t fallback_length(std::size_t m, std::size_t n, std::size_t k,
                            int sigma) {
  const std::size_t total = std::max<std::size_t>(1, m * n);
  std::size_t e = 0;
  for (std::size_t power = 1; power < total; power *= sigma) ++e;
  return std::min(k, e + 1);
}

std::optional<Symbols> absent_pattern(std::span<const Sample> samples,
                                      std::size_t length, int sigma) {
  if (length == 0) return std::nullopt;
  std::unordered_set<std::string> seen;
  for (const Sample& s : samples) {
    for (std::size_t i = 0; i + length <= s.text.size(); ++i) {
      seen.insert(key_of(std::span(s.text).subspan(i, length)));
    }
  }
  // Lexicographic odometer; at most |seen| + 1 steps before a gap.
  Symbols p(length, 0);
  while (true) {
    if (!seen.contains(key_of(p))) return p;
    std::size_t i = length;
    while (i > 0 && p[i - 1] == sigma - 1) p[--i] = 0;
    if (i == 0) return std::nullopt;
    ++p[i - 1];
  }
}

ErmResult erm_learn(std::span<const Sample> samples, std::size_t k,
                    int sigma) {
  if (samples.empty()) throw InputError("ERM needs at least one sample");
  if (sigma < 2 || sigma > 256) throw InputError("alphabet size out of range");
  std::size_t positives = 0;
  std::size_t max_len = 0;
  for (const Sample& s : samples) {
    for (Symbol c : s.text) {
      if (c >= sigma) throw InputError("sample symbol outside alphabet");
    }
    positives += s.label;
    max_len = std::max(max_len, s.text.size());
  }
  const std::size_t negatives = samples.size() - positives;

  std::unordered_map<std::string, Counts> counts;
  std::unordered_set<std::string> mine;
  for (const Sample& s : samples) {
    mine.clear();
    for (std::size_t i = 0; i < s.text.size(); ++i) {
      for (std::size_t len = 1; len <= k && i + len <= s.text.size(); ++len) {
        mine.insert(key_of(std::span(s.text).subspan(i, len)));
      }
    }
    for (const auto& key : mine) {
      Counts& c = counts[key];
      (s.label ? c.positives : c.negatives) += 1;
    }
  }

  ErmResult best{{}, negatives, 0.0};  // the empty pattern accepts everything
  auto consider = [&](std::size_t errors, const std::string& key) {
    const bool better =
        errors < best.errors ||
        (errors == best.errors &&
         (key.size() < best.pattern.size() ||
          (key.size() == best.pattern.size() &&
           key < key_of(best.pattern))));
    if (better) best = {Symbols(key.begin(), key.end()), errors, 0.0};
  };
  for (const auto& [key, c] : counts) {
    consider(positives - c.positives + c.negatives, key);
  }
  const std::size_t fb = fallback_length(samples.size(), max_len, k, sigma);
  if (const auto absent = absent_pattern(samples, fb, sigma)) {
    consider(positives, key_of(*absent));
  }
  best.loss = double(best.errors) / double(samples.size());
  return best;
}

}  // namespace smlab::learning

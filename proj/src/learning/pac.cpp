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

#include "smlab/learning/pac.hpp"

#include <cmath>
#include <string>

#include "json.hpp"
#include "smlab/core/oracle.hpp"
#include "smlab/error.hpp"
#include "smlab/learning/hypothesis.hpp"

namespace smlab::learning {
namespace {

void check_config(const PacConfig& c) {
  if (c.sigma < 2 || c.sigma > 256) {
    throw InputError("alphabet size out of range");
  }
  if (c.target.size() > c.k) {
    throw InputError("target longer than k");
  }
  if (c.k > c.n) throw InputError("k exceeds n");
  for (Symbol s : c.target) {
    if (s >= c.sigma) throw InputError("target symbol outside alphabet");
  }
  if (!(c.epsilon > 0 && c.epsilon <= 1)) {
    throw InputError("epsilon must lie in (0, 1]");
  }
  if (!(c.delta > 0 && c.delta < 1)) {
    throw InputError("delta must lie in (0, 1)");
  }
  if (!(c.plant_rate >= 0 && c.plant_rate <= 1)) {
    throw InputError("plant rate must lie in [0, 1]");
  }
  if (c.test_size == 0) throw InputError("test set must be non-empty");
}

// Next automaton state after reading c, given the target's failure table.
std::size_t advance(const Symbols& t, const std::vector<std::size_t>& fail,
                    std::size_t q, Symbol c) {
  while (q > 0 && t[q] != c) q = fail[q - 1];
  return t[q] == c ? q + 1 : 0;
}

std::vector<std::size_t> failure(const Symbols& t) {
  std::vector<std::size_t> f(t.size(), 0);
  for (std::size_t i = 1, q = 0; i < t.size(); ++i) {
    while (q > 0 && t[i] != t[q]) q = f[q - 1];
    if (t[i] == t[q]) ++q;
    f[i] = q;
  }
  return f;
}

Symbols avoiding_string(const PacConfig& c, Rng& rng) {
  const Symbols& t = c.target;
  const auto fail = failure(t);
  Symbols s(c.n);
  std::size_t q = 0;
  std::vector<Symbol> allowed;
  for (std::size_t i = 0; i < c.n; ++i) {
    allowed.clear();
    for (int a = 0; a < c.sigma; ++a) {
      if (advance(t, fail, q, Symbol(a)) < t.size()) allowed.push_back(Symbol(a));
    }
    s[i] = allowed[rng.below(allowed.size())];
    q = advance(t, fail, q, s[i]);
  }
  return s;
}

}  // namespace

std::size_t pac_sample_size(const PacConfig& c) {
  const double vc = vc_upper_bound(c.n, c.k, c.sigma);
  return static_cast<std::size_t>(
      std::ceil(c.sample_constant * (vc + std::log(1 / c.delta)) / c.epsilon));
}

Sample draw_sample(const PacConfig& c, Rng& rng) {
  Symbols s(c.n);
  const bool avoid = c.distribution == Distribution::kPlanted &&
                     !c.target.empty() && rng.uniform() >= c.plant_rate;
  if (avoid) {
    s = avoiding_string(c, rng);
  } else {
    for (auto& x : s) x = static_cast<Symbol>(rng.below(c.sigma));
    if (c.distribution == Distribution::kPlanted && !c.target.empty()) {
      const std::size_t at = rng.below(c.n - c.target.size() + 1);
      std::copy(c.target.begin(), c.target.end(), s.begin() + at);
    }
  }
  const bool label = core::contains(s, c.target);
  return {std::move(s), label};
}

PacReport pac_experiment(const PacConfig& config) {
  check_config(config);
  PacReport report;
  report.m_samples = pac_sample_size(config);
  for (std::size_t t = 0; t < config.trials; ++t) {
    Rng rng(config.seed + t);
    std::vector<Sample> train;
    train.reserve(report.m_samples);
    for (std::size_t i = 0; i < report.m_samples; ++i) {
      train.push_back(draw_sample(config, rng));
    }
    const ErmResult learned = erm_learn(train, config.k, config.sigma);
    std::size_t wrong = 0;
    for (std::size_t i = 0; i < config.test_size; ++i) {
      const Sample s = draw_sample(config, rng);
      wrong += core::contains(s.text, learned.pattern) != s.label;
    }
    PacTrial trial;
    trial.trial = t;
    trial.m_samples = report.m_samples;
    trial.empirical_loss = learned.loss;
    trial.test_loss = double(wrong) / double(config.test_size);
    trial.success = trial.test_loss <= config.epsilon;
    trial.learned = learned.pattern;
    report.successes += trial.success;
    report.trials.push_back(std::move(trial));
  }
  return report;
}

void write_pac_report(std::ostream& out, const PacReport& report,
                      Format format) {
  if (format == Format::kCsv) {
    out << kCsvSchemaLine << '\n'
        << "trial,m_samples,empirical_loss,test_loss,success\n";
    for (const PacTrial& t : report.trials) {
      out << t.trial << ',' << t.m_samples << ','
          << format_decimal(t.empirical_loss) << ','
          << format_decimal(t.test_loss) << ',' << (t.success ? 1 : 0)
          << '\n';
    }
    return;
  }
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const PacTrial& t : report.trials) {
    rows.push_back({{"trial", t.trial},
                    {"m_samples", t.m_samples},
                    {"empirical_loss", t.empirical_loss},
                    {"test_loss", t.test_loss},
                    {"success", t.success}});
  }
  out << rows.dump(2) << '\n';
}

}  // namespace smlab::learning

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

#ifndef SMLAB_LEARNING_PAC_HPP_
#define SMLAB_LEARNING_PAC_HPP_

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <vector>

#include "smlab/core/text.hpp"
#include "smlab/learning/erm.hpp"
#include "smlab/report.hpp"
#include "smlab/rng.hpp"

namespace smlab::learning {

enum class Distribution {
  kUniform,  // uniform over sigma^n
  // With probability plant_rate a uniform string with the target written at
  // a uniform offset; otherwise a string avoiding the target, drawn symbol by
  // symbol among the symbols that do not complete an occurrence.
  kPlanted,
};

struct PacConfig {
  Symbols target;
  int sigma = 2;
  std::size_t n = 100;
  std::size_t k = 4;
  double epsilon = 0.1;
  double delta = 0.1;
  std::size_t trials = 100;
  std::uint64_t seed = kDefaultSeed;
  Distribution distribution = Distribution::kUniform;
  double plant_rate = 0.5;
  double sample_constant = 4.0;
  std::size_t test_size = 10000;
};

struct PacTrial {
  std::size_t trial = 0;
  std::size_t m_samples = 0;
  double empirical_loss = 0.0;
  double test_loss = 0.0;
  bool success = false;
  Symbols learned;
};

struct PacReport {
  std::vector<PacTrial> trials;
  std::size_t m_samples = 0;
  std::size_t successes = 0;

  double success_fraction() const {
    return trials.empty() ? 0.0 : double(successes) / double(trials.size());
  }
};

// ceil(C * (vc_upper_bound + ln(1/delta)) / epsilon).
std::size_t pac_sample_size(const PacConfig& config);

// Draws one labeled sample from the configured distribution.
Sample draw_sample(const PacConfig& config, Rng& rng);

// Each trial t uses seed + t. A trial succeeds when the loss on a fresh test
// set is at most epsilon. Throws InputError for an invalid target or
// parameters.
PacReport pac_experiment(const PacConfig& config);

// Columns: trial,m_samples,empirical_loss,test_loss,success.
void write_pac_report(std::ostream& out, const PacReport& report,
                      Format format);

}  // namespace smlab::learning

#endif  // SMLAB_LEARNING_PAC_HPP_

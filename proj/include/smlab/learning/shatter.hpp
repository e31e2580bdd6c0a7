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

#ifndef SMLAB_LEARNING_SHATTER_HPP_
#define SMLAB_LEARNING_SHATTER_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "smlab/learning/hypothesis.hpp"

namespace smlab::learning {

// d strings and, for every subset I of them (bit i of the subset index set
// iff string i is in I), the hypothesis realizing it.
struct ShatterCertificate {
  std::vector<Symbols> strings;
  std::vector<std::vector<Symbols>> hypotheses;  // one pattern list each
  std::vector<std::size_t> mapping;  // subset index -> hypothesis index
  HypothesisClass cls;               // the class the hypotheses belong to
  std::size_t m = 0;                 // T_m parameter used

  std::size_t d() const { return strings.size(); }
};

inline constexpr std::size_t kMaxShatterDimension = 24;

// Parameters m and d of the single-pattern construction before fitting.
struct ShatterParams {
  long m = 0;
  long d = 0;
};
ShatterParams shatter_params(std::size_t n, std::size_t k, int sigma);
ShatterParams shatter_exact_params(std::size_t n, std::size_t k, int sigma);

// Patterns are the first 2^d members of T_m; string i concatenates the
// patterns whose index has bit i set and is padded with 1s to length n. d is
// lowered while the concatenation would exceed n. Returns nullopt when m < 1.
std::optional<ShatterCertificate> build_shattered_set(std::size_t n,
                                                      std::size_t k,
                                                      int sigma);

// AND: every pattern becomes its c longest prefixes. OR: the first half of
// the patterns shatters d-1 strings and each is joined by c-1 decoys from the
// second half. c = 1 gives the single-pattern certificate. Throws InputError
// when c is out of range; nullopt when degenerate.
std::optional<ShatterCertificate> build_shattered_multi(std::size_t n,
                                                        std::size_t k,
                                                        int sigma,
                                                        std::size_t c,
                                                        Variant variant);

// Patterns of length exactly k: T_m members front-padded with 1s.
std::optional<ShatterCertificate> build_shattered_exact_k(std::size_t n,
                                                          std::size_t k,
                                                          int sigma);

// Checks every subset against its mapped hypothesis under `cls`. Throws
// CapacityError for d > kMaxShatterDimension.
bool verify_shattering(const ShatterCertificate& cert,
                       const HypothesisClass& cls);
inline bool verify_shattering(const ShatterCertificate& cert) {
  return verify_shattering(cert, cert.cls);
}

// {"strings": [...], "patterns": [...], "mapping": [...]}; patterns are
// strings for single-pattern classes and lists of strings otherwise.
std::string certificate_json(const ShatterCertificate& cert);

}  // namespace smlab::learning

#endif  // SMLAB_LEARNING_SHATTER_HPP_

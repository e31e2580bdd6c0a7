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

#include "smlab/learning/shatter.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "json.hpp"
#include "smlab/bits.hpp"
#include "smlab/error.hpp"
#include "smlab/learning/tm.hpp"

namespace smlab::learning {
namespace {

std::size_t pattern_length(std::size_t m) { return m + ceil_log2(m) + 2; }

// String i joins the patterns whose index has bit i set, padded with 1s.
std::vector<Symbols> shattered_strings(const std::vector<Symbols>& patterns,
                                       std::size_t d, std::size_t n) {
  std::vector<Symbols> strings(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < (std::size_t{1} << d); ++j) {
      if ((j >> i) & 1U) {
        strings[i].insert(strings[i].end(), patterns[j].begin(),
                          patterns[j].end());
      }
    }
    if (strings[i].size() > n) {
      throw std::logic_error("shattered string exceeds n");
    }
    strings[i].resize(n, 1);
  }
  return strings;
}

void check_dimension(long d) {
  if (d > static_cast<long>(kMaxShatterDimension)) {
    throw CapacityError("certificates limited to d <= " +
                        std::to_string(kMaxShatterDimension));
  }
}

std::vector<std::size_t> identity(std::size_t count) {
  std::vector<std::size_t> v(count);
  for (std::size_t i = 0; i < count; ++i) v[i] = i;
  return v;
}

void check_sigma(int sigma) {
  if (sigma < 2 || sigma > 256) throw InputError("alphabet size out of range");
}

}  // namespace

ShatterParams shatter_params(std::size_t n, std::size_t k, int sigma) {
  check_sigma(sigma);
  if (k == 0) return {0, 0};
  const double ls = std::log2(double(sigma));
  const double by_k = double(k) - std::log2(double(k)) - 3;
  double by_n = std::numeric_limits<double>::infinity();
  if (n > 1) {
    const double ln = std::log2(double(n));
    by_n = ln / ls - std::log2(ln) / ls + 1;
  }
  const long m = static_cast<long>(std::floor(std::min(by_k, by_n)));
  return {m, static_cast<long>(std::floor(double(m - 1) * ls))};
}

ShatterParams shatter_exact_params(std::size_t n, std::size_t k, int sigma) {
  check_sigma(sigma);
  if (k == 0 || n == 0) return {0, 0};
  const double ls = std::log2(double(sigma));
  const double lk = std::log2(double(k));
  const long m = static_cast<long>(std::floor(double(k) - lk - 2));
  const double d = std::min((double(k) - lk - 5) * ls + 1,
                            std::log2(double(n)) - lk + 1);
  return {m, static_cast<long>(std::floor(d))};
}

std::optional<ShatterCertificate> build_shattered_set(std::size_t n,
                                                      std::size_t k,
                                                      int sigma) {
  const ShatterParams p = shatter_params(n, k, sigma);
  if (p.m < 1) return std::nullopt;
  const auto m = static_cast<std::size_t>(p.m);
  const std::size_t len = pattern_length(m);
  if (len > k) throw std::logic_error("T_m pattern longer than k");
  long d = std::max(p.d, 0L);
  while (d > 0 && (std::size_t{1} << (d - 1)) * len > n) --d;
  check_dimension(d);
  const TmFamily tm = build_tm(m, sigma, std::size_t{1} << d);
  ShatterCertificate cert;
  cert.m = m;
  cert.cls = {sigma, n, k, Variant::kAtMostK, 1};
  cert.strings = shattered_strings(tm.members, d, n);
  for (const Symbols& p : tm.members) cert.hypotheses.push_back({p});
  cert.mapping = identity(tm.members.size());
  return cert;
}

std::optional<ShatterCertificate> build_shattered_multi(std::size_t n,
                                                        std::size_t k,
                                                        int sigma,
                                                        std::size_t c,
                                                        Variant variant) {
  if (variant != Variant::kAnd && variant != Variant::kOr) {
    throw InputError("multi-pattern certificates are AND or OR");
  }
  if (c < 1 || c > k) throw InputError("pattern count must satisfy 1 <= c <= k");
  auto base = build_shattered_set(n, k, sigma);
  if (!base || c == 1) return base;
  const std::size_t len = pattern_length(base->m);
  ShatterCertificate cert;
  cert.m = base->m;
  cert.cls = {sigma, n, k, variant, c};
  if (variant == Variant::kAnd) {
    if (c > len) {
      throw InputError("AND needs c <= pattern length " + std::to_string(len));
    }
    cert.strings = std::move(base->strings);
    for (const auto& h : base->hypotheses) {
      std::vector<Symbols> prefixes;
      for (std::size_t l = len - c + 1; l <= len; ++l) {
        prefixes.emplace_back(h[0].begin(), h[0].begin() + l);
      }
      cert.hypotheses.push_back(std::move(prefixes));
    }
    cert.mapping = std::move(base->mapping);
    return cert;
  }
  const std::size_t d = base->d();
  if (d < 1 || c + 1 > (std::size_t{1} << (d - 1))) {
    throw InputError("OR needs c <= 2^(d-1) - 1 (d=" + std::to_string(d) + ")");
  }
  const std::size_t half = std::size_t{1} << (d - 1);
  std::vector<Symbols> kept;
  for (std::size_t j = 0; j < half; ++j) kept.push_back(base->hypotheses[j][0]);
  cert.strings = shattered_strings(kept, d - 1, n);
  for (std::size_t j = 0; j < half; ++j) {
    std::vector<Symbols> h{kept[j]};
    for (std::size_t e = 0; e + 1 < c; ++e) {
      h.push_back(base->hypotheses[half + e][0]);
    }
    cert.hypotheses.push_back(std::move(h));
  }
  cert.mapping = identity(half);
  return cert;
}

std::optional<ShatterCertificate> build_shattered_exact_k(std::size_t n,
                                                          std::size_t k,
                                                          int sigma) {
  const ShatterParams p = shatter_exact_params(n, k, sigma);
  if (p.m < 1) return std::nullopt;
  const auto m = static_cast<std::size_t>(p.m);
  const std::size_t len = pattern_length(m);
  if (len > k) throw std::logic_error("T_m pattern longer than k");
  long d = std::max(p.d, 0L);
  while (d > 0 && (std::size_t{1} << d) > tm_guaranteed_size(m, sigma)) --d;
  while (d > 0 && (std::size_t{1} << (d - 1)) * k > n) --d;
  check_dimension(d);
  TmFamily tm = build_tm(m, sigma, std::size_t{1} << d);
  for (Symbols& member : tm.members) member.insert(member.begin(), k - len, 1);
  ShatterCertificate cert;
  cert.m = m;
  cert.cls = {sigma, n, k, Variant::kExactlyK, 1};
  cert.strings = shattered_strings(tm.members, d, n);
  for (const Symbols& q : tm.members) cert.hypotheses.push_back({q});
  cert.mapping = identity(tm.members.size());
  return cert;
}

bool verify_shattering(const ShatterCertificate& cert,
                       const HypothesisClass& cls) {
  const std::size_t d = cert.d();
  if (d > kMaxShatterDimension) {
    throw CapacityError("shattering checks limited to d <= " +
                        std::to_string(kMaxShatterDimension));
  }
  if (cert.mapping.size() != (std::size_t{1} << d)) return false;
  for (const Symbols& s : cert.strings) {
    if (s.size() != cls.n) return false;
    for (Symbol c : s) {
      if (c >= cls.sigma) return false;
    }
  }
  for (const auto& h : cert.hypotheses) {
    try {
      check_hypothesis(cls, h);
    } catch (const InputError&) {
      return false;
    }
  }
  for (std::size_t subset = 0; subset < cert.mapping.size(); ++subset) {
    const std::size_t idx = cert.mapping[subset];
    if (idx >= cert.hypotheses.size()) return false;
    for (std::size_t i = 0; i < d; ++i) {
      const bool in = (subset >> i) & 1U;
      if (classify(cls, cert.hypotheses[idx], cert.strings[i]) != in) {
        return false;
      }
    }
  }
  return true;
}

std::string certificate_json(const ShatterCertificate& cert) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["strings"] = ordered_json::array();
  for (const Symbols& s : cert.strings) j["strings"].push_back(core::to_string(s));
  const bool single = cert.cls.variant == Variant::kAtMostK ||
                      cert.cls.variant == Variant::kExactlyK;
  j["patterns"] = ordered_json::array();
  for (const auto& h : cert.hypotheses) {
    if (single) {
      j["patterns"].push_back(core::to_string(h.front()));
    } else {
      ordered_json list = ordered_json::array();
      for (const Symbols& p : h) list.push_back(core::to_string(p));
      j["patterns"].push_back(std::move(list));
    }
  }
  j["mapping"] = cert.mapping;
  return j.dump(2);
}

}  // namespace smlab::learning

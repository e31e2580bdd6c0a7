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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "smlab/circuits/builders.hpp"
#include "smlab/circuits/equivalence.hpp"
#include "smlab/circuits/serialize.hpp"
#include "smlab/comm/verify.hpp"
#include "smlab/core/counting.hpp"
#include "smlab/core/oracle.hpp"
#include "smlab/core/periods.hpp"
#include "smlab/error.hpp"
#include "smlab/learning/erm.hpp"
#include "smlab/learning/pac.hpp"
#include "smlab/learning/shatter.hpp"
#include "smlab/learning/tm.hpp"
#include "smlab/learning/vc.hpp"

namespace py = pybind11;
using namespace smlab;

namespace {

std::string big_str(const BigInt& v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

py::dict row_dict(const ReportRow& r) {
  py::dict d;
  d["n"] = r.n;
  d["k"] = r.k;
  d["protocol"] = r.protocol;
  d["mode"] = r.mode;
  d["trials"] = r.trials;
  d["errors"] = r.errors;
  d["max_bits"] = r.max_bits;
  d["mean_bits"] = r.mean_bits;
  d["seed"] = r.seed;
  return d;
}

py::object certificate(const std::optional<learning::ShatterCertificate>& c) {
  if (!c) return py::none();
  py::dict d;
  std::vector<std::string> strings;
  for (const auto& s : c->strings) strings.push_back(core::to_string(s));
  std::vector<std::vector<std::string>> hypotheses;
  for (const auto& h : c->hypotheses) {
    std::vector<std::string> list;
    for (const auto& p : h) list.push_back(core::to_string(p));
    hypotheses.push_back(std::move(list));
  }
  d["d"] = c->d();
  d["m"] = c->m;
  d["strings"] = strings;
  d["hypotheses"] = hypotheses;
  d["verified"] = learning::verify_shattering(*c);
  return d;
}

learning::Variant variant_of(const std::string& s) {
  if (s == "and") return learning::Variant::kAnd;
  if (s == "or") return learning::Variant::kOr;
  if (s == "exact") return learning::Variant::kExactlyK;
  if (s == "at-most") return learning::Variant::kAtMostK;
  throw InputError("unknown variant '" + s + "'");
}

}  // namespace

PYBIND11_MODULE(_smlab, m) {
  m.doc() = "String matching complexity workbench";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
  py::register_exception<CapacityError>(m, "CapacityError", PyExc_RuntimeError);

  m.def(
      "sm",
      [](const std::string& x, const std::string& y, int sigma) {
        return core::sm_oracle(core::Text::parse(x, sigma),
                               core::Pattern::parse(y, sigma));
      },
      py::arg("x"), py::arg("y"), py::arg("sigma") = 2);
  m.def(
      "period_orders",
      [](const std::string& x) {
        const auto info = core::period_orders(core::Text::parse(x, 2));
        return py::make_tuple(info.orders, info.primitive_order);
      },
      py::arg("x"));

  m.def("count_avoiding",
        [](std::size_t n, std::size_t k) {
          return big_str(core::count_avoiding(n, k));
        });
  m.def("count_zero_preimages", [](std::size_t n, std::size_t k) {
    return big_str(core::count_zero_preimages(n, k));
  });
  m.def("min_maxterm_width", &core::min_maxterm_width);

  m.def(
      "verify_protocol",
      [](const std::string& protocol, std::size_t n, std::size_t k,
         const std::string& mode, std::uint64_t trials, std::uint64_t seed,
         bool exact) {
        comm::VerifyConfig cfg;
        cfg.protocol = comm::parse_protocol(protocol);
        cfg.n = n;
        cfg.k = k ? k : comm::default_k(cfg.protocol, n);
        cfg.mode = comm::parse_mode(mode);
        cfg.trials = trials;
        cfg.seed = seed;
        cfg.exact = exact;
        return row_dict(comm::verify_protocol(cfg).summary);
      },
      py::arg("protocol"), py::arg("n"), py::arg("k") = 0,
      py::arg("mode") = "exhaustive", py::arg("trials") = 1000,
      py::arg("seed") = kDefaultSeed, py::arg("exact") = false);

  m.def(
      "build_circuit",
      [](const std::string& kind, std::size_t n, std::size_t k) {
        circuits::Circuit c = kind == "threshold2"
                                  ? circuits::build_threshold_depth2(n, k)
                              : kind == "dnf" ? circuits::build_dnf(n, k)
                              : kind == "depth3"
                                  ? circuits::build_depth3(n, k)
                                  : throw InputError("unknown circuit '" + kind + "'");
        return circuits::to_text(c);
      },
      py::arg("kind"), py::arg("n"), py::arg("k"));
  m.def(
      "verify_circuit",
      [](const std::string& text, bool exhaustive, std::uint64_t trials,
         std::uint64_t seed) {
        const auto c = circuits::from_text(text);
        const auto rep = circuits::verify_equivalence(
            c,
            exhaustive ? circuits::CheckMode::kExhaustive
                       : circuits::CheckMode::kMonteCarlo,
            trials, seed);
        return row_dict(rep.summary);
      },
      py::arg("text"), py::arg("exhaustive") = true, py::arg("trials") = 100000,
      py::arg("seed") = kDefaultSeed);

  m.def(
      "erm_learn",
      [](const std::vector<std::pair<std::string, bool>>& samples,
         std::size_t k, int sigma) {
        std::vector<learning::Sample> parsed;
        for (const auto& [s, label] : samples) {
          parsed.push_back({core::parse_symbols(s, sigma), label});
        }
        const auto r = learning::erm_learn(parsed, k, sigma);
        return py::make_tuple(core::to_string(r.pattern), r.errors);
      },
      py::arg("samples"), py::arg("k"), py::arg("sigma") = 2);
  m.def(
      "pac_experiment",
      [](const std::string& target, std::size_t n, std::size_t k,
         double epsilon, double delta, std::size_t trials, std::uint64_t seed,
         bool planted, std::size_t test_size) {
        learning::PacConfig cfg;
        cfg.target = core::parse_symbols(target, 2);
        cfg.n = n;
        cfg.k = k;
        cfg.epsilon = epsilon;
        cfg.delta = delta;
        cfg.trials = trials;
        cfg.seed = seed;
        cfg.distribution = planted ? learning::Distribution::kPlanted
                                   : learning::Distribution::kUniform;
        cfg.test_size = test_size;
        const auto r = learning::pac_experiment(cfg);
        py::dict d;
        d["m_samples"] = r.m_samples;
        d["successes"] = r.successes;
        d["trials"] = r.trials.size();
        return d;
      },
      py::arg("target"), py::arg("n") = 100, py::arg("k") = 4,
      py::arg("epsilon") = 0.1, py::arg("delta") = 0.1, py::arg("trials") = 100,
      py::arg("seed") = kDefaultSeed, py::arg("planted") = false,
      py::arg("test_size") = 10000);
  m.def(
      "vc_exact",
      [](const std::vector<std::string>& pool, std::size_t k, int sigma,
         const std::string& variant) {
        std::vector<core::Symbols> parsed;
        for (const auto& s : pool) parsed.push_back(core::parse_symbols(s, sigma));
        const std::size_t n = parsed.empty() ? 0 : parsed.front().size();
        return learning::vc_exact({sigma, n, k, variant_of(variant), 1}, parsed);
      },
      py::arg("pool"), py::arg("k"), py::arg("sigma") = 2,
      py::arg("variant") = "at-most");
  m.def(
      "shattered_set",
      [](std::size_t n, std::size_t k, int sigma) {
        return certificate(learning::build_shattered_set(n, k, sigma));
      },
      py::arg("n"), py::arg("k"), py::arg("sigma") = 2);
  m.def(
      "shattered_multi",
      [](std::size_t n, std::size_t k, int sigma, std::size_t c,
         const std::string& variant) {
        return certificate(learning::build_shattered_multi(n, k, sigma, c,
                                                           variant_of(variant)));
      },
      py::arg("n"), py::arg("k"), py::arg("sigma") = 2, py::arg("c") = 2,
      py::arg("variant") = "and");
  m.def(
      "shattered_exact_k",
      [](std::size_t n, std::size_t k, int sigma) {
        return certificate(learning::build_shattered_exact_k(n, k, sigma));
      },
      py::arg("n"), py::arg("k"), py::arg("sigma") = 2);
  m.def(
      "tm_family",
      [](std::size_t m_param, int sigma) {
        std::vector<std::string> out;
        for (const auto& s : learning::tm_full_family(m_param, sigma).members) {
          out.push_back(core::to_string(s));
        }
        return out;
      },
      py::arg("m"), py::arg("sigma") = 2);
}

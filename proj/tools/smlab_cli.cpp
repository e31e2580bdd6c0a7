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

// smlab: command-line runner for the string matching workbench.
//
// Exit codes: 0 success (including informational degenerate parameters),
// 1 a verification failed, 2 invalid input, 3 capacity limit reached.

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "smlab/circuits/builders.hpp"
#include "smlab/circuits/equivalence.hpp"
#include "smlab/circuits/serialize.hpp"
#include "smlab/circuits/sparse.hpp"
#include "smlab/comm/reductions.hpp"
#include "smlab/comm/verify.hpp"
#include "smlab/core/counting.hpp"
#include "smlab/core/oracle.hpp"
#include "smlab/core/text.hpp"
#include "smlab/error.hpp"
#include "smlab/learning/erm.hpp"
#include "smlab/learning/pac.hpp"
#include "smlab/learning/shatter.hpp"
#include "smlab/learning/tm.hpp"
#include "smlab/learning/vc.hpp"
#include "smlab/report.hpp"

namespace {

using namespace smlab;
using core::Symbols;
using core::Text;

constexpr int kExitFailed = 1;
constexpr int kExitInput = 2;
constexpr int kExitCapacity = 3;

struct Options {
  std::size_t n = 0;
  std::size_t k = 0;
  int sigma = 2;
  std::size_t b = 0;
  std::size_t c = 1;
  std::string mode;
  std::uint64_t trials = 0;
  std::uint64_t seed = kDefaultSeed;
  std::string out;
  std::string format = "csv";
  bool exact = false;
};

// Writes to --out when given, stdout otherwise.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw InputError("cannot open " + path + " for writing");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }
  bool to_file() const { return file_ != nullptr; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string s = ss.str();
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.pop_back();
  }
  return s;
}

// Strings given inline or as @path.
std::string inline_or_file(const std::string& arg) {
  return !arg.empty() && arg[0] == '@' ? read_file(arg.substr(1)) : arg;
}

void add_common(CLI::App* app, Options& o, bool with_k = true) {
  app->add_option("--n", o.n, "Text length");
  if (with_k) app->add_option("--k", o.k, "Pattern length");
  app->add_option("--sigma", o.sigma, "Alphabet size")->check(CLI::Range(2, 36));
  app->add_option("--seed", o.seed, "Random seed");
  app->add_option("--out", o.out, "Output file (stdout if omitted)");
  app->add_option("--format", o.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
}

void require(bool ok, const std::string& what) {
  if (!ok) throw InputError(what);
}

// ---------------------------------------------------------------- comm

int run_comm_protocol(comm::ProtocolId id, const Options& o,
                      const std::vector<std::size_t>& sizes,
                      std::size_t bipartitions, unsigned ubpp_trials) {
  comm::VerifyConfig cfg;
  cfg.protocol = id;
  cfg.seed = o.seed;
  cfg.exact = o.exact;
  cfg.bipartitions = bipartitions;
  cfg.ubpp_trials = ubpp_trials;
  if (o.b) cfg.block = o.b;
  cfg.trials = o.trials ? o.trials : 1000;
  Sink sink(o.out);
  const Format fmt = parse_format(o.format);

  if (!sizes.empty()) {
    cfg.k = o.k;
    cfg.mode = o.mode.empty() ? comm::VerifyMode::kMonteCarlo
                              : comm::parse_mode(o.mode);
    const auto rows = comm::cost_table(cfg, sizes);
    write_rows(sink.stream(), rows, fmt);
    return 0;
  }

  require(o.n >= 1, "--n is required");
  cfg.n = o.n;
  cfg.k = o.k ? o.k : comm::default_k(id, o.n);
  if (o.mode.empty()) {
    cfg.mode = cfg.n + cfg.k <= comm::kMaxExhaustiveProtocolBits
                   ? comm::VerifyMode::kExhaustive
                   : comm::VerifyMode::kMonteCarlo;
  } else {
    cfg.mode = comm::parse_mode(o.mode);
  }
  const comm::VerificationReport rep = comm::verify_protocol(cfg);
  write_rows(sink.stream(), std::span(&rep.summary, 1), fmt);
  for (const auto& ce : rep.counterexamples) {
    std::cerr << "counterexample: " << ce << '\n';
  }

  const bool randomized = !cfg.exact && id != comm::ProtocolId::kFixedPattern &&
                          id != comm::ProtocolId::kSmallK;
  const bool ubpp = id == comm::ProtocolId::kUbppPeriod ||
                    id == comm::ProtocolId::kUbppSm;
  bool ok;
  if (randomized && !ubpp) {
    ok = rep.summary.error_rate() <= 1.0 / 3.0;
  } else {
    ok = rep.summary.errors == 0;
  }
  std::ostream& info = sink.to_file() ? std::cout : std::cerr;
  info << protocol_name(id) << ": n=" << cfg.n << " k=" << cfg.k
       << " trials=" << rep.summary.trials << " errors=" << rep.summary.errors
       << " error_rate=" << format_decimal(rep.summary.error_rate())
       << " max_bits=" << rep.summary.max_bits;
  if (ubpp) info << " unambiguous=" << (ok ? "true" : "false");
  info << '\n';
  return ok ? 0 : kExitFailed;
}

Symbols parse_bits(const std::string& s) { return core::parse_symbols(s, 2); }

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw InputError("not an integer: '" + item + "'");
    }
  }
  return out;
}

void print_instance(std::ostream& out, const comm::ReducedInstance& inst,
                    bool expected) {
  const bool sm = core::contains(inst.x, inst.y);
  out << "x=" << core::to_string(inst.x) << "\ny=" << core::to_string(inst.y)
      << "\nowner=" << inst.owner.str() << "\nsource=" << expected
      << "\nsm=" << sm << '\n';
}

// Every pair of m-bit vectors (DISJ) or of [1,k]^m vectors (OR-GT).
int reduction_grid(bool disj, std::size_t m, std::size_t k) {
  std::uint64_t checked = 0;
  std::uint64_t wrong = 0;
  if (disj) {
    for (std::uint64_t a = 0; a < (1ULL << m); ++a) {
      for (std::uint64_t b = 0; b < (1ULL << m); ++b) {
        const Symbols av = core::unpack_bits(a, m);
        const Symbols bv = core::unpack_bits(b, m);
        const auto inst = comm::reduce_disj_to_sm(av, bv, k);
        wrong += core::contains(inst.x, inst.y) != comm::disj(av, bv);
        ++checked;
      }
    }
  } else {
    std::uint64_t combos = 1;
    for (std::size_t i = 0; i < m; ++i) combos *= k;
    for (std::uint64_t ca = 0; ca < combos; ++ca) {
      for (std::uint64_t cb = 0; cb < combos; ++cb) {
        std::vector<int> a(m), b(m);
        std::uint64_t ra = ca, rb = cb;
        for (std::size_t i = 0; i < m; ++i) {
          a[i] = int(ra % k) + 1;
          b[i] = int(rb % k) + 1;
          ra /= k;
          rb /= k;
        }
        const auto inst = comm::reduce_or_gt_to_sm(a, b, k);
        wrong += core::contains(inst.x, inst.y) != comm::or_gt(a, b);
        ++checked;
      }
    }
  }
  std::cout << (disj ? "reduce-disj" : "reduce-orgt") << ": m=" << m
            << " k=" << k << " checked=" << checked << " mismatches=" << wrong
            << '\n';
  return wrong == 0 ? 0 : kExitFailed;
}

// ------------------------------------------------------------- circuits

struct CircuitBuilder {
  std::string name;
  std::function<circuits::Circuit(std::size_t, std::size_t)> build;
  std::function<std::uint64_t(std::uint64_t, std::uint64_t)> formula;
};

int run_circuit(const CircuitBuilder& builder, const Options& o,
                const std::string& verify) {
  require(o.n >= 1 && o.k >= 1 && o.k <= o.n, "need 1 <= --k <= --n");
  const circuits::Circuit c = builder.build(o.n, o.k);
  const std::uint64_t expected = builder.formula(o.n, o.k);
  if (!o.out.empty()) {
    Sink sink(o.out);
    circuits::write_circuit(sink.stream(), c);
  }
  bool ok = c.size() == expected;
  std::cout << builder.name << ": n=" << o.n << " k=" << o.k
            << " size=" << c.size() << " expected=" << expected
            << " depth=" << c.depth() << '\n';
  std::string mode = verify;
  if (mode.empty()) {
    mode = o.n + o.k <= circuits::kMaxExhaustiveCircuitBits ? "exhaustive"
                                                            : "montecarlo";
  }
  if (mode != "none") {
    const auto check_mode = mode == "exhaustive"
                                ? circuits::CheckMode::kExhaustive
                                : circuits::CheckMode::kMonteCarlo;
    const auto rep = circuits::verify_equivalence(
        c, check_mode, o.trials ? o.trials : 100000, o.seed, builder.name);
    std::cout << "verify: mode=" << mode << " inputs=" << rep.summary.trials
              << " mismatches=" << rep.summary.errors << '\n';
    for (const auto& ce : rep.counterexamples) {
      std::cerr << "counterexample: " << ce << '\n';
    }
    ok = ok && rep.summary.errors == 0;
  }
  return ok ? 0 : kExitFailed;
}

int run_sparse(std::size_t ell, std::size_t t, const std::string& ones_arg,
               const std::string& variant_name, const Options& o) {
  const auto variant = variant_name == "odd" ? circuits::DupVariant::kOdd
                                             : circuits::DupVariant::kEven;
  std::vector<Symbols> ones;
  if (!ones_arg.empty()) {
    std::stringstream ss(ones_arg);
    std::string item;
    while (std::getline(ss, item, ',')) ones.push_back(parse_bits(item));
    require(!ones.empty(), "--ones is empty");
    ell = ones.front().size();
  } else {
    require(ell >= 1 && ell <= circuits::kMaxSparseEll,
            "--ell must lie in [1, 14]");
    const std::uint64_t space = 1ULL << ell;
    require(t >= 1 && t <= space, "--t must lie in [1, 2^ell]");
    // Partial Fisher-Yates over the 2^ell inputs.
    Rng rng(o.seed);
    std::vector<std::uint64_t> pool(space);
    for (std::uint64_t i = 0; i < space; ++i) pool[i] = i;
    for (std::size_t i = 0; i < t; ++i) {
      std::swap(pool[i], pool[i + rng.below(space - i)]);
      ones.push_back(core::unpack_bits(pool[i], ell));
    }
  }
  const circuits::SparseFunction f(ell, ones);
  const Symbols x = circuits::sparse_encode(f, std::nullopt, variant);
  const bool ok = circuits::verify_sparse_reduction(f, variant);
  std::cout << "sparse-verify: ell=" << ell << " t=" << f.t()
            << " |x_f|=" << x.size() << " verified=" << (ok ? "true" : "false")
            << '\n';
  if (!o.out.empty()) {
    Sink sink(o.out);
    sink.stream() << core::to_string(x) << '\n';
  }
  return ok ? 0 : kExitFailed;
}

// ------------------------------------------------------------- learning

std::vector<learning::Sample> read_samples(const std::string& path,
                                           int sigma) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::vector<learning::Sample> samples;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::stringstream ss(line);
    std::string text, label;
    if (!(ss >> text >> label) || (label != "0" && label != "1")) {
      throw InputError(path + ":" + std::to_string(lineno) +
                       ": expected '<string> <0|1>'");
    }
    samples.push_back({core::parse_symbols(text, sigma), label == "1"});
  }
  return samples;
}

Symbols default_target(std::size_t k) {
  Symbols t;
  const Symbols cycle{0, 1, 1, 0};
  for (std::size_t i = 0; i < k; ++i) t.push_back(cycle[i % 4]);
  return t;
}

int report_certificate(const std::optional<learning::ShatterCertificate>& cert,
                       const std::string& label, const Options& o) {
  if (!cert) {
    std::cout << label << ": degenerate: VC bound trivial (m < 1) for n=" << o.n
              << " k=" << o.k << " sigma=" << o.sigma << '\n';
    return 0;
  }
  const bool ok = learning::verify_shattering(*cert);
  std::cout << label << ": n=" << o.n << " k=" << o.k << " sigma=" << o.sigma
            << " m=" << cert->m << " d=" << cert->d()
            << " patterns=" << cert->hypotheses.size()
            << " verified=" << (ok ? "true" : "false") << '\n';
  if (!o.out.empty()) {
    Sink sink(o.out);
    sink.stream() << learning::certificate_json(*cert) << '\n';
  }
  return ok ? 0 : kExitFailed;
}

learning::Variant parse_variant(const std::string& s) {
  if (s == "and") return learning::Variant::kAnd;
  if (s == "or") return learning::Variant::kOr;
  if (s == "exact") return learning::Variant::kExactlyK;
  if (s == "at-most") return learning::Variant::kAtMostK;
  throw InputError("unknown variant '" + s + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"String matching complexity workbench"};
  app.require_subcommand(1);
  Options o;
  std::function<int()> action;

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Print SM(x, y) as 0 or 1");
  std::string text_arg, pattern_arg;
  oracle->add_option("x", text_arg, "Text, or @file")->required();
  oracle->add_option("y", pattern_arg, "Pattern, or @file")->required();
  oracle->add_option("--sigma", o.sigma, "Alphabet size")
      ->check(CLI::Range(2, 36));
  oracle->callback([&] {
    action = [&] {
      const auto x = Text::parse(inline_or_file(text_arg), o.sigma);
      const auto y = Text::parse(inline_or_file(pattern_arg), o.sigma);
      if (y.size() > x.size()) {
        std::cout << 0 << '\n';
        return 0;
      }
      std::cout << (y.empty() || core::contains(x.symbols(), y.symbols()))
                << '\n';
      return 0;
    };
  });

  // comm
  auto* comm_cmd = app.add_subcommand("comm", "Communication protocols");
  comm_cmd->require_subcommand(1);
  std::vector<std::size_t> sizes;
  std::size_t bipartitions = 3;
  unsigned ubpp_trials = 200;
  for (const char* name :
       {"small-k", "large-k", "fixed-pattern", "ubpp-period", "ubpp-sm"}) {
    auto* sub = comm_cmd->add_subcommand(name, "Verify against the oracle");
    add_common(sub, o);
    sub->add_option("--b", o.b, "Block length (large-k)");
    sub->add_option("--mode", o.mode, "exhaustive or montecarlo")
        ->check(CLI::IsMember({"exhaustive", "montecarlo", "monte-carlo"}));
    sub->add_option("--trials", o.trials, "Monte Carlo inputs");
    sub->add_flag("--exact", o.exact, "Zero-error equality tests");
    sub->add_option("--bipartitions", bipartitions,
                    "Bipartitions per input in exhaustive mode");
    sub->add_option("--ubpp-trials", ubpp_trials,
                    "Verifications per witness (randomized UBPP)");
    sub->add_option("--sizes", sizes, "Cost table over these n")
        ->delimiter(',');
    const std::string proto = name;
    sub->callback([&, proto] {
      action = [&, proto] {
        std::string mode = o.mode == "monte-carlo" ? "montecarlo" : o.mode;
        Options local = o;
        local.mode = mode;
        return run_comm_protocol(comm::parse_protocol(proto), local, sizes,
                                 bipartitions, ubpp_trials);
      };
    });
  }
  std::string left_arg, right_arg;
  std::size_t grid_m = 0;
  auto* disj = comm_cmd->add_subcommand("reduce-disj", "DISJ to SM reduction");
  auto* orgt = comm_cmd->add_subcommand("reduce-orgt", "OR-GT to SM reduction");
  for (auto* sub : {disj, orgt}) {
    sub->add_option("a", left_arg, "Alice's vector");
    sub->add_option("b", right_arg, "Bob's vector");
    sub->add_option("--k", o.k, "Reduction parameter")->required();
    sub->add_option("--m", grid_m, "Check every pair of length-m vectors");
  }
  disj->callback([&] {
    action = [&] {
      if (grid_m) return reduction_grid(true, grid_m, o.k);
      require(!left_arg.empty() && !right_arg.empty(),
              "give two bit vectors or --m");
      const Symbols a = parse_bits(left_arg), b = parse_bits(right_arg);
      const auto inst = comm::reduce_disj_to_sm(a, b, o.k);
      print_instance(std::cout, inst, comm::disj(a, b));
      return core::contains(inst.x, inst.y) == comm::disj(a, b) ? 0
                                                                : kExitFailed;
    };
  });
  orgt->callback([&] {
    action = [&] {
      if (grid_m) return reduction_grid(false, grid_m, o.k);
      require(!left_arg.empty() && !right_arg.empty(),
              "give two comma-separated vectors or --m");
      const auto a = parse_ints(left_arg), b = parse_ints(right_arg);
      const auto inst = comm::reduce_or_gt_to_sm(a, b, o.k);
      print_instance(std::cout, inst, comm::or_gt(a, b));
      std::cout << "longest_run=" << comm::longest_one_run(inst.x) << '\n';
      return core::contains(inst.x, inst.y) == comm::or_gt(a, b) ? 0
                                                                 : kExitFailed;
    };
  });

  // circuit
  auto* circuit = app.add_subcommand("circuit", "Circuit constructions");
  circuit->require_subcommand(1);
  std::string verify_mode;
  const std::vector<CircuitBuilder> builders{
      {"threshold2", [](auto n, auto k) { return circuits::build_threshold_depth2(n, k); },
       [](auto n, auto k) { return 2 * n - 2 * k + 3; }},
      {"dnf", [](auto n, auto k) { return circuits::build_dnf(n, k); },
       [](auto n, auto k) { return (n - k + 1) * (std::uint64_t{1} << k) + 1; }},
      {"depth3", [](auto n, auto k) { return circuits::build_depth3(n, k); },
       [](auto n, auto k) { return (n - k + 1) * (2 * k + 1) + 1; }},
  };
  for (const CircuitBuilder& builder : builders) {
    auto* sub = circuit->add_subcommand(builder.name, "Build and verify");
    add_common(sub, o);
    sub->add_option("--verify", verify_mode,
                    "exhaustive, montecarlo or none (default by size)")
        ->check(CLI::IsMember({"exhaustive", "montecarlo", "none"}));
    sub->add_option("--trials", o.trials, "Monte Carlo inputs");
    sub->callback([&, &builder = builder] {
      action = [&] { return run_circuit(builder, o, verify_mode); };
    });
  }
  std::size_t ell = 3, ones_count = 1;
  std::string ones_arg, dup_variant = "even";
  auto* sparse = circuit->add_subcommand("sparse-verify",
                                         "Check f(y) = SM(x_f, dup(y))");
  add_common(sparse, o, false);
  sparse->add_option("--ell", ell, "Input length of f");
  sparse->add_option("--t", ones_count, "Number of ones of a random f");
  sparse->add_option("--ones", ones_arg, "Explicit ones, comma-separated");
  sparse->add_option("--variant", dup_variant, "even or odd delimiter")
      ->check(CLI::IsMember({"even", "odd"}));
  sparse->callback([&] {
    action = [&] { return run_sparse(ell, ones_count, ones_arg, dup_variant, o); };
  });

  // learn
  auto* learn = app.add_subcommand("learn", "Pattern learning");
  learn->require_subcommand(1);
  std::string target_arg, samples_path, distribution = "uniform",
                                        variant_name, pool_arg = "all";
  double epsilon = 0.1, delta = 0.1, plant_rate = 0.5, constant = 4.0,
         noise = 0.0;
  std::size_t test_size = 10000, sample_count = 100, tm_m = 1, tm_count = 0;

  auto* erm = learn->add_subcommand("erm", "Empirical risk minimization");
  add_common(erm, o);
  erm->add_option("--samples", samples_path, "File of '<string> <label>' lines");
  erm->add_option("--target", target_arg, "Labeling pattern for generated data");
  erm->add_option("--m", sample_count, "Generated sample count");
  erm->add_option("--noise", noise, "Label flip probability")
      ->check(CLI::Range(0.0, 1.0));
  erm->callback([&] {
    action = [&] {
      std::vector<learning::Sample> samples;
      if (!samples_path.empty()) {
        samples = read_samples(samples_path, o.sigma);
      } else {
        require(o.n >= 1, "--n is required without --samples");
        learning::PacConfig cfg;
        cfg.sigma = o.sigma;
        cfg.n = o.n;
        cfg.target = target_arg.empty()
                         ? default_target(std::min(o.k ? o.k : 4, o.n))
                         : core::parse_symbols(target_arg, o.sigma);
        Rng rng(o.seed);
        for (std::size_t i = 0; i < sample_count; ++i) {
          auto s = learning::draw_sample(cfg, rng);
          if (noise > 0 && rng.uniform() < noise) s.label = !s.label;
          samples.push_back(std::move(s));
        }
      }
      const std::size_t k = o.k ? o.k : 4;
      const auto r = learning::erm_learn(samples, k, o.sigma);
      std::cout << "pattern="
                << (r.pattern.empty() ? "(empty)" : core::to_string(r.pattern))
                << " errors=" << r.errors << " samples=" << samples.size()
                << " loss=" << format_decimal(r.loss) << '\n';
      return 0;
    };
  });

  auto* pac = learn->add_subcommand("pac", "PAC learning experiment");
  add_common(pac, o);
  pac->add_option("--target", target_arg, "Target pattern (default 0110...)");
  pac->add_option("--eps", epsilon, "Accuracy parameter");
  pac->add_option("--delta", delta, "Confidence parameter");
  pac->add_option("--trials", o.trials, "Independent trials");
  pac->add_option("--distribution", distribution, "uniform or planted")
      ->check(CLI::IsMember({"uniform", "planted"}));
  pac->add_option("--rate", plant_rate, "Plant rate for planted");
  pac->add_option("--C", constant, "Sample size constant");
  pac->add_option("--test-size", test_size, "Fresh test samples per trial");
  pac->callback([&] {
    action = [&] {
      learning::PacConfig cfg;
      cfg.sigma = o.sigma;
      cfg.n = o.n ? o.n : 100;
      cfg.k = o.k ? o.k : 4;
      cfg.target = target_arg.empty()
                       ? default_target(std::min(cfg.k, cfg.n))
                       : core::parse_symbols(target_arg, o.sigma);
      cfg.epsilon = epsilon;
      cfg.delta = delta;
      cfg.trials = o.trials ? o.trials : 100;
      cfg.seed = o.seed;
      cfg.distribution = distribution == "planted"
                             ? learning::Distribution::kPlanted
                             : learning::Distribution::kUniform;
      cfg.plant_rate = plant_rate;
      cfg.sample_constant = constant;
      cfg.test_size = test_size;
      const auto report = learning::pac_experiment(cfg);
      Sink sink(o.out);
      if (sink.to_file()) {
        learning::write_pac_report(sink.stream(), report,
                                   parse_format(o.format));
      }
      const bool ok = report.success_fraction() >= 1 - delta;
      std::cout << "pac: target=" << core::to_string(cfg.target)
                << " m=" << report.m_samples << " trials=" << cfg.trials
                << " successes=" << report.successes
                << " success_fraction="
                << format_decimal(report.success_fraction()) << '\n';
      return ok ? 0 : kExitFailed;
    };
  });

  auto* vc = learn->add_subcommand("vc", "Exact VC dimension on a pool");
  add_common(vc, o);
  vc->add_option("--pool", pool_arg, "'all' or a file of strings");
  vc->add_option("--variant", variant_name, "at-most (default) or exact");
  vc->callback([&] {
    action = [&] {
      learning::HypothesisClass cls{o.sigma, o.n, o.k,
                                    learning::Variant::kAtMostK, 1};
      if (!variant_name.empty()) cls.variant = parse_variant(variant_name);
      std::vector<Symbols> pool;
      if (pool_arg == "all") {
        require(o.n >= 1, "--n is required for --pool all");
        pool = learning::all_strings(o.n, o.sigma);
      } else {
        std::stringstream ss(read_file(pool_arg));
        std::string line;
        while (ss >> line) pool.push_back(core::parse_symbols(line, o.sigma));
        if (cls.n == 0 && !pool.empty()) cls.n = pool.front().size();
      }
      if (pool.size() > learning::kMaxVcPool) {
        throw CapacityError("pool of " + std::to_string(pool.size()) +
                            " strings exceeds " +
                            std::to_string(learning::kMaxVcPool) +
                            "; try a smaller --n");
      }
      const std::size_t value = learning::vc_exact(cls, pool);
      const double upper = learning::vc_upper_bound(cls.n, cls.k, cls.sigma);
      std::size_t lower = 0;
      if (auto cert = learning::build_shattered_set(cls.n, cls.k, cls.sigma)) {
        lower = cert->d();
      }
      std::cout << "vc=" << value << " window=[" << lower << ", " << upper
                << "] pool=" << pool.size() << '\n';
      const bool in_window = cls.variant != learning::Variant::kAtMostK ||
                             double(value) <= upper;
      return in_window ? 0 : kExitFailed;
    };
  });

  auto* shatter = learn->add_subcommand("shatter", "Shattered set certificate");
  auto* shatter_multi =
      learn->add_subcommand("shatter-multi", "AND/OR multi-pattern certificate");
  auto* shatter_exact =
      learn->add_subcommand("shatter-exact", "Exact-length certificate");
  for (auto* sub : {shatter, shatter_multi, shatter_exact}) add_common(sub, o);
  shatter_multi->add_option("--c", o.c, "Patterns per hypothesis");
  shatter_multi->add_option("--variant", variant_name, "and or or")
      ->required()
      ->check(CLI::IsMember({"and", "or"}));
  shatter->callback([&] {
    action = [&] {
      return report_certificate(
          learning::build_shattered_set(o.n, o.k, o.sigma), "shatter", o);
    };
  });
  shatter_multi->callback([&] {
    action = [&] {
      return report_certificate(
          learning::build_shattered_multi(o.n, o.k, o.sigma, o.c,
                                          parse_variant(variant_name)),
          "shatter-multi", o);
    };
  });
  shatter_exact->callback([&] {
    action = [&] {
      return report_certificate(
          learning::build_shattered_exact_k(o.n, o.k, o.sigma), "shatter-exact",
          o);
    };
  });

  auto* tm = learn->add_subcommand("tm", "Non-containment family T_m");
  tm->add_option("--m", tm_m, "Family parameter")->required();
  tm->add_option("--sigma", o.sigma, "Alphabet size")->check(CLI::Range(2, 36));
  tm->add_option("--count", tm_count, "Members (default sigma^(m-1))");
  tm->add_option("--out", o.out, "Output file (stdout if omitted)");
  tm->callback([&] {
    action = [&] {
      const std::size_t count =
          tm_count ? tm_count : learning::tm_guaranteed_size(tm_m, o.sigma);
      const auto family = learning::build_tm(tm_m, o.sigma, count);
      Sink sink(o.out);
      for (const auto& member : family.members) {
        sink.stream() << core::to_string(member) << '\n';
      }
      bool ok = true;
      if (family.members.size() <= 256) {
        ok = learning::verify_non_containment(family.members);
        (sink.to_file() ? std::cout : std::cerr)
            << "tm: m=" << tm_m << " members=" << family.members.size()
            << " non_containment=" << (ok ? "true" : "false") << '\n';
      }
      return ok ? 0 : kExitFailed;
    };
  });

  // count
  auto* count = app.add_subcommand("count", "Counting and maxterms");
  count->require_subcommand(1);
  auto* zeros = count->add_subcommand("zeros", "Inputs with SM = 0");
  auto* avoiding = count->add_subcommand("avoiding", "Strings avoiding 0^k");
  auto* maxterm = count->add_subcommand("maxterm", "Minimum maxterm width");
  for (auto* sub : {zeros, avoiding, maxterm}) {
    sub->add_option("--n", o.n, "Text length")->required();
    sub->add_option("--k", o.k, "Pattern length")->required();
  }
  zeros->callback([&] {
    action = [&] {
      std::cout << core::count_zero_preimages(o.n, o.k) << '\n';
      return 0;
    };
  });
  avoiding->callback([&] {
    action = [&] {
      std::cout << core::count_avoiding(o.n, o.k) << '\n';
      return 0;
    };
  });
  maxterm->callback([&] {
    action = [&] {
      require(o.k >= 1 && o.k <= o.n, "need 1 <= --k <= --n");
      const auto rho = core::min_maxterm(o.n, o.k);
      const std::size_t width = std::popcount(rho.support);
      const auto bound = static_cast<std::size_t>(
          std::ceil(2 * std::sqrt(double(o.n - o.k + 1))));
      std::string assignment;
      for (std::size_t i = 0; i < o.n + o.k; ++i) {
        if (i == o.n) assignment += '|';
        assignment += (rho.support >> i) & 1U
                          ? char('0' + ((rho.values >> i) & 1U))
                          : '*';
      }
      std::cout << "width=" << width << " bound=" << bound
                << " restriction=" << assignment << '\n';
      return width >= bound ? 0 : kExitFailed;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }
  try {
    return action ? action() : 0;
  } catch (const CapacityError& e) {
    std::cerr << "capacity: " << e.what() << " (try smaller parameters)\n";
    return kExitCapacity;
  } catch (const InputError& e) {
    std::cerr << "input: " << e.what() << '\n';
    return kExitInput;
  } catch (const ParameterError& e) {
    std::cerr << "parameter: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailed;
  }
}

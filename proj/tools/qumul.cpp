// Copyright 2026 The qumul Authors
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

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qumul/qumul.hpp"

namespace {

using namespace qumul;

// Exit codes: 0 ok, 1 demo assertion failure, 2 usage, 3 numeric failure,
// 4 resource cap.
constexpr int kExitOk = 0;
constexpr int kExitDemoFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitResourceCap = 4;

// Pinned seed for the demo reproduction run; documented in the README so
// the kept-shot count is exactly reproducible.
constexpr std::uint64_t kDemoSeed = 20260810;

// Reversible-circuit width guards; building beyond these is possible but
// pointless at desk scale.
constexpr std::size_t kMaxGradeBits = 128;
constexpr std::size_t kMaxKaratsubaBits = 256;
constexpr std::size_t kMaxResourceN = 4096;

struct MultiplyConfig {
  std::string a, b;
  std::string algo = "conv";
  std::string mode = "exact";
  std::uint64_t shots = 1000000;
  std::uint64_t seed = 1;
  std::string iterations = "auto";
  std::string format = "json";
  std::string output;
  std::size_t memory_cap = 0;  // 0: use env or default
};

std::size_t resolve_memory_cap(std::size_t flag_value) {
  if (flag_value != 0) return flag_value;
  if (const char* env = std::getenv("QUMUL_MEMORY_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != nullptr && *end == '\0' && v > 0)
      return static_cast<std::size_t>(v);
    throw std::invalid_argument("QUMUL_MEMORY_CAP is not a positive integer");
  }
  return Statevector::kDefaultAmpCap;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file " + path);
  out << text;
}

std::string json_text(const OrderedJson& j) { return j.dump(2) + "\n"; }

std::string outcome_to_csv(const ConvolutionOutcome& out) {
  std::ostringstream os;
  os << "key,value\n";
  os << "a," << out.a.to_string() << "\n";
  os << "b," << out.b.to_string() << "\n";
  os << "k," << out.k << "\n";
  os << "D," << out.d << "\n";
  os << "product," << out.product.to_string() << "\n";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", out.success_probability);
  os << "success_probability," << buf << "\n";
  os << "shots," << out.shots << "\n";
  os << "seed," << out.seed << "\n";
  os << "mode," << out.mode << "\n";
  for (std::size_t i = 0; i < out.coefficients.size(); ++i)
    if (out.coefficients[i] != 0)
      os << "coefficient[" << i << "]," << out.coefficients[i] << "\n";
  return os.str();
}

OrderedJson product_json(const Natural& a, const Natural& b,
                         const std::string& algo, std::size_t n,
                         const Natural& product) {
  OrderedJson j;
  j["schema"] = "qumul.product/v1";
  j["a"] = a.to_string();
  j["b"] = b.to_string();
  j["algo"] = algo;
  if (n > 0) j["n"] = n;
  j["product"] = product.to_string();
  return j;
}

int cmd_multiply(const MultiplyConfig& cfg) {
  const Natural a = Natural::from_string(cfg.a);
  const Natural b = Natural::from_string(cfg.b);
  const std::size_t cap = resolve_memory_cap(cfg.memory_cap);
  const bool conv_mode = cfg.algo == "conv" || cfg.algo == "conv-amplified";

  if (conv_mode && (a.is_zero() || b.is_zero())) {
    OrderedJson j = product_json(a, b, cfg.algo, 0, Natural{});
    j["mode"] = "classical-shortcircuit";
    j["notice"] =
        "zero operand: the digit encoding needs operands >= 1, so the "
        "product was computed classically";
    emit(cfg.format == "csv" ? "key,value\nproduct,0\nmode,classical-"
                               "shortcircuit\n"
                             : json_text(j),
         cfg.output);
    return kExitOk;
  }

  if (cfg.algo == "classical") {
    emit(json_text(product_json(a, b, "classical", 0, a * b)), cfg.output);
    return kExitOk;
  }

  if (cfg.algo == "grade" || cfg.algo == "karatsuba") {
    std::size_t n = std::max<std::size_t>(
        1, std::max(a.bit_length(), b.bit_length()));
    if (cfg.algo == "karatsuba") {
      std::size_t rounded = 4;
      while (rounded < n) rounded <<= 1;
      n = rounded;
    }
    const std::size_t limit =
        cfg.algo == "grade" ? kMaxGradeBits : kMaxKaratsubaBits;
    if (n > limit)
      throw MemoryCapError("operands need a " + std::to_string(n) +
                           "-bit circuit; the " + cfg.algo + " cap is " +
                           std::to_string(limit) + " bits");
    const MultiplierCircuit mc = cfg.algo == "grade" ? build_grade_school(n)
                                                     : build_karatsuba(n);
    const Natural product = multiply_reversible(mc, a, b);
    emit(json_text(product_json(a, b, cfg.algo, n, product)), cfg.output);
    return kExitOk;
  }

  if (conv_mode) {
    ConvolutionOutcome out;
    if (cfg.algo == "conv-amplified") {
      std::optional<unsigned> iterations;
      if (cfg.iterations != "auto") {
        std::size_t pos = 0;
        const int v = std::stoi(cfg.iterations, &pos);
        if (pos != cfg.iterations.size() || v < 0)
          throw std::invalid_argument("--iterations must be auto or a count");
        iterations = static_cast<unsigned>(v);
      }
      out = amplified_multiply(a, b, iterations, cap);
    } else if (cfg.mode == "exact") {
      out = multiply_exact(a, b, cap);
    } else if (cfg.mode == "analytic") {
      out = multiply_analytic(a, b);
    } else if (cfg.mode == "sampled") {
      out = multiply_sampled(a, b, cfg.shots, cfg.seed, cap).outcome;
    } else {
      throw std::invalid_argument("unknown --mode " + cfg.mode);
    }
    emit(cfg.format == "csv" ? outcome_to_csv(out)
                             : json_text(outcome_to_json(out)),
         cfg.output);
    return kExitOk;
  }

  throw std::invalid_argument("unknown --algo " + cfg.algo);
}

int cmd_demo(const std::string& out_dir) {
  const Natural a(8616), b(4532);
  const std::uint64_t shots = 1000000;
  const SampledRun run = multiply_sampled(a, b, shots, kDemoSeed);
  const double fraction =
      static_cast<double>(run.kept) / static_cast<double>(shots);
  const double p = 0.06875;
  const double sigma = std::sqrt(p * (1.0 - p) / static_cast<double>(shots));
  const bool in_band = std::abs(fraction - p) <= 3.0 * sigma;
  const bool product_ok = run.outcome.product == Natural(39047712);

  const std::string base = out_dir.empty() ? "." : out_dir;
  emit(histogram_to_csv(run.register_a, run.outcome.k),
       base + "/demo_histogram.csv");
  emit(json_text(histogram_to_json(run.register_a, run.outcome.k)),
       base + "/demo_histogram.json");

  OrderedJson j;
  j["schema"] = "qumul.demo/v1";
  j["a"] = "8616";
  j["b"] = "4532";
  j["shots"] = shots;
  j["seed"] = kDemoSeed;
  j["kept"] = run.kept;
  j["kept_fraction"] = fraction;
  j["expected_probability"] = p;
  j["band_3sigma"] = OrderedJson::array({p - 3 * sigma, p + 3 * sigma});
  j["product"] = run.outcome.product.to_string();
  j["expected_product"] = "39047712";
  OrderedJson coeffs = OrderedJson::object();
  for (std::size_t i = 0; i < run.outcome.coefficients.size(); ++i)
    if (run.outcome.coefficients[i] != 0)
      coeffs[std::to_string(i)] = run.outcome.coefficients[i];
  j["coefficients"] = coeffs;
  j["histogram_files"] = OrderedJson::array(
      {base + "/demo_histogram.csv", base + "/demo_histogram.json"});
  j["pass"] = in_band && product_ok;
  std::cout << json_text(j);
  return (in_band && product_ok) ? kExitOk : kExitDemoFailure;
}

int cmd_resources(const std::string& ns_arg, bool as_json,
                  const std::string& output) {
  std::vector<std::size_t> ns;
  std::stringstream ss(ns_arg);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) continue;
    std::size_t pos = 0;
    const unsigned long long v = std::stoull(token, &pos);
    if (pos != token.size() || v == 0)
      throw std::invalid_argument("--n items must be positive integers");
    if (v > kMaxResourceN)
      throw MemoryCapError("resource table capped at n <= " +
                           std::to_string(kMaxResourceN));
    ns.push_back(static_cast<std::size_t>(v));
  }
  const ComparisonTable table = comparison_table(ns);
  emit(as_json ? json_text(table_to_json(table)) : table_to_csv(table),
       output);
  return kExitOk;
}

int cmd_amplify(const std::string& a_str, const std::string& b_str,
                unsigned max_m, bool as_json, const std::string& output,
                std::size_t memory_cap) {
  const Natural a = Natural::from_string(a_str);
  const Natural b = Natural::from_string(b_str);
  const std::size_t cap = resolve_memory_cap(memory_cap);
  const auto rows = amplification_sweep(a, b, max_m, cap);
  emit(as_json ? json_text(sweep_to_json(rows)) : sweep_to_csv(rows), output);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "qumul: simulation laboratory for quantum integer multiplication "
      "(grade-school and Karatsuba reversible circuits, and the "
      "convolution-theorem multiplier with amplitude amplification)"};
  app.require_subcommand(1);

  MultiplyConfig mcfg;
  CLI::App* multiply = app.add_subcommand(
      "multiply", "multiply two integers with a selected algorithm");
  multiply->add_option("--a", mcfg.a, "first operand (decimal or 0x hex)")
      ->required();
  multiply->add_option("--b", mcfg.b, "second operand (decimal or 0x hex)")
      ->required();
  multiply
      ->add_option("--algo", mcfg.algo,
                   "conv | conv-amplified | grade | karatsuba | classical")
      ->check(CLI::IsMember(
          {"conv", "conv-amplified", "grade", "karatsuba", "classical"}));
  multiply->add_option("--mode", mcfg.mode, "exact | sampled | analytic")
      ->check(CLI::IsMember({"exact", "sampled", "analytic"}));
  multiply->add_option("--shots", mcfg.shots, "samples for --mode sampled")
      ->check(CLI::PositiveNumber);
  multiply->add_option("--seed", mcfg.seed, "RNG seed for --mode sampled");
  multiply->add_option("--iterations", mcfg.iterations,
                       "auto or a Grover iteration count (conv-amplified)");
  multiply->add_option("--format", mcfg.format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}));
  multiply->add_option("--output", mcfg.output, "output file (default stdout)");
  multiply->add_option(
      "--memory-cap", mcfg.memory_cap,
      "statevector amplitude budget (default 2^26; env QUMUL_MEMORY_CAP)");

  std::string demo_out_dir = ".";
  CLI::App* demo = app.add_subcommand(
      "demo",
      "reproduce the 8616 x 4532 sampling experiment (10^6 shots, pinned "
      "seed); writes the register-a histogram and checks the kept-shot "
      "fraction against 0.06875 +/- 3 sigma");
  demo->add_option("--out-dir", demo_out_dir,
                   "directory for demo_histogram.{csv,json}");

  std::string ns_arg;
  bool resources_json = false;
  std::string resources_output;
  CLI::App* resources = app.add_subcommand(
      "resources", "emit the depth/cost/ancilla comparison table");
  resources->add_option("--n", ns_arg, "comma-separated bit widths");
  resources->add_flag("--json", resources_json, "emit JSON instead of CSV");
  resources->add_option("--output", resources_output,
                        "output file (default stdout)");

  std::string amp_a, amp_b, amp_output;
  unsigned amp_max = 4;
  bool amp_json = false;
  std::size_t amp_cap = 0;
  CLI::App* amplify = app.add_subcommand(
      "amplify",
      "sweep Grover iterations: measured good-branch probability vs the "
      "sin^2((2m+1) theta) closed form");
  amplify->add_option("--a", amp_a, "first operand")->required();
  amplify->add_option("--b", amp_b, "second operand")->required();
  amplify->add_option("--max-iterations", amp_max, "sweep m = 0..M");
  amplify->add_flag("--json", amp_json, "emit JSON instead of CSV");
  amplify->add_option("--output", amp_output, "output file (default stdout)");
  amplify->add_option("--memory-cap", amp_cap,
                      "statevector amplitude budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    std::cerr << "error[usage]: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (multiply->parsed()) return cmd_multiply(mcfg);
    if (demo->parsed()) return cmd_demo(demo_out_dir);
    if (resources->parsed())
      return cmd_resources(ns_arg, resources_json, resources_output);
    if (amplify->parsed())
      return cmd_amplify(amp_a, amp_b, amp_max, amp_json, amp_output,
                         amp_cap);
  } catch (const MemoryCapError& e) {
    std::cerr << "error[resource-cap]: " << e.what()
              << " (exact joint statevectors are capped; --mode analytic "
                 "runs the factored pipeline classically at any size)\n";
    return kExitResourceCap;
  } catch (const PrecisionError& e) {
    std::cerr << "error[numeric-failure]: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const ImpossibleBranchError& e) {
    std::cerr << "error[numeric-failure]: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const InsufficientShotsError& e) {
    std::cerr << "error[numeric-failure]: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "error[usage]: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

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

// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Criteria 4 and 5 assert scaling bands on the dense
// all-ones operand family; the exact closed form for that family is
// p = 1/3 + 1/(6 n^2) (constant, not O(1/n)), so those bands cannot hold
// and the two criteria report FAIL by design rather than being weakened.
// The sparse power-of-two family, where p = 1/(2n) exactly, is printed
// alongside as supplementary evidence that the intended scaling laws do
// hold at the true worst case.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qumul/qumul.hpp"

using namespace qumul;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void report(int id, const std::string& name, bool pass,
            const std::string& detail) {
  std::printf("[%s] criterion %d: %s — %s\n", pass ? "PASS" : "FAIL", id,
              name.c_str(), detail.c_str());
  if (!pass) ++g_failures;
}

void info(const std::string& line) {
  std::printf("       %s\n", line.c_str());
}

Natural random_natural(std::mt19937_64& rng, std::size_t max_bits) {
  const std::size_t bits =
      std::uniform_int_distribution<std::size_t>(1, max_bits)(rng);
  Natural r;
  for (std::size_t i = 0; i < bits; ++i)
    if (rng() & 1) r = r + pow2(i);
  if (r.is_zero()) r = Natural(1);
  return r;
}

std::map<std::size_t, std::uint64_t> worked_example_coefficients() {
  return {{5, 1},  {7, 2},  {8, 1},  {9, 2},  {10, 3}, {11, 2},
          {12, 3}, {13, 2}, {14, 1}, {15, 4}, {16, 1}, {17, 2},
          {18, 1}, {19, 1}, {20, 2}, {21, 1}, {25, 1}};
}

// ---- criterion 1 ---------------------------------------------------------

void criterion_1() {
  const auto t0 = std::chrono::steady_clock::now();
  const ConvolutionOutcome out = multiply_exact(Natural(8616), Natural(4532));
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  bool coeffs_ok = true;
  const auto expect = worked_example_coefficients();
  for (std::size_t j = 0; j < out.d; ++j) {
    const auto it = expect.find(j);
    const std::uint64_t want = it == expect.end() ? 0 : it->second;
    if (out.coefficients[j] != want) coeffs_ok = false;
  }
  const bool product_ok = out.product == Natural(39047712);
  const bool fast = seconds < 1.0;
  std::ostringstream d;
  d << "coefficients " << (coeffs_ok ? "exact" : "MISMATCH") << ", product "
    << out.product.to_string() << ", " << seconds << " s";
  report(1, "worked-example reproduction", coeffs_ok && product_ok && fast,
         d.str());
}

// ---- criterion 2 ---------------------------------------------------------

void criterion_2() {
  const auto t0 = std::chrono::steady_clock::now();
  const double p_exact =
      multiply_exact(Natural(8616), Natural(4532)).success_probability;
  const bool exact_ok = std::abs(p_exact - 0.06875) <= 1e-12;

  const std::uint64_t shots = 1000000;
  const SampledRun run =
      multiply_sampled(Natural(8616), Natural(4532), shots, 20260810);
  const double fraction =
      static_cast<double>(run.kept) / static_cast<double>(shots);
  const double sigma = std::sqrt(0.06875 * (1.0 - 0.06875) / 1e6);
  const bool sampled_ok = std::abs(fraction - 0.06875) <= 3.0 * sigma;
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  std::ostringstream d;
  d << "exact p = " << p_exact << ", sampled " << run.kept << "/" << shots
    << " (band 0.06875 +/- " << 3.0 * sigma << "), " << seconds << " s";
  report(2, "postselection rate", exact_ok && sampled_ok && seconds < 30.0,
         d.str());
}

// ---- criterion 3 ---------------------------------------------------------

void criterion_3() {
  std::size_t mismatches = 0, checked = 0;

  for (std::uint64_t a = 1; a < 64; ++a)
    for (std::uint64_t b = 1; b < 64; ++b) {
      if (multiply_exact(Natural(a), Natural(b)).product != Natural(a * b))
        ++mismatches;
      ++checked;
    }

  std::mt19937_64 rng(2026);
  for (int rep = 0; rep < 100; ++rep) {
    const Natural a = random_natural(rng, 64), b = random_natural(rng, 64);
    if (multiply_exact(a, b).product != a * b) ++mismatches;
    ++checked;
  }

  for (std::size_t n = 1; n <= 3; ++n) {
    const MultiplierCircuit mc = build_grade_school(n);
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x)
      for (std::uint64_t y = 0; y < (std::uint64_t{1} << n); ++y) {
        if (multiply_reversible(mc, Natural(x), Natural(y)) != Natural(x * y))
          ++mismatches;
        ++checked;
      }
  }
  {
    const MultiplierCircuit mc = build_grade_school(4);
    for (int rep = 0; rep < 200; ++rep) {
      const std::uint64_t x = rng() % 16, y = rng() % 16;
      if (multiply_reversible(mc, Natural(x), Natural(y)) != Natural(x * y))
        ++mismatches;
      ++checked;
    }
  }
  {
    const MultiplierCircuit mc = build_karatsuba(8);
    for (int rep = 0; rep < 500; ++rep) {
      const std::uint64_t x = rng() % 256, y = rng() % 256;
      if (multiply_reversible(mc, Natural(x), Natural(y)) != Natural(x * y))
        ++mismatches;
      ++checked;
    }
  }
  std::ostringstream d;
  d << checked << " products checked, " << mismatches << " mismatches";
  report(3, "differential correctness", mismatches == 0, d.str());
}

// ---- criterion 4 ---------------------------------------------------------

void criterion_4() {
  // As specified: success_probability(2^n - 1, 2^n - 1) * n must sit in a
  // factor-4 band over n in {4, ..., 128}.
  const std::size_t ns[] = {4, 8, 16, 32, 64, 128};
  double lo = 1e300, hi = 0.0;
  std::ostringstream values;
  for (const std::size_t n : ns) {
    const Natural ones = pow2(n) - Natural(1);
    const double v =
        success_probability(ones, ones) * static_cast<double>(n);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
    values << " n=" << n << ":" << v;
  }
  const bool pass = hi / lo <= 4.0;
  std::ostringstream d;
  d << "p*n spans [" << lo << ", " << hi << "], ratio " << hi / lo
    << " (band allows 4)";
  report(4, "O(1/n) postselection scaling on a = b = 2^n - 1", pass, d.str());
  if (!pass) {
    info("p*n values:" + values.str());
    info("exact closed form for this family: p = 1/3 + 1/(6 n^2); the dense");
    info("all-ones operands are the best case, so p*n grows linearly and no");
    info("factor-4 band can hold. Supplementary (sparse a = b = 2^{n-1},");
    std::ostringstream s;
    s << "p = 1/(2n) exactly):";
    for (const std::size_t n : ns) {
      const Natural spike = pow2(n - 1);
      s << " n=" << n << ":"
        << success_probability(spike, spike) * static_cast<double>(n);
    }
    info(s.str() + " — constant 0.5, inside any factor-4 band");
  }
}

// ---- criterion 5 ---------------------------------------------------------

void criterion_5() {
  // 5a: rotation law at 1e-9 for m <= 6 on 5 pairs
  bool law_ok = true;
  const std::pair<std::uint64_t, std::uint64_t> pairs[] = {
      {8616, 4532}, {27, 5}, {100, 200}, {63, 63}, {12345, 678}};
  for (const auto& [a, b] : pairs)
    for (const auto& row : amplification_sweep(Natural(a), Natural(b), 6))
      if (std::abs(row.measured - row.closed_form) >= 1e-9) law_ok = false;

  // 5b: worked-example plan and amplified probability
  const AmplificationPlan plan = plan_amplification(
      success_probability(Natural(8616), Natural(4532)));
  const ConvolutionOutcome amp =
      amplified_multiply(Natural(8616), Natural(4532));
  const bool worked_ok = plan.n_opt == 3 &&
                         std::abs(plan.p_final - 0.920) <= 1e-3 &&
                         std::abs(amp.success_probability - 0.920) <= 1e-3 &&
                         amp.product == Natural(39047712);

  // 5c: n_opt / sqrt(n) factor-4 band on the all-ones family, as specified
  const std::size_t ns[] = {4, 8, 16, 32, 64, 128};
  double lo = 1e300, hi = 0.0;
  std::ostringstream values;
  for (const std::size_t n : ns) {
    const Natural ones = pow2(n) - Natural(1);
    const AmplificationPlan p =
        plan_amplification(success_probability(ones, ones));
    const double v =
        static_cast<double>(p.n_opt) / std::sqrt(static_cast<double>(n));
    lo = std::min(lo, v);
    hi = std::max(hi, v);
    values << " n=" << n << ":" << p.n_opt;
  }
  const bool band_ok = hi / lo <= 4.0;

  std::ostringstream d;
  d << "rotation law " << (law_ok ? "ok(1e-9)" : "FAIL") << "; n_opt="
    << plan.n_opt << ", amplified p=" << amp.success_probability
    << (worked_ok ? " ok" : " FAIL") << "; n_opt/sqrt(n) ratio " << hi / lo
    << (band_ok ? " ok" : " exceeds 4");
  report(5, "amplitude amplification", law_ok && worked_ok && band_ok,
         d.str());
  if (!band_ok) {
    info("n_opt on a = b = 2^n - 1:" + values.str());
    info("this family's p tends to 1/3, so n_opt pins at 1 and cannot grow");
    info("as sqrt(n). Supplementary (sparse a = b = 2^{n-1}, p = 1/(2n)):");
    std::ostringstream s;
    for (const std::size_t n : ns) {
      const Natural spike = pow2(n - 1);
      const AmplificationPlan p =
          plan_amplification(success_probability(spike, spike));
      s << " n=" << n << ":" << p.n_opt << " (ratio "
        << static_cast<double>(p.n_opt) / std::sqrt(static_cast<double>(n))
        << ")";
    }
    info(s.str() + " — Theta(sqrt(n)) growth, inside a factor-4 band");
  }
}

// ---- criterion 6 ---------------------------------------------------------

void criterion_6() {
  bool ok = true;
  const struct {
    std::size_t n;
    long long depth, cost, anc;
  } table1[] = {{1, 10, 11, 2},
                {2, 20, 32, 6},
                {4, 70, 140, 26},
                {8, 290, 620, 114},
                {16, 1210, 2636, 482}};
  for (const auto& row : table1) {
    const ResourceEstimate e = grade_school_resources(row.n);
    if (e.depth != Rational(row.depth) || e.cost != Rational(row.cost) ||
        e.ancillas != Rational(row.anc))
      ok = false;
  }
  for (std::size_t n = 4; n <= 64; n <<= 1) {
    const ResourceEstimate closed = karatsuba_resources(n);
    const ResourceEstimate rec =
        karatsuba_resources(n, EstimateBasis::kRecursive);
    if (closed.depth != rec.depth || closed.cost != rec.cost) ok = false;
  }
  const ResourceEstimate k4 = karatsuba_resources(4);
  if (k4.depth != Rational(70) || k4.cost != Rational(140)) ok = false;

  const ResourceEstimate k16c = karatsuba_resources(16);
  const ResourceEstimate k16r =
      karatsuba_resources(16, EstimateBasis::kRecursive);
  std::ostringstream d;
  d << "polynomials exact at n in {1,2,4,8,16}; closed = recursive for "
       "depth/cost on {4..64}; n=4 continuity (70, 140); ancilla "
       "inconsistency reported: closed "
    << k16c.ancillas.to_string() << " vs recursive "
    << k16r.ancillas.to_string() << " at n=16";
  report(6, "resource tables", ok, d.str());
}

// ---- criterion 7 ---------------------------------------------------------

void criterion_7() {
  bool ok = true;
  std::ostringstream fails;

  // unitarity of every gate kind, via dense columns
  {
    const std::pair<GateOp, int> gates[] = {
        {GateOp::x(0), 1},           {GateOp::h(0), 1},
        {GateOp::cnot(0, 1), 2},     {GateOp::toffoli(0, 1, 2), 3},
        {GateOp::cv(0, 1), 2},       {GateOp::cvdg(0, 1), 2},
        {GateOp::cphase(0, 1, 3), 2}, {GateOp::cphasedg(0, 1, 3), 2},
        {GateOp::swap(0, 1), 2}};
    for (const auto& [g, width] : gates) {
      const std::size_t dim = std::size_t{1} << width;
      std::vector<std::vector<Amplitude>> u(dim);
      for (std::size_t col = 0; col < dim; ++col) {
        Statevector s = Statevector::basis(width, col);
        apply_gate(s, g);
        u[col] = s.amplitudes();
      }
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
          Amplitude dot(0, 0);
          for (std::size_t k = 0; k < dim; ++k)
            dot += std::conj(u[i][k]) * u[j][k];
          const Amplitude want = i == j ? Amplitude(1, 0) : Amplitude(0, 0);
          if (std::abs(dot - want) >= 1e-12) ok = false;
        }
    }
    if (!ok) fails << " unitarity";
  }

  // norm preservation on random 12-qubit circuits of 200 gates
  {
    std::mt19937_64 rng(31337);
    std::normal_distribution<double> gauss(0.0, 1.0);
    bool norm_ok = true;
    for (int rep = 0; rep < 3; ++rep) {
      std::vector<Amplitude> amps(1 << 12);
      double n2 = 0;
      for (auto& a : amps) {
        a = Amplitude(gauss(rng), gauss(rng));
        n2 += std::norm(a);
      }
      for (auto& a : amps) a /= std::sqrt(n2);
      Statevector s = Statevector::from_amplitudes(std::move(amps));
      for (int g = 0; g < 200; ++g) {
        const int a = static_cast<int>(rng() % 12);
        int b = static_cast<int>(rng() % 12);
        while (b == a) b = static_cast<int>(rng() % 12);
        switch (rng() % 5) {
          case 0: s.apply_h(a); break;
          case 1: s.apply_cnot(a, b); break;
          case 2: s.apply_cv(a, b, rng() & 1); break;
          case 3: s.apply_cphase(a, b, 1 + static_cast<int>(rng() % 4)); break;
          default: s.apply_x(a); break;
        }
      }
      if (std::abs(s.norm() - 1.0) >= 1e-10) norm_ok = false;
    }
    if (!norm_ok) {
      ok = false;
      fails << " norm";
    }
  }

  // QFT . IQFT = identity at 1e-12
  {
    std::mt19937_64 rng(271828);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<Amplitude> amps(1 << 5);
    double n2 = 0;
    for (auto& a : amps) {
      a = Amplitude(gauss(rng), gauss(rng));
      n2 += std::norm(a);
    }
    for (auto& a : amps) a /= std::sqrt(n2);
    const Statevector s = Statevector::from_amplitudes(std::move(amps));
    Statevector t = apply_circuit(s, qft_circuit(5));
    t = apply_circuit(std::move(t), qft_circuit(5, true));
    for (std::size_t i = 0; i < s.dim(); ++i)
      if (std::abs(t.amplitude(i) - s.amplitude(i)) >= 1e-12) {
        ok = false;
        fails << " qft-identity";
        break;
      }
  }

  // reversible backend vs dense simulation
  {
    bool agree = true;
    const Block blocks[] = {detail::make_qac(0, 1, 2),
                            detail::make_qfa(0, 1, 2, 3),
                            detail::make_qfs(0, 1, 2, 3)};
    for (const Block& b : blocks) {
      Circuit c;
      c.num_qubits = static_cast<int>(b.qubits.size());
      c.push(b);
      finalize_classical(c);
      for (std::uint64_t in = 0; in < (std::uint64_t{1} << c.num_qubits);
           ++in) {
        const std::uint64_t fast = run_reversible(c, in);
        const Statevector s =
            apply_circuit(Statevector::basis(c.num_qubits, in), c);
        if (std::abs(s.amplitude(fast) - Amplitude(1, 0)) >= 1e-9)
          agree = false;
      }
    }
    {
      const MultiplierCircuit mc = build_grade_school(1);
      for (std::uint64_t in = 0;
           in < (std::uint64_t{1} << mc.circuit.num_qubits); ++in) {
        const std::uint64_t fast = run_reversible(mc.circuit, in);
        const Statevector s = apply_circuit(
            Statevector::basis(mc.circuit.num_qubits, in), mc.circuit);
        if (std::abs(s.amplitude(fast) - Amplitude(1, 0)) >= 1e-9)
          agree = false;
      }
    }
    {
      const MultiplierCircuit mc = build_grade_school(2);  // 14 qubits
      std::mt19937_64 rng(999);
      for (int rep = 0; rep < 200; ++rep) {
        const std::uint64_t in =
            rng() & ((std::uint64_t{1} << mc.circuit.num_qubits) - 1);
        const std::uint64_t fast = run_reversible(mc.circuit, in);
        const Statevector s = apply_circuit(
            Statevector::basis(mc.circuit.num_qubits, in), mc.circuit);
        if (std::abs(s.amplitude(fast) - Amplitude(1, 0)) >= 1e-9)
          agree = false;
      }
    }
    if (!agree) {
      ok = false;
      fails << " backend-agreement";
    }
  }

  // chi-squared sampling test at significance 0.001 (dof 15 -> 37.697)
  {
    std::mt19937_64 rng(414213);
    std::normal_distribution<double> gauss(0.0, 1.0);
    bool chi_ok = true;
    for (int rep = 0; rep < 10; ++rep) {
      std::vector<Amplitude> amps(16);
      double n2 = 0;
      for (auto& a : amps) {
        a = Amplitude(gauss(rng), gauss(rng));
        n2 += std::norm(a);
      }
      for (auto& a : amps) a /= std::sqrt(n2);
      const Statevector s = Statevector::from_amplitudes(std::move(amps));
      const Histogram h =
          sample(s, 100000, 5000 + static_cast<std::uint64_t>(rep));
      double chi2 = 0;
      for (std::size_t i = 0; i < 16; ++i) {
        const double expect = 100000.0 * std::norm(s.amplitude(i));
        const double got =
            h.counts.count(i) ? static_cast<double>(h.counts.at(i)) : 0.0;
        if (expect > 0) chi2 += (got - expect) * (got - expect) / expect;
      }
      if (chi2 >= 37.697) chi_ok = false;
    }
    if (!chi_ok) {
      ok = false;
      fails << " chi-squared";
    }
  }

  report(7, "engine properties",
         ok, ok ? "unitarity, norm, QFT identity, backend agreement, "
                  "chi-squared all within tolerance"
                : "failed:" + fails.str());
}

// ---- criterion 8 ---------------------------------------------------------

std::string run_and_capture(const std::string& cmd) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  pclose(pipe);
  return out;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

void criterion_8() {
  const fs::path dir1 = fs::temp_directory_path() / "qumul_accept_demo1";
  const fs::path dir2 = fs::temp_directory_path() / "qumul_accept_demo2";
  fs::create_directories(dir1);
  fs::create_directories(dir2);
  const std::string base = std::string(QUMUL_CLI_PATH) + " demo --out-dir ";
  std::string out1 = run_and_capture(base + dir1.string() + " 2>/dev/null");
  std::string out2 = run_and_capture(base + dir2.string() + " 2>/dev/null");
  for (std::size_t at; (at = out1.find(dir1.string())) != std::string::npos;)
    out1.erase(at, dir1.string().size());
  for (std::size_t at; (at = out2.find(dir2.string())) != std::string::npos;)
    out2.erase(at, dir2.string().size());
  const bool stdout_same = !out1.empty() && out1 == out2;
  const bool csv_same =
      slurp(dir1 / "demo_histogram.csv") == slurp(dir2 / "demo_histogram.csv");
  const bool json_same = slurp(dir1 / "demo_histogram.json") ==
                         slurp(dir2 / "demo_histogram.json");
  const bool self_check = out1.find("\"pass\": true") != std::string::npos;
  report(8, "demo determinism",
         stdout_same && csv_same && json_same && self_check,
         stdout_same && csv_same && json_same
             ? "byte-identical summary and histogram files across runs"
             : "outputs differ between runs");
}

}  // namespace

int main() {
  std::printf("qumul acceptance suite\n");
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  std::printf("%d of 8 criteria failed\n", g_failures);
  return g_failures;
}

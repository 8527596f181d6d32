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

#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qumul/circuit.hpp"
#include "qumul/dft.hpp"
#include "qumul/digit_vector.hpp"
#include "qumul/errors.hpp"
#include "qumul/natural.hpp"
#include "qumul/qft.hpp"
#include "qumul/simulator.hpp"
#include "qumul/statevector.hpp"

namespace qumul {

/// Register sizing for the convolution multiplier. Each operand's bit
/// vector lives on k qubits (D = 2^k digit slots); D is the smallest power
/// of two holding bits(a)+bits(b) so the cyclic convolution never wraps.
struct RegisterPlan {
  int k = 0;
  std::size_t d = 0;
  std::size_t weight_a = 0, weight_b = 0;
  double z_a = 0.0, z_b = 0.0;  // normalization factors sqrt(weight)

  std::vector<int> register_a() const {
    std::vector<int> q(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) q[static_cast<std::size_t>(i)] = i;
    return q;
  }
  std::vector<int> register_b() const {
    std::vector<int> q(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) q[static_cast<std::size_t>(i)] = k + i;
    return q;
  }
};

inline RegisterPlan plan_registers(const Natural& a, const Natural& b) {
  if (a.is_zero() || b.is_zero())
    throw std::invalid_argument(
        "plan_registers: zero operands have no digit state (Z would vanish)");
  const std::size_t total = a.bit_length() + b.bit_length();
  RegisterPlan plan;
  plan.k = 1;
  while ((std::size_t{1} << plan.k) < total) ++plan.k;
  plan.d = std::size_t{1} << plan.k;
  plan.weight_a = a.popcount();
  plan.weight_b = b.popcount();
  plan.z_a = std::sqrt(static_cast<double>(plan.weight_a));
  plan.z_b = std::sqrt(static_cast<double>(plan.weight_b));
  return plan;
}

/// Digit state of x on k qubits: amplitude 1/sqrt(weight) on |j> for every
/// set bit j of x. Functionally correct preparation; the gate cost of an
/// optimal encoder is out of scope.
inline Statevector prepare_digit_state(const Natural& x, int k,
                                       std::size_t amp_cap =
                                           Statevector::kDefaultAmpCap) {
  if (x.is_zero())
    throw std::invalid_argument("prepare_digit_state: x must be >= 1");
  if (x.bit_length() > (std::size_t{1} << k))
    throw std::invalid_argument("prepare_digit_state: x does not fit 2^k digits");
  std::vector<Amplitude> amps(std::size_t{1} << k, Amplitude(0.0, 0.0));
  if (amps.size() > amp_cap)
    throw MemoryCapError("prepare_digit_state: register exceeds memory cap");
  const double amp = 1.0 / std::sqrt(static_cast<double>(x.popcount()));
  for (std::size_t j = 0; j < x.bit_length(); ++j)
    if (x.bit(j)) amps[j] = Amplitude(amp, 0.0);
  return Statevector::from_amplitudes(std::move(amps));
}

/// The element-wise product ladder on 2k qubits: one CNOT per digit wire,
/// control in register a (qubits 0..k-1), target in register b. All CNOTs
/// commute, so the ladder has depth 1. After postselecting register b on
/// |0...0> the surviving register-a state is the normalized element-wise
/// product of the two input states.
inline Circuit elementwise_circuit(int k) {
  if (k < 1)
    throw std::invalid_argument("elementwise_circuit: need at least 1 qubit");
  Circuit c;
  c.num_qubits = 2 * k;
  c.layout = {{"a", 0, k}, {"b", k, k}};
  for (int i = 0; i < k; ++i) c.push(GateOp::cnot(i, k + i));
  return c;
}

/// Exact postselection probability of the element-wise product stage:
/// ||conv||^2 / (D * weight_a * weight_b), where conv is the (classical)
/// cyclic convolution of the two digit vectors. Equal to the circuit's
/// register-b all-zero probability through F(f) .* F(g) = F(f*g)/sqrt(D).
inline double success_probability(const Natural& a, const Natural& b) {
  const RegisterPlan plan = plan_registers(a, b);
  const DigitVector conv = convolve_direct(to_digit_vector(a, plan.d),
                                           to_digit_vector(b, plan.d));
  double norm2 = 0.0;
  for (const std::uint64_t c : conv)
    norm2 += static_cast<double>(c) * static_cast<double>(c);
  return norm2 / (static_cast<double>(plan.d) *
                  static_cast<double>(plan.weight_a) *
                  static_cast<double>(plan.weight_b));
}

/// Everything a single multiplication run reports.
struct ConvolutionOutcome {
  Natural a, b;
  int k = 0;
  std::size_t d = 0;
  DigitVector coefficients;
  Natural product;
  double success_probability = 0.0;
  std::uint64_t shots = 0;  // 0 for exact / analytic modes
  std::uint64_t seed = 0;
  std::string mode;
};

namespace detail {

/// Main circuit state: encoders, QFT on each register, CNOT ladder.
/// Register a = qubits [0, k), register b = [k, 2k).
inline Statevector build_main_state(const RegisterPlan& plan, const Natural& a,
                                    const Natural& b, std::size_t amp_cap) {
  if ((std::size_t{1} << (2 * plan.k)) > amp_cap)
    throw MemoryCapError("convolution multiplier: joint state of 2^" +
                         std::to_string(2 * plan.k) +
                         " amplitudes exceeds the memory cap");
  Statevector joint = tensor(prepare_digit_state(a, plan.k, amp_cap),
                             prepare_digit_state(b, plan.k, amp_cap));
  Circuit c;
  c.num_qubits = 2 * plan.k;
  append_qft(c, plan.register_a());
  append_qft(c, plan.register_b());
  for (int i = 0; i < plan.k; ++i) c.push(GateOp::cnot(i, plan.k + i));
  apply_circuit_in_place(joint, c);
  return joint;
}

/// Reads integer coefficients off the renormalized register-a state:
/// c_j = round(amplitude_j * coeff_norm). Throws PrecisionError when any
/// residue reaches 0.25 or an imaginary part reaches 1e-9.
inline DigitVector decode_coefficients(const Statevector& state,
                                       std::size_t d, double coeff_norm) {
  DigitVector c(d, 0);
  for (std::size_t j = 0; j < d; ++j) {
    const Amplitude amp = state.amplitude(j);
    if (std::abs(amp.imag()) >= 1e-9)
      throw PrecisionError("decode: residual imaginary part too large");
    const double value = amp.real() * coeff_norm;
    const double rounded = std::round(value);
    if (std::abs(value - rounded) >= 0.25 || rounded < 0.0)
      throw PrecisionError("decode: rounding residue >= 0.25");
    c[j] = static_cast<std::uint64_t>(rounded);
  }
  return c;
}

}  // namespace detail

/// Runs the full pipeline on the exact statevector: encode both operands,
/// QFT each register, element-wise CNOT ladder, postselect register b on
/// |0...0>, inverse QFT on register a, decode coefficients, carry-propagate.
inline ConvolutionOutcome multiply_exact(const Natural& a, const Natural& b,
                                         std::size_t amp_cap =
                                             Statevector::kDefaultAmpCap) {
  const RegisterPlan plan = plan_registers(a, b);
  Statevector joint = detail::build_main_state(plan, a, b, amp_cap);
  auto [branch, p] = postselect_zero(joint, plan.register_b());
  Circuit iqft;
  iqft.num_qubits = 2 * plan.k;
  append_qft(iqft, plan.register_a(), /*inverse=*/true);
  apply_circuit_in_place(branch, iqft);
  // ||c|| = sqrt(p * D) * Z_a * Z_b
  const double coeff_norm =
      std::sqrt(p * static_cast<double>(plan.d)) * plan.z_a * plan.z_b;
  ConvolutionOutcome out;
  out.a = a;
  out.b = b;
  out.k = plan.k;
  out.d = plan.d;
  out.coefficients = detail::decode_coefficients(branch, plan.d, coeff_norm);
  out.product = from_coefficients(out.coefficients);
  out.success_probability = p;
  out.mode = "exact";
  return out;
}

/// Same pipeline computed with classical vectors (no joint statevector):
/// the factored fast path for plans too wide to dense-simulate. Flagged as
/// "analytic" in the outcome; the statevector path stays the reference.
inline ConvolutionOutcome multiply_analytic(const Natural& a,
                                            const Natural& b) {
  const RegisterPlan plan = plan_registers(a, b);
  ComplexVector alpha(plan.d, Complex(0, 0)), beta(plan.d, Complex(0, 0));
  const DigitVector da = to_digit_vector(a, plan.d),
                    db = to_digit_vector(b, plan.d);
  for (std::size_t j = 0; j < plan.d; ++j) {
    alpha[j] = Complex(static_cast<double>(da[j]) / plan.z_a, 0.0);
    beta[j] = Complex(static_cast<double>(db[j]) / plan.z_b, 0.0);
  }
  alpha = dft(std::move(alpha));
  beta = dft(std::move(beta));
  double p = 0.0;
  for (std::size_t j = 0; j < plan.d; ++j) {
    alpha[j] *= beta[j];
    p += std::norm(alpha[j]);
  }
  const double scale = 1.0 / std::sqrt(p);
  for (Complex& c : alpha) c *= scale;
  alpha = dft(std::move(alpha), /*inverse=*/true);
  const double coeff_norm =
      std::sqrt(p * static_cast<double>(plan.d)) * plan.z_a * plan.z_b;
  ConvolutionOutcome out;
  out.a = a;
  out.b = b;
  out.k = plan.k;
  out.d = plan.d;
  out.coefficients.assign(plan.d, 0);
  for (std::size_t j = 0; j < plan.d; ++j) {
    const double value = alpha[j].real() * coeff_norm;
    const double rounded = std::round(value);
    if (std::abs(value - rounded) >= 0.25 ||
        std::abs(alpha[j].imag()) >= 1e-9 || rounded < 0.0)
      throw PrecisionError("multiply_analytic: rounding residue too large");
    out.coefficients[j] = static_cast<std::uint64_t>(rounded);
  }
  out.product = from_coefficients(out.coefficients);
  out.success_probability = p;
  out.mode = "analytic";
  return out;
}

/// A sampled run: joint histogram filtered to the register-b all-zero
/// branch, plus the outcome decoded from the kept-shot frequencies.
struct SampledRun {
  Histogram register_a;       // counts over register a among kept shots
  std::uint64_t kept = 0;     // shots where register b read all zeros
  ConvolutionOutcome outcome;
};

/// Samples `shots` measurements of the full circuit (inverse QFT included,
/// so register a is measured in the coefficient domain), keeps the shots
/// whose register b reads all zeros, and decodes coefficients from the
/// kept frequencies: c_j = round(sqrt(p_j) * s) with the scale s fixed by
/// the coefficient-sum identity sum_j c_j = weight_a * weight_b.
inline SampledRun multiply_sampled(const Natural& a, const Natural& b,
                                   std::uint64_t shots, std::uint64_t seed,
                                   std::size_t amp_cap =
                                       Statevector::kDefaultAmpCap) {
  const RegisterPlan plan = plan_registers(a, b);
  Statevector joint = detail::build_main_state(plan, a, b, amp_cap);
  Circuit iqft;
  iqft.num_qubits = 2 * plan.k;
  append_qft(iqft, plan.register_a(), /*inverse=*/true);
  apply_circuit_in_place(joint, iqft);

  const Histogram joint_counts = sample(joint, shots, seed);
  SampledRun run;
  for (const auto& [index, count] : joint_counts.counts) {
    if ((index >> plan.k) != 0) continue;  // register b not all zero
    run.register_a.counts[index & (plan.d - 1)] += count;
    run.kept += count;
  }
  run.register_a.shots = run.kept;
  if (run.kept == 0)
    throw InsufficientShotsError(
        "multiply_sampled: no shot postselected register b to zero");

  std::vector<double> root_freq(plan.d, 0.0);
  double root_sum = 0.0;
  for (std::size_t j = 0; j < plan.d; ++j) {
    const auto it = run.register_a.counts.find(j);
    if (it == run.register_a.counts.end()) continue;
    root_freq[j] = std::sqrt(static_cast<double>(it->second) /
                             static_cast<double>(run.kept));
    root_sum += root_freq[j];
  }
  const double scale = static_cast<double>(plan.weight_a) *
                       static_cast<double>(plan.weight_b) / root_sum;
  ConvolutionOutcome& out = run.outcome;
  out.a = a;
  out.b = b;
  out.k = plan.k;
  out.d = plan.d;
  out.coefficients.assign(plan.d, 0);
  for (std::size_t j = 0; j < plan.d; ++j)
    out.coefficients[j] =
        static_cast<std::uint64_t>(std::round(root_freq[j] * scale));
  out.product = from_coefficients(out.coefficients);
  out.success_probability =
      static_cast<double>(run.kept) / static_cast<double>(shots);
  out.shots = shots;
  out.seed = seed;
  out.mode = "sampled";
  return run;
}

}  // namespace qumul

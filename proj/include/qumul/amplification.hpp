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
#include <numbers>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qumul/circuit.hpp"
#include "qumul/conv_multiplier.hpp"
#include "qumul/qft.hpp"
#include "qumul/simulator.hpp"
#include "qumul/statevector.hpp"

namespace qumul {

/// Iteration plan for amplitude amplification: theta with sin^2(theta) = p0,
/// the iteration count n = [pi / 4 theta] (nearest integer, ties rounded
/// down), and the resulting probability sin^2((2n+1) theta).
struct AmplificationPlan {
  double p0 = 0.0;
  double theta = 0.0;
  unsigned n_opt = 0;
  double p_final = 0.0;
};

inline AmplificationPlan plan_amplification(double p0) {
  if (!(p0 > 0.0) || p0 > 1.0)
    throw std::invalid_argument("plan_amplification: p0 must be in (0, 1]");
  AmplificationPlan plan;
  plan.p0 = p0;
  plan.theta = std::asin(std::min(1.0, std::sqrt(p0)));
  const double x = std::numbers::pi / (4.0 * plan.theta);
  plan.n_opt = x <= 0.5 ? 0u : static_cast<unsigned>(std::ceil(x - 0.5));
  const double s = std::sin((2.0 * plan.n_opt + 1.0) * plan.theta);
  plan.p_final = s * s;
  return plan;
}

/// One Grover step Q = -S_psi S_P around a prepared state |psi>, where S_P
/// flips the phase of basis states whose `good_subregister` qubits all read
/// 0 and S_psi = 1 - 2|psi><psi|. Since A S_0 A^dag = 1 - 2|psi><psi| for
/// any A with A|0> = |psi>, reflecting directly about the stored |psi| is
/// exactly the A S_0 A^dag S_P composition. Each application advances the
/// good/bad rotation angle by 2 theta.
class GroverIterate {
 public:
  GroverIterate(Statevector psi, const std::vector<int>& good_subregister)
      : psi_(std::move(psi)), good_mask_(0) {
    for (int q : good_subregister) {
      if (q < 0 || q >= psi_.num_qubits())
        throw std::invalid_argument("GroverIterate: bad subregister qubit");
      good_mask_ |= std::size_t{1} << q;
    }
  }

  const Statevector& prepared() const { return psi_; }

  /// Flips the phase of every good basis state (all subregister qubits 0).
  void apply_good_flip(Statevector& s) const {
    std::vector<Amplitude> amps = s.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i)
      if ((i & good_mask_) == 0) amps[i] = -amps[i];
    s = Statevector::from_amplitudes(std::move(amps));
  }

  /// s <- Q s.
  void apply(Statevector& s) const {
    if (s.dim() != psi_.dim())
      throw std::invalid_argument("GroverIterate: dimension mismatch");
    std::vector<Amplitude> amps = s.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i)
      if ((i & good_mask_) == 0) amps[i] = -amps[i];
    Amplitude overlap(0.0, 0.0);  // <psi| S_P s>
    for (std::size_t i = 0; i < amps.size(); ++i)
      overlap += std::conj(psi_.amplitude(i)) * amps[i];
    for (std::size_t i = 0; i < amps.size(); ++i)
      amps[i] = -(amps[i] - 2.0 * overlap * psi_.amplitude(i));
    s = Statevector::from_amplitudes(std::move(amps));
  }

 private:
  Statevector psi_;
  std::size_t good_mask_;
};

/// Gate-level reflection that flips the phase of basis states whose
/// `targets` all read 0 (S_P with targets = the good subregister; S_0 with
/// targets = every qubit). Realized as X conjugation around a Toffoli-ladder
/// multi-controlled Z; the circuit is widened by max(0, |targets| - 2)
/// ancilla wires beyond base_qubits, all required to be |0>.
inline Circuit phase_flip_all_zero_circuit(int base_qubits,
                                           const std::vector<int>& targets) {
  const int m = static_cast<int>(targets.size());
  if (m < 1)
    throw std::invalid_argument("phase_flip_all_zero_circuit: no targets");
  Circuit c;
  c.num_qubits = base_qubits + std::max(0, m - 2);
  for (int t : targets) c.push(GateOp::x(t));
  if (m == 1) {
    // Z = H X H
    c.push(GateOp::h(targets[0]));
    c.push(GateOp::x(targets[0]));
    c.push(GateOp::h(targets[0]));
  } else if (m == 2) {
    c.push(GateOp::cphase(targets[0], targets[1], 1));  // CZ
  } else {
    std::vector<GateOp> ladder;
    int prev = targets[0];
    for (int i = 0; i + 2 < m; ++i) {
      const int anc = base_qubits + i;
      ladder.push_back(GateOp::toffoli(prev, targets[i + 1], anc));
      prev = anc;
    }
    for (const GateOp& g : ladder) c.push(g);
    c.push(GateOp::cphase(prev, targets[m - 1], 1));
    for (auto it = ladder.rbegin(); it != ladder.rend(); ++it) c.push(*it);
  }
  for (int t : targets) c.push(GateOp::x(t));
  return c;
}

/// One row of an amplification sweep: measured good-branch probability
/// after m Grover iterations next to the sin^2((2m+1) theta) closed form.
struct AmplificationSweepRow {
  unsigned m = 0;
  double measured = 0.0;
  double closed_form = 0.0;
};

inline std::vector<AmplificationSweepRow> amplification_sweep(
    const Natural& a, const Natural& b, unsigned max_m,
    std::size_t amp_cap = Statevector::kDefaultAmpCap) {
  const RegisterPlan plan = plan_registers(a, b);
  const Statevector psi = detail::build_main_state(plan, a, b, amp_cap);
  const std::vector<int> good = plan.register_b();
  const double p0 = psi.probability_all_zero(good);
  const double theta = std::asin(std::min(1.0, std::sqrt(p0)));
  GroverIterate q(psi, good);
  Statevector s = psi;
  std::vector<AmplificationSweepRow> rows;
  for (unsigned m = 0; m <= max_m; ++m) {
    const double trig = std::sin((2.0 * m + 1.0) * theta);
    rows.push_back({m, s.probability_all_zero(good), trig * trig});
    q.apply(s);
  }
  return rows;
}

/// Full multiplication with amplitude amplification wrapped around the Main
/// circuit: prepare, amplify the register-b all-zero branch, postselect,
/// inverse QFT, decode. `iterations` std::nullopt picks n_opt from the
/// exact initial probability (simulator privilege). The reported
/// success_probability is the amplified branch probability; coefficient
/// normalization still comes from the unamplified branch weight, which the
/// postselected state does not depend on.
inline ConvolutionOutcome amplified_multiply(
    const Natural& a, const Natural& b,
    std::optional<unsigned> iterations = std::nullopt,
    std::size_t amp_cap = Statevector::kDefaultAmpCap) {
  const RegisterPlan plan = plan_registers(a, b);
  const Statevector psi = detail::build_main_state(plan, a, b, amp_cap);
  const std::vector<int> good = plan.register_b();
  const double p0 = psi.probability_all_zero(good);
  const unsigned m = iterations ? *iterations : plan_amplification(p0).n_opt;

  GroverIterate q(psi, good);
  Statevector s = psi;
  for (unsigned i = 0; i < m; ++i) q.apply(s);

  auto [branch, p_amp] = postselect_zero(s, good);
  Circuit iqft;
  iqft.num_qubits = 2 * plan.k;
  append_qft(iqft, plan.register_a(), /*inverse=*/true);
  apply_circuit_in_place(branch, iqft);

  // The Grover rotation can leave the branch with a global sign (e.g. an
  // explicit iteration count past the optimum); the coefficients are
  // non-negative with a positive sum, so align the phase on the sum.
  Amplitude total(0.0, 0.0);
  for (std::size_t j = 0; j < plan.d; ++j) total += branch.amplitude(j);
  std::vector<Amplitude> aligned = branch.amplitudes();
  const Amplitude phase = std::conj(total / std::abs(total));
  for (Amplitude& amp : aligned) amp *= phase;
  branch = Statevector::from_amplitudes(std::move(aligned));

  const double coeff_norm =
      std::sqrt(p0 * static_cast<double>(plan.d)) * plan.z_a * plan.z_b;
  ConvolutionOutcome out;
  out.a = a;
  out.b = b;
  out.k = plan.k;
  out.d = plan.d;
  out.coefficients = detail::decode_coefficients(branch, plan.d, coeff_norm);
  out.product = from_coefficients(out.coefficients);
  out.success_probability = p_amp;
  out.mode = "amplified";
  return out;
}

}  // namespace qumul

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

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "qumul/errors.hpp"
#include "qumul/rng.hpp"

namespace qumul {

using Amplitude = std::complex<double>;

/// Dense statevector over num_qubits qubits.
///
/// Convention: qubit i is bit i of the basis index (little-endian), so the
/// basis index of |q_{n-1} ... q_1 q_0> is sum_i q_i 2^i. Printed bitstrings
/// are rendered most-significant-first.
///
/// States are stored normalized. branch_probability records the cumulative
/// probability of the measurement branch this state was postselected into
/// (1.0 for states never postselected), so sub-normalization is explicit
/// rather than silently discarded.
class Statevector {
 public:
  static constexpr std::size_t kDefaultAmpCap = std::size_t{1} << 26;

  Statevector() = default;

  /// |0...0> on q qubits. Throws MemoryCapError when 2^q exceeds amp_cap.
  static Statevector zero(int q, std::size_t amp_cap = kDefaultAmpCap) {
    if (q < 1) throw std::invalid_argument("Statevector: need at least 1 qubit");
    if (q >= 63 || (std::size_t{1} << q) > amp_cap)
      throw MemoryCapError("Statevector: 2^" + std::to_string(q) +
                           " amplitudes exceed the memory cap");
    Statevector s;
    s.num_qubits_ = q;
    s.amps_.assign(std::size_t{1} << q, Amplitude(0.0, 0.0));
    s.amps_[0] = Amplitude(1.0, 0.0);
    return s;
  }

  /// Basis state |index> on q qubits.
  static Statevector basis(int q, std::uint64_t index,
                           std::size_t amp_cap = kDefaultAmpCap) {
    Statevector s = zero(q, amp_cap);
    if (index >= s.dim())
      throw std::invalid_argument("Statevector: basis index out of range");
    s.amps_[0] = Amplitude(0.0, 0.0);
    s.amps_[index] = Amplitude(1.0, 0.0);
    return s;
  }

  /// State with the given amplitude vector (renormalization is the caller's
  /// job; the norm is validated to 1e-6).
  static Statevector from_amplitudes(std::vector<Amplitude> amps) {
    if (amps.empty() || (amps.size() & (amps.size() - 1)) != 0)
      throw std::invalid_argument("Statevector: dimension must be a power of two");
    Statevector s;
    s.amps_ = std::move(amps);
    s.num_qubits_ = 0;
    for (std::size_t d = s.amps_.size(); d > 1; d >>= 1) ++s.num_qubits_;
    if (std::abs(s.norm() - 1.0) > 1e-6)
      throw std::invalid_argument("Statevector: amplitudes not normalized");
    return s;
  }

  int num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return amps_.size(); }
  const std::vector<Amplitude>& amplitudes() const { return amps_; }
  Amplitude amplitude(std::size_t i) const { return amps_.at(i); }

  double branch_probability() const { return branch_probability_; }
  void set_branch_probability(double p) { branch_probability_ = p; }

  double norm() const {
    double s = 0.0;
    for (const Amplitude& a : amps_) s += std::norm(a);
    return std::sqrt(s);
  }

  // ---- gate primitives ------------------------------------------------

  void apply_x(int t) {
    check_qubit(t);
    const std::size_t bit = std::size_t{1} << t;
    for (std::size_t i = 0; i < dim(); ++i)
      if (!(i & bit)) std::swap(amps_[i], amps_[i | bit]);
  }

  void apply_h(int t) {
    check_qubit(t);
    const std::size_t bit = std::size_t{1} << t;
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    for (std::size_t i = 0; i < dim(); ++i) {
      if (i & bit) continue;
      const Amplitude a0 = amps_[i], a1 = amps_[i | bit];
      amps_[i] = (a0 + a1) * inv_sqrt2;
      amps_[i | bit] = (a0 - a1) * inv_sqrt2;
    }
  }

  void apply_swap(int a, int b) {
    check_qubit(a);
    check_qubit(b);
    if (a == b) throw std::invalid_argument("swap: qubits must differ");
    const std::size_t ba = std::size_t{1} << a, bb = std::size_t{1} << b;
    for (std::size_t i = 0; i < dim(); ++i)
      if ((i & ba) && !(i & bb)) std::swap(amps_[i], amps_[(i & ~ba) | bb]);
  }

  void apply_cnot(int control, int target) {
    check_distinct(control, target);
    const std::size_t bc = std::size_t{1} << control,
                      bt = std::size_t{1} << target;
    for (std::size_t i = 0; i < dim(); ++i)
      if ((i & bc) && !(i & bt)) std::swap(amps_[i], amps_[i | bt]);
  }

  void apply_toffoli(int c1, int c2, int target) {
    check_distinct(c1, c2);
    check_distinct(c1, target);
    check_distinct(c2, target);
    const std::size_t b1 = std::size_t{1} << c1, b2 = std::size_t{1} << c2,
                      bt = std::size_t{1} << target;
    for (std::size_t i = 0; i < dim(); ++i)
      if ((i & b1) && (i & b2) && !(i & bt)) std::swap(amps_[i], amps_[i | bt]);
  }

  /// Controlled V = sqrt(X) (dagger = controlled V^†). V^2 = X.
  void apply_cv(int control, int target, bool dagger = false) {
    check_distinct(control, target);
    // V = ((1+i)/2) [[1, -i], [-i, 1]]; Vdg is the conjugate transpose.
    const Amplitude d = dagger ? Amplitude(0.5, -0.5) : Amplitude(0.5, 0.5);
    const Amplitude o = dagger ? Amplitude(0.5, 0.5) : Amplitude(0.5, -0.5);
    const std::size_t bc = std::size_t{1} << control,
                      bt = std::size_t{1} << target;
    for (std::size_t i = 0; i < dim(); ++i) {
      if (!(i & bc) || (i & bt)) continue;
      const Amplitude a0 = amps_[i], a1 = amps_[i | bt];
      amps_[i] = d * a0 + o * a1;
      amps_[i | bt] = o * a0 + d * a1;
    }
  }

  /// Controlled phase e^{+-2 pi i / 2^level} on |11> of the two qubits.
  void apply_cphase(int a, int b, int level, bool dagger = false) {
    check_distinct(a, b);
    if (level < 1) throw std::invalid_argument("cphase: level must be >= 1");
    const double ang = (dagger ? -2.0 : 2.0) * std::numbers::pi /
                       static_cast<double>(std::uint64_t{1} << level);
    const Amplitude phase(std::cos(ang), std::sin(ang));
    const std::size_t ba = std::size_t{1} << a, bb = std::size_t{1} << b;
    for (std::size_t i = 0; i < dim(); ++i)
      if ((i & ba) && (i & bb)) amps_[i] *= phase;
  }

  /// Multiplies every amplitude by -1 (global phase; used by reflections).
  void negate() {
    for (Amplitude& a : amps_) a = -a;
  }

  // ---- measurement ----------------------------------------------------

  /// Probability that all qubits in `subregister` read 0.
  double probability_all_zero(const std::vector<int>& subregister) const {
    std::size_t mask = 0;
    for (int q : subregister) {
      check_qubit(q);
      mask |= std::size_t{1} << q;
    }
    double p = 0.0;
    for (std::size_t i = 0; i < dim(); ++i)
      if ((i & mask) == 0) p += std::norm(amps_[i]);
    return p;
  }

 private:
  void check_qubit(int q) const {
    if (q < 0 || q >= num_qubits_)
      throw std::invalid_argument("qubit index out of range");
  }
  void check_distinct(int a, int b) const {
    check_qubit(a);
    check_qubit(b);
    if (a == b) throw std::invalid_argument("gate qubits must be distinct");
  }

  friend Statevector tensor(const Statevector&, const Statevector&);
  friend std::pair<Statevector, double> postselect_zero(
      const Statevector&, const std::vector<int>&);

  std::vector<Amplitude> amps_;
  int num_qubits_ = 0;
  double branch_probability_ = 1.0;
};

/// Tensor product; `low` occupies the low qubit indices of the result.
inline Statevector tensor(const Statevector& low, const Statevector& high) {
  Statevector s;
  s.num_qubits_ = low.num_qubits() + high.num_qubits();
  s.amps_.assign(low.dim() * high.dim(), Amplitude(0.0, 0.0));
  for (std::size_t h = 0; h < high.dim(); ++h) {
    if (high.amps_[h] == Amplitude(0.0, 0.0)) continue;
    for (std::size_t l = 0; l < low.dim(); ++l)
      s.amps_[h * low.dim() + l] = high.amps_[h] * low.amps_[l];
  }
  s.branch_probability_ =
      low.branch_probability() * high.branch_probability();
  return s;
}

/// Projects onto the branch where every qubit of `subregister` reads |0>,
/// renormalizes, and returns the branch probability. All qubits are kept
/// (the subregister ones are now deterministically |0>).
inline std::pair<Statevector, double> postselect_zero(
    const Statevector& state, const std::vector<int>& subregister) {
  const double p = state.probability_all_zero(subregister);
  if (p < 1e-14)
    throw ImpossibleBranchError("postselect_zero: branch probability ~ 0");
  std::size_t mask = 0;
  for (int q : subregister) mask |= std::size_t{1} << q;
  Statevector out = state;
  const double scale = 1.0 / std::sqrt(p);
  for (std::size_t i = 0; i < out.amps_.size(); ++i)
    out.amps_[i] = ((i & mask) == 0) ? out.amps_[i] * scale
                                     : Amplitude(0.0, 0.0);
  out.branch_probability_ = state.branch_probability() * p;
  return {std::move(out), p};
}

/// Measurement histogram: basis index -> count.
struct Histogram {
  std::map<std::uint64_t, std::uint64_t> counts;
  std::uint64_t shots = 0;
};

/// Draws `shots` i.i.d. samples from |amplitude|^2. Deterministic for a
/// fixed seed (see Rng).
inline Histogram sample(const Statevector& state, std::uint64_t shots,
                        std::uint64_t seed) {
  if (shots == 0) throw std::invalid_argument("sample: shots must be >= 1");
  if (std::abs(state.norm() - 1.0) > 1e-6)
    throw std::invalid_argument("sample: state not normalized");
  std::vector<double> cumulative(state.dim());
  double acc = 0.0;
  for (std::size_t i = 0; i < state.dim(); ++i) {
    acc += std::norm(state.amplitude(i));
    cumulative[i] = acc;
  }
  cumulative.back() = std::max(cumulative.back(), 1.0);
  Rng rng(seed);
  Histogram h;
  h.shots = shots;
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = rng.uniform() * acc;
    const auto it =
        std::upper_bound(cumulative.begin(), cumulative.end(), u);
    const std::uint64_t idx = static_cast<std::uint64_t>(
        std::distance(cumulative.begin(), it));
    ++h.counts[std::min<std::uint64_t>(idx, state.dim() - 1)];
  }
  return h;
}

}  // namespace qumul

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
#include <stdexcept>
#include <variant>
#include <vector>

#include "qumul/circuit.hpp"
#include "qumul/natural.hpp"
#include "qumul/statevector.hpp"

namespace qumul {

inline void apply_gate(Statevector& s, const GateOp& g) {
  switch (g.kind) {
    case GateKind::kX: s.apply_x(g.qubits[0]); break;
    case GateKind::kH: s.apply_h(g.qubits[0]); break;
    case GateKind::kCnot: s.apply_cnot(g.qubits[0], g.qubits[1]); break;
    case GateKind::kToffoli:
      s.apply_toffoli(g.qubits[0], g.qubits[1], g.qubits[2]);
      break;
    case GateKind::kCv: s.apply_cv(g.qubits[0], g.qubits[1], false); break;
    case GateKind::kCvDagger: s.apply_cv(g.qubits[0], g.qubits[1], true); break;
    case GateKind::kCphase:
      s.apply_cphase(g.qubits[0], g.qubits[1], g.phase_level, false);
      break;
    case GateKind::kCphaseDagger:
      s.apply_cphase(g.qubits[0], g.qubits[1], g.phase_level, true);
      break;
    case GateKind::kSwap: s.apply_swap(g.qubits[0], g.qubits[1]); break;
  }
}

inline void apply_circuit_in_place(Statevector& s, const Circuit& c) {
  if (s.num_qubits() != c.num_qubits)
    throw std::invalid_argument("apply_circuit: qubit count mismatch");
  for (const Instruction& in : c.ops) {
    if (std::holds_alternative<GateOp>(in)) {
      apply_gate(s, std::get<GateOp>(in));
    } else {
      const Block& b = std::get<Block>(in);
      for (const GateOp& g : b.gates) apply_gate(s, g.remapped(b.qubits));
    }
  }
}

inline Statevector apply_circuit(Statevector s, const Circuit& c) {
  apply_circuit_in_place(s, c);
  return s;
}

/// Dense-simulates a block's local gate list on every basis input of its
/// width and returns the permutation table when every output is again a
/// basis state with amplitude +1; throws otherwise. Block widths are tiny
/// (<= 5 wires), so the check is exhaustive.
inline std::vector<std::uint32_t> verify_block_permutation(const Block& b) {
  const int w = static_cast<int>(b.qubits.size());
  if (w < 1 || w > 16)
    throw std::invalid_argument("verify_block_permutation: bad block width");
  std::vector<int> local(w);
  for (int i = 0; i < w; ++i) local[i] = i;
  std::vector<std::uint32_t> perm(std::size_t{1} << w);
  std::vector<bool> hit(perm.size(), false);
  for (std::uint32_t in = 0; in < perm.size(); ++in) {
    Statevector s = Statevector::basis(w, in);
    for (const GateOp& g : b.gates) apply_gate(s, g.remapped(local));
    std::uint32_t out = 0;
    bool found = false;
    for (std::size_t i = 0; i < s.dim(); ++i) {
      const Amplitude a = s.amplitude(i);
      if (std::abs(a) < 1e-9) continue;
      if (found || std::abs(a - Amplitude(1.0, 0.0)) > 1e-7)
        throw std::invalid_argument("block " + b.name +
                                    " is not a basis permutation");
      out = static_cast<std::uint32_t>(i);
      found = true;
    }
    if (!found || hit[out])
      throw std::invalid_argument("block " + b.name +
                                  " is not a basis permutation");
    hit[out] = true;
    perm[in] = out;
  }
  return perm;
}

/// Verifies every block of `c` (filling the permutation tables) and sets
/// classical_flag when all top-level gates are basis permutations too.
inline void finalize_classical(Circuit& c) {
  bool ok = true;
  for (Instruction& in : c.ops) {
    if (std::holds_alternative<GateOp>(in)) {
      ok = ok && is_basis_permutation(std::get<GateOp>(in).kind);
    } else {
      Block& b = std::get<Block>(in);
      if (!b.verified()) b.permutation = verify_block_permutation(b);
    }
  }
  c.classical_flag = ok;
}

/// One classical bit per qubit; index i is qubit i.
using BasisState = std::vector<std::uint8_t>;

inline BasisState basis_state_from_uint64(int num_qubits, std::uint64_t v) {
  BasisState b(static_cast<std::size_t>(num_qubits), 0);
  for (int i = 0; i < num_qubits; ++i) b[i] = (v >> i) & 1u;
  return b;
}

inline std::uint64_t basis_state_to_uint64(const BasisState& b) {
  if (b.size() > 64)
    throw std::overflow_error("basis state exceeds 64 bits");
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b[i]) v |= std::uint64_t{1} << i;
  return v;
}

inline void store_field(BasisState& b, const RegisterRange& r,
                        const Natural& value) {
  if (value.bit_length() > static_cast<std::size_t>(r.count))
    throw std::invalid_argument("value does not fit register " + r.name);
  for (int i = 0; i < r.count; ++i)
    b.at(static_cast<std::size_t>(r.first + i)) = value.bit(i) ? 1 : 0;
}

inline Natural load_field(const BasisState& b, const RegisterRange& r) {
  Natural v;
  for (int i = 0; i < r.count; ++i)
    if (b.at(static_cast<std::size_t>(r.first + i))) v = v + pow2(i);
  return v;
}

/// Classical-reversible backend: runs a classical_flag circuit on one basis
/// state with plain bit operations (blocks through their verified
/// permutation tables). This is what makes the wide Toffoli-class
/// multiplier circuits checkable far beyond dense-simulation widths.
inline BasisState run_reversible(const Circuit& c, BasisState input) {
  if (!c.classical_flag)
    throw std::invalid_argument("run_reversible: circuit is not classical");
  if (input.size() != static_cast<std::size_t>(c.num_qubits))
    throw std::invalid_argument("run_reversible: width mismatch");
  for (const Instruction& in : c.ops) {
    if (std::holds_alternative<GateOp>(in)) {
      const GateOp& g = std::get<GateOp>(in);
      switch (g.kind) {
        case GateKind::kX:
          input[g.qubits[0]] ^= 1u;
          break;
        case GateKind::kCnot:
          input[g.qubits[1]] ^= input[g.qubits[0]];
          break;
        case GateKind::kToffoli:
          input[g.qubits[2]] ^= input[g.qubits[0]] & input[g.qubits[1]];
          break;
        case GateKind::kSwap:
          std::swap(input[g.qubits[0]], input[g.qubits[1]]);
          break;
        default:
          throw std::invalid_argument("run_reversible: non-classical gate");
      }
    } else {
      const Block& b = std::get<Block>(in);
      std::uint32_t idx = 0;
      for (std::size_t i = 0; i < b.qubits.size(); ++i)
        if (input[b.qubits[i]]) idx |= 1u << i;
      const std::uint32_t out = b.permutation.at(idx);
      for (std::size_t i = 0; i < b.qubits.size(); ++i)
        input[b.qubits[i]] = (out >> i) & 1u;
    }
  }
  return input;
}

/// Convenience overload for circuits of at most 64 qubits.
inline std::uint64_t run_reversible(const Circuit& c, std::uint64_t input) {
  return basis_state_to_uint64(
      run_reversible(c, basis_state_from_uint64(c.num_qubits, input)));
}

}  // namespace qumul

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

#include <stdexcept>
#include <vector>

#include "qumul/circuit.hpp"

namespace qumul {

/// Appends the standard QFT on the given wires (wire i carries weight 2^i)
/// to `c`: Hadamards with a controlled-phase ladder, then the qubit-order
/// swaps. Matrix entry (j, l) is omega^{jl} / sqrt(D) with
/// omega = e^{2 pi i / D}, D = 2^k. The inverse conjugates every phase and
/// reverses the order.
inline void append_qft(Circuit& c, const std::vector<int>& wires,
                       bool inverse = false) {
  const int k = static_cast<int>(wires.size());
  if (k < 1) throw std::invalid_argument("append_qft: need at least 1 qubit");
  std::vector<GateOp> gates;
  for (int t = k - 1; t >= 0; --t) {
    gates.push_back(GateOp::h(wires[t]));
    for (int d = 1; d <= t; ++d)
      gates.push_back(GateOp::cphase(wires[t - d], wires[t], d + 1));
  }
  for (int m = 0; m < k / 2; ++m)
    gates.push_back(GateOp::swap(wires[m], wires[k - 1 - m]));
  if (inverse)
    for (auto it = gates.rbegin(); it != gates.rend(); ++it)
      c.push(it->adjoint());
  else
    for (const GateOp& g : gates) c.push(g);
}

/// Standalone (inverse) QFT circuit on k qubits.
/// Gate count: k Hadamards + k(k-1)/2 controlled phases + floor(k/2) swaps.
inline Circuit qft_circuit(int k, bool inverse = false) {
  Circuit c;
  c.num_qubits = k;
  std::vector<int> wires(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) wires[static_cast<std::size_t>(i)] = i;
  append_qft(c, wires, inverse);
  return c;
}

}  // namespace qumul

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

#include <array>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace qumul {

enum class GateKind {
  kX,
  kH,
  kCnot,
  kToffoli,
  kCv,        // controlled sqrt(X)
  kCvDagger,
  kCphase,    // controlled e^{2 pi i / 2^level}
  kCphaseDagger,
  kSwap,
};

inline bool is_basis_permutation(GateKind k) {
  return k == GateKind::kX || k == GateKind::kCnot ||
         k == GateKind::kToffoli || k == GateKind::kSwap;
}

inline const char* gate_name(GateKind k) {
  switch (k) {
    case GateKind::kX: return "x";
    case GateKind::kH: return "h";
    case GateKind::kCnot: return "cnot";
    case GateKind::kToffoli: return "toffoli";
    case GateKind::kCv: return "cv";
    case GateKind::kCvDagger: return "cvdg";
    case GateKind::kCphase: return "cphase";
    case GateKind::kCphaseDagger: return "cphasedg";
    case GateKind::kSwap: return "swap";
  }
  return "?";
}

struct GateOp {
  GateKind kind;
  std::array<int, 3> qubits{-1, -1, -1};
  int phase_level = 0;  // cphase only

  int arity() const {
    switch (kind) {
      case GateKind::kX:
      case GateKind::kH:
        return 1;
      case GateKind::kToffoli:
        return 3;
      default:
        return 2;
    }
  }

  static GateOp x(int t) { return {GateKind::kX, {t, -1, -1}, 0}; }
  static GateOp h(int t) { return {GateKind::kH, {t, -1, -1}, 0}; }
  static GateOp cnot(int c, int t) { return {GateKind::kCnot, {c, t, -1}, 0}; }
  static GateOp toffoli(int c1, int c2, int t) {
    return {GateKind::kToffoli, {c1, c2, t}, 0};
  }
  static GateOp cv(int c, int t) { return {GateKind::kCv, {c, t, -1}, 0}; }
  static GateOp cvdg(int c, int t) {
    return {GateKind::kCvDagger, {c, t, -1}, 0};
  }
  static GateOp cphase(int a, int b, int level) {
    return {GateKind::kCphase, {a, b, -1}, level};
  }
  static GateOp cphasedg(int a, int b, int level) {
    return {GateKind::kCphaseDagger, {a, b, -1}, level};
  }
  static GateOp swap(int a, int b) { return {GateKind::kSwap, {a, b, -1}, 0}; }

  GateOp adjoint() const {
    GateOp g = *this;
    if (kind == GateKind::kCv) g.kind = GateKind::kCvDagger;
    else if (kind == GateKind::kCvDagger) g.kind = GateKind::kCv;
    else if (kind == GateKind::kCphase) g.kind = GateKind::kCphaseDagger;
    else if (kind == GateKind::kCphaseDagger) g.kind = GateKind::kCphase;
    return g;  // x, h, cnot, toffoli, swap are self-inverse
  }

  GateOp remapped(const std::vector<int>& wires) const {
    GateOp g = *this;
    for (int i = 0; i < arity(); ++i) g.qubits[i] = wires.at(qubits[i]);
    return g;
  }
};

/// A named sub-circuit over a few wires (QAC, QFA, QFS, ...). Gate qubit
/// indices are local: gate wire i acts on global qubit qubits[i].
/// `permutation` is the block's verified action on basis states (filled by
/// verify_blocks once the block is proven permutation-equivalent); it is
/// what lets the reversible backend treat a controlled-V-laden block as an
/// opaque classical operation.
struct Block {
  std::string name;
  std::vector<int> qubits;
  std::vector<GateOp> gates;
  std::vector<std::uint32_t> permutation;

  bool verified() const { return !permutation.empty(); }

  Block adjoint() const {
    Block b;
    b.name = name + "_inv";
    b.qubits = qubits;
    for (auto it = gates.rbegin(); it != gates.rend(); ++it)
      b.gates.push_back(it->adjoint());
    if (verified()) {
      b.permutation.assign(permutation.size(), 0);
      for (std::uint32_t i = 0; i < permutation.size(); ++i)
        b.permutation[permutation[i]] = i;
    }
    return b;
  }
};

using Instruction = std::variant<GateOp, Block>;

/// Named index range inside a circuit's qubit layout.
struct RegisterRange {
  std::string name;
  int first = 0;
  int count = 0;
};

struct Circuit {
  int num_qubits = 0;
  std::vector<Instruction> ops;
  std::vector<RegisterRange> layout;
  bool classical_flag = false;

  void push(GateOp g) { ops.emplace_back(g); }
  void push(Block b) { ops.emplace_back(std::move(b)); }

  std::size_t gate_count() const {
    std::size_t n = 0;
    for (const Instruction& in : ops)
      n += std::holds_alternative<GateOp>(in)
               ? 1
               : std::get<Block>(in).gates.size();
    return n;
  }

  const RegisterRange& reg(const std::string& name) const {
    for (const RegisterRange& r : layout)
      if (r.name == name) return r;
    throw std::invalid_argument("circuit has no register named " + name);
  }
};

inline Circuit inverse(const Circuit& c) {
  Circuit inv;
  inv.num_qubits = c.num_qubits;
  inv.layout = c.layout;
  inv.classical_flag = c.classical_flag;
  for (auto it = c.ops.rbegin(); it != c.ops.rend(); ++it) {
    if (std::holds_alternative<GateOp>(*it))
      inv.push(std::get<GateOp>(*it).adjoint());
    else
      inv.push(std::get<Block>(*it).adjoint());
  }
  return inv;
}

/// Textual netlist, one gate per line (kind, then qubit indices). Blocks
/// are flattened; their boundaries appear as comment lines.
inline std::string to_netlist(const Circuit& c) {
  std::ostringstream os;
  os << "# qubits " << c.num_qubits << "\n";
  for (const RegisterRange& r : c.layout)
    os << "# register " << r.name << " [" << r.first << ", "
       << r.first + r.count << ")\n";
  const auto emit = [&os](const GateOp& g) {
    os << gate_name(g.kind);
    if (g.kind == GateKind::kCphase || g.kind == GateKind::kCphaseDagger)
      os << "(" << g.phase_level << ")";
    for (int i = 0; i < g.arity(); ++i) os << " " << g.qubits[i];
    os << "\n";
  };
  for (const Instruction& in : c.ops) {
    if (std::holds_alternative<GateOp>(in)) {
      emit(std::get<GateOp>(in));
    } else {
      const Block& b = std::get<Block>(in);
      os << "# begin " << b.name;
      for (int q : b.qubits) os << " " << q;
      os << "\n";
      for (const GateOp& g : b.gates) emit(g.remapped(b.qubits));
      os << "# end " << b.name << "\n";
    }
  }
  return os.str();
}

}  // namespace qumul

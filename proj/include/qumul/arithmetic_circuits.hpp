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
#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qumul/circuit.hpp"
#include "qumul/natural.hpp"
#include "qumul/simulator.hpp"

namespace qumul {

enum class PrimitiveKind { kQac, kQfa, kQfs, kFinalAdding };

enum class MultiplierAlgorithm { kGradeSchool, kKaratsuba };

/// A reversible multiplier: basis-encoded x and y in, x*y in the product
/// register, everything else ancilla workspace (garbage unless listed in
/// `restored`, which names work qubits that provably return to |0>).
struct MultiplierCircuit {
  Circuit circuit;
  std::size_t n = 0;
  MultiplierAlgorithm algorithm = MultiplierAlgorithm::kGradeSchool;
  std::vector<int> restored;

  const RegisterRange& x_register() const { return circuit.reg("x"); }
  const RegisterRange& y_register() const { return circuit.reg("y"); }
  const RegisterRange& product_register() const {
    return circuit.reg("product");
  }
};

namespace detail {

// Appends the 5-gate controlled-V realization of a Toffoli with controls
// c1, c2 and target t (local wire indices).
inline void push_toffoli_cv(std::vector<GateOp>& gates, int c1, int c2,
                            int t) {
  gates.push_back(GateOp::cv(c2, t));
  gates.push_back(GateOp::cnot(c1, c2));
  gates.push_back(GateOp::cvdg(c2, t));
  gates.push_back(GateOp::cnot(c1, c2));
  gates.push_back(GateOp::cv(c1, t));
}

// Quantum ANDing block. Wires (A, C, Q): Q ^= A & C, inputs restored.
inline Block make_qac(int a, int c, int q) {
  Block b;
  b.name = "QAC";
  b.qubits = {a, c, q};
  push_toffoli_cv(b.gates, 0, 1, 2);
  return b;
}

// Full adder block. Wires (A, B, C, anc): C <- A xor B xor C (sum),
// anc <- majority(A, B, C) (carry). A is restored, B ends as A xor B.
inline Block make_qfa(int a, int bq, int c, int anc) {
  Block b;
  b.name = "QFA";
  b.qubits = {a, bq, c, anc};
  push_toffoli_cv(b.gates, 0, 1, 3);
  b.gates.push_back(GateOp::cnot(0, 1));
  push_toffoli_cv(b.gates, 1, 2, 3);
  b.gates.push_back(GateOp::cnot(1, 2));
  return b;
}

// Full subtractor block for A - B - C. Wires (A, B, C, anc):
// C <- A xor B xor C (difference), anc <- borrow, where
// borrow = (~A)B xor (~(A xor B))C. A is restored, B ends as A xor B.
inline Block make_qfs(int a, int bq, int c, int anc) {
  Block b;
  b.name = "QFS";
  b.qubits = {a, bq, c, anc};
  b.gates.push_back(GateOp::x(0));
  push_toffoli_cv(b.gates, 0, 1, 3);
  b.gates.push_back(GateOp::x(0));
  b.gates.push_back(GateOp::cnot(0, 1));
  b.gates.push_back(GateOp::x(1));
  push_toffoli_cv(b.gates, 1, 2, 3);
  b.gates.push_back(GateOp::x(1));
  b.gates.push_back(GateOp::cnot(1, 2));
  return b;
}

// Incrementally builds a circuit, handing out fresh |0> ancillas.
class CircuitBuilder {
 public:
  explicit CircuitBuilder(int preallocated) : next_(preallocated) {
    circuit_.num_qubits = preallocated;
  }

  int alloc() {
    const int q = next_++;
    circuit_.num_qubits = next_;
    return q;
  }

  std::vector<int> alloc_many(std::size_t count) {
    std::vector<int> qs(count);
    for (auto& q : qs) q = alloc();
    return qs;
  }

  void gate(GateOp g) { circuit_.push(g); }
  void block(Block b) { circuit_.push(std::move(b)); }

  std::vector<int> copy_bits(const std::vector<int>& src) {
    std::vector<int> dst = alloc_many(src.size());
    for (std::size_t i = 0; i < src.size(); ++i)
      gate(GateOp::cnot(src[i], dst[i]));
    return dst;
  }

  Circuit& circuit() { return circuit_; }
  int num_qubits() const { return next_; }

 private:
  Circuit circuit_;
  int next_ = 0;
};

// Multi-operand adder. Terms are (column, qubit) pairs; compress() reduces
// every column to a single bit with full-adder (3 -> sum+carry) and
// ANDing/CNOT half-adder (2 -> sum+carry) steps, rippling carries upward.
// Consumed term qubits become garbage; the returned qubits hold the sum.
class ColumnAdder {
 public:
  void add_term(std::size_t column, int qubit) {
    if (columns_.size() <= column) columns_.resize(column + 1);
    columns_[column].push_back(qubit);
  }

  // Returns one qubit per column [0, width). Columns beyond `width` that
  // arise from carries are appended to `overflow` (always-zero bits when
  // the true sum fits in `width` columns).
  std::vector<int> compress(CircuitBuilder& b, std::size_t width,
                            std::vector<int>* overflow = nullptr) {
    if (columns_.size() < width) columns_.resize(width);
    std::vector<int> out;
    // add_term() may reallocate columns_, so never hold a reference into it
    for (std::size_t col = 0; col < columns_.size(); ++col) {
      while (columns_[col].size() >= 3) {
        const std::size_t m = columns_[col].size();
        const int a = columns_[col][m - 3];
        const int s = columns_[col][m - 2];
        const int c = columns_[col][m - 1];
        columns_[col].resize(m - 3);
        const int carry = b.alloc();
        b.block(make_qfa(a, s, c, carry));
        columns_[col].push_back(c);  // sum
        add_term(col + 1, carry);
      }
      if (columns_[col].size() == 2) {
        const int a = columns_[col][0], s = columns_[col][1];
        columns_[col].clear();
        const int carry = b.alloc();
        b.block(make_qac(a, s, carry));  // carry = a & s
        b.gate(GateOp::cnot(a, s));      // s = a xor s
        columns_[col].push_back(s);
        add_term(col + 1, carry);
      }
      const int bit = columns_[col].empty() ? b.alloc() : columns_[col][0];
      if (col < width)
        out.push_back(bit);
      else if (overflow != nullptr)
        overflow->push_back(bit);
    }
    while (out.size() < width) out.push_back(b.alloc());
    return out;
  }

 private:
  std::vector<std::vector<int>> columns_;
};

// Ripple subtraction: difference = minuend - subtrahend (non-negative by
// construction at every call site). Minuend bits are preserved; subtrahend
// bits are consumed. Returns |minuend| difference bits; the final borrow
// ancilla (always |0> for in-range values) is appended to `restored`.
inline std::vector<int> subtract_registers(CircuitBuilder& b,
                                           const std::vector<int>& minuend,
                                           std::vector<int> subtrahend,
                                           std::vector<int>* restored) {
  while (subtrahend.size() < minuend.size()) subtrahend.push_back(b.alloc());
  std::vector<int> diff;
  int borrow = b.alloc();
  for (std::size_t i = 0; i < minuend.size(); ++i) {
    const int next_borrow = b.alloc();
    b.block(make_qfs(minuend[i], subtrahend[i], borrow, next_borrow));
    diff.push_back(borrow);  // difference bit landed on the borrow-in wire
    borrow = next_borrow;
  }
  if (restored != nullptr) restored->push_back(borrow);
  return diff;
}

// Grade-school core: PPG (one QAC per x_i y_j pair) followed by PPA
// (column compression). Input registers are preserved; returns
// |x|+|y| product bits. Always-zero carry columns go to `restored`.
inline std::vector<int> grade_school_core(CircuitBuilder& b,
                                          const std::vector<int>& xbits,
                                          const std::vector<int>& ybits,
                                          std::vector<int>* restored) {
  ColumnAdder adder;
  for (std::size_t i = 0; i < xbits.size(); ++i)
    for (std::size_t j = 0; j < ybits.size(); ++j) {
      const int pp = b.alloc();
      b.block(make_qac(xbits[i], ybits[j], pp));
      adder.add_term(i + j, pp);
    }
  std::vector<int> overflow;
  std::vector<int> prod =
      adder.compress(b, xbits.size() + ybits.size(), &overflow);
  if (restored != nullptr)
    restored->insert(restored->end(), overflow.begin(), overflow.end());
  return prod;
}

// Adds two bit lists. Both operand vectors are consumed as compression
// garbage, so pass copies when the values are still needed. Returns
// max(|a|,|c|)+1 sum bits.
inline std::vector<int> add_registers(CircuitBuilder& b,
                                      const std::vector<int>& a,
                                      const std::vector<int>& c,
                                      std::vector<int>* restored) {
  ColumnAdder adder;
  for (std::size_t i = 0; i < a.size(); ++i) adder.add_term(i, a[i]);
  for (std::size_t i = 0; i < c.size(); ++i) adder.add_term(i, c[i]);
  std::vector<int> overflow;
  std::vector<int> sum =
      adder.compress(b, std::max(a.size(), c.size()) + 1, &overflow);
  if (restored != nullptr)
    restored->insert(restored->end(), overflow.begin(), overflow.end());
  return sum;
}

// Karatsuba recursion on equal-width bit lists. Widths <= 5 fall back to
// the grade-school core (4 plus one widening bit for the step-5 operands).
inline std::vector<int> karatsuba_core(CircuitBuilder& b,
                                       const std::vector<int>& xbits,
                                       const std::vector<int>& ybits,
                                       std::vector<int>* restored) {
  const std::size_t w = xbits.size();
  if (w <= 5) return grade_school_core(b, xbits, ybits, restored);
  const std::size_t h = w / 2;
  const std::vector<int> xlo(xbits.begin(), xbits.begin() + h);
  const std::vector<int> xhi(xbits.begin() + h, xbits.end());
  const std::vector<int> ylo(ybits.begin(), ybits.begin() + h);
  const std::vector<int> yhi(ybits.begin() + h, ybits.end());

  const std::vector<int> u = karatsuba_core(b, xhi, yhi, restored);
  const std::vector<int> v = karatsuba_core(b, xlo, ylo, restored);

  // step 5 operands on copies: the halves are still live inputs
  const std::vector<int> sx =
      add_registers(b, b.copy_bits(xhi), b.copy_bits(xlo), restored);
  const std::vector<int> sy =
      add_registers(b, b.copy_bits(yhi), b.copy_bits(ylo), restored);
  const std::vector<int> wprod = karatsuba_core(b, sx, sy, restored);

  // z = w - (u + v); u and v are copied because final adding needs them
  const std::vector<int> uv =
      add_registers(b, b.copy_bits(u), b.copy_bits(v), restored);
  const std::vector<int> z = subtract_registers(b, wprod, uv, restored);

  // final adding: p = 2^{2h} u + 2^h z + v
  ColumnAdder adder;
  for (std::size_t i = 0; i < u.size(); ++i) adder.add_term(2 * h + i, u[i]);
  for (std::size_t i = 0; i < z.size(); ++i) adder.add_term(h + i, z[i]);
  for (std::size_t i = 0; i < v.size(); ++i) adder.add_term(i, v[i]);
  std::vector<int> overflow;
  std::vector<int> prod = adder.compress(b, 2 * w, &overflow);
  if (restored != nullptr)
    restored->insert(restored->end(), overflow.begin(), overflow.end());
  return prod;
}

inline MultiplierCircuit finish_multiplier(CircuitBuilder& b, std::size_t n,
                                           MultiplierAlgorithm algorithm,
                                           const std::vector<int>& prod_bits,
                                           std::vector<int> restored) {
  const int in = static_cast<int>(n);
  for (std::size_t i = 0; i < prod_bits.size(); ++i)
    b.gate(GateOp::cnot(prod_bits[i], 2 * in + static_cast<int>(i)));
  MultiplierCircuit mc;
  mc.n = n;
  mc.algorithm = algorithm;
  mc.restored = std::move(restored);
  mc.circuit = std::move(b.circuit());
  mc.circuit.layout = {
      {"x", 0, in},
      {"y", in, in},
      {"product", 2 * in, 2 * in},
      {"work", 4 * in, mc.circuit.num_qubits - 4 * in}};
  finalize_classical(mc.circuit);
  return mc;
}

}  // namespace detail

/// Gate-level circuits for the reversible primitives, with the layout
/// documenting which wires carry the outputs. QAC: wires (a, c, q), q = a & c.
/// QFA/QFS: wires (a, b, r, s) with the sum/difference on r (fed by the
/// carry/borrow-in) and the carry/borrow on s. FinalAdding(n): registers
/// u[n], z[n+1], v[n] -> p[2n+1] computing 2^n u + 2^{n/2} z + v.
inline Circuit build_primitive(PrimitiveKind kind, std::size_t n = 0) {
  Circuit c;
  switch (kind) {
    case PrimitiveKind::kQac: {
      c.num_qubits = 3;
      c.layout = {{"a", 0, 1}, {"c", 1, 1}, {"q", 2, 1}};
      c.push(detail::make_qac(0, 1, 2));
      break;
    }
    case PrimitiveKind::kQfa: {
      c.num_qubits = 4;
      c.layout = {{"a", 0, 1}, {"b", 1, 1}, {"r", 2, 1}, {"s", 3, 1}};
      c.push(detail::make_qfa(0, 1, 2, 3));
      break;
    }
    case PrimitiveKind::kQfs: {
      c.num_qubits = 4;
      c.layout = {{"a", 0, 1}, {"b", 1, 1}, {"r", 2, 1}, {"s", 3, 1}};
      c.push(detail::make_qfs(0, 1, 2, 3));
      break;
    }
    case PrimitiveKind::kFinalAdding: {
      if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("FinalAdding: n must be even and >= 2");
      const int in = static_cast<int>(n);
      detail::CircuitBuilder b(5 * in + 2);  // u + z + v + p
      std::vector<int> u(n), z(n + 1), v(n);
      for (std::size_t i = 0; i < n; ++i) u[i] = static_cast<int>(i);
      for (std::size_t i = 0; i < n + 1; ++i)
        z[i] = in + static_cast<int>(i);
      for (std::size_t i = 0; i < n; ++i)
        v[i] = 2 * in + 1 + static_cast<int>(i);
      detail::ColumnAdder adder;
      for (std::size_t i = 0; i < n; ++i) adder.add_term(n + i, u[i]);
      for (std::size_t i = 0; i < n + 1; ++i) adder.add_term(n / 2 + i, z[i]);
      for (std::size_t i = 0; i < n; ++i) adder.add_term(i, v[i]);
      std::vector<int> prod = adder.compress(b, 2 * n + 1);
      for (std::size_t i = 0; i < prod.size(); ++i)
        b.gate(GateOp::cnot(prod[i], 3 * in + 1 + static_cast<int>(i)));
      c = std::move(b.circuit());
      c.layout = {{"u", 0, in},
                  {"z", in, in + 1},
                  {"v", 2 * in + 1, in},
                  {"p", 3 * in + 1, 2 * in + 1},
                  {"work", 5 * in + 2, c.num_qubits - (5 * in + 2)}};
      break;
    }
  }
  finalize_classical(c);
  return c;
}

/// Grade-school multiplier: PPG stage of n^2 QAC blocks, then a PPA stage
/// of QFA compression. Product register reads x*y for every basis input.
inline MultiplierCircuit build_grade_school(std::size_t n) {
  if (n < 1) throw std::invalid_argument("build_grade_school: n must be >= 1");
  const int in = static_cast<int>(n);
  detail::CircuitBuilder b(4 * in);
  std::vector<int> xbits(n), ybits(n);
  for (std::size_t i = 0; i < n; ++i) {
    xbits[i] = static_cast<int>(i);
    ybits[i] = in + static_cast<int>(i);
  }
  std::vector<int> restored;
  const std::vector<int> prod =
      detail::grade_school_core(b, xbits, ybits, &restored);
  return detail::finish_multiplier(b, n, MultiplierAlgorithm::kGradeSchool,
                                   prod, std::move(restored));
}

/// Karatsuba multiplier (n a power of two, n >= 4): recursion per the
/// split/recombine steps with a grade-school base, widened by one bit for
/// the step-5 sum operands.
inline MultiplierCircuit build_karatsuba(std::size_t n) {
  if (n < 4 || !std::has_single_bit(n))
    throw std::invalid_argument(
        "build_karatsuba: n must be a power of two >= 4");
  const int in = static_cast<int>(n);
  detail::CircuitBuilder b(4 * in);
  std::vector<int> xbits(n), ybits(n);
  for (std::size_t i = 0; i < n; ++i) {
    xbits[i] = static_cast<int>(i);
    ybits[i] = in + static_cast<int>(i);
  }
  std::vector<int> restored;
  const std::vector<int> prod =
      detail::karatsuba_core(b, xbits, ybits, &restored);
  MultiplierCircuit mc = detail::finish_multiplier(
      b, n, MultiplierAlgorithm::kKaratsuba, prod, std::move(restored));
  return mc;
}

/// Loads x and y, runs the reversible backend, and decodes the product
/// register.
inline Natural multiply_reversible(const MultiplierCircuit& mc,
                                   const Natural& x, const Natural& y) {
  if (x.bit_length() > mc.n || y.bit_length() > mc.n)
    throw std::invalid_argument("multiply_reversible: operand exceeds n bits");
  BasisState in(static_cast<std::size_t>(mc.circuit.num_qubits), 0);
  store_field(in, mc.x_register(), x);
  store_field(in, mc.y_register(), y);
  const BasisState out = run_reversible(mc.circuit, std::move(in));
  return load_field(out, mc.product_register());
}

}  // namespace qumul

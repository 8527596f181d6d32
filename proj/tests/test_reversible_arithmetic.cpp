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

#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <random>

#include "qumul/arithmetic_circuits.hpp"
#include "qumul/natural.hpp"
#include "qumul/simulator.hpp"

using namespace qumul;

namespace {

// Runs a primitive circuit on a basis input given as per-register values.
std::uint64_t run_bits(const Circuit& c, std::uint64_t input) {
  return run_reversible(c, input);
}

void check_restored(const MultiplierCircuit& mc, const BasisState& out) {
  for (int q : mc.restored) REQUIRE(out.at(static_cast<std::size_t>(q)) == 0);
}

Natural product_of(const MultiplierCircuit& mc, std::uint64_t x,
                   std::uint64_t y, bool check_hygiene = false) {
  BasisState in(static_cast<std::size_t>(mc.circuit.num_qubits), 0);
  store_field(in, mc.x_register(), Natural(x));
  store_field(in, mc.y_register(), Natural(y));
  const BasisState out = run_reversible(mc.circuit, std::move(in));
  if (check_hygiene) check_restored(mc, out);
  return load_field(out, mc.product_register());
}

}  // namespace

TEST_CASE("QAC block") {
  const Circuit qac = build_primitive(PrimitiveKind::kQac);
  REQUIRE(qac.classical_flag);
  // wires: a=0, c=1, q=2
  for (std::uint64_t a = 0; a < 2; ++a)
    for (std::uint64_t c = 0; c < 2; ++c) {
      const std::uint64_t out = run_bits(qac, a | (c << 1));
      REQUIRE((out & 1) == a);              // inputs restored
      REQUIRE(((out >> 1) & 1) == c);
      REQUIRE(((out >> 2) & 1) == (a & c)); // Q = A AND C
    }
}

TEST_CASE("QFA block") {
  const Circuit qfa = build_primitive(PrimitiveKind::kQfa);
  // wires: a=0, b=1, carry-in/sum=2, carry-out=3
  for (std::uint64_t a = 0; a < 2; ++a)
    for (std::uint64_t b = 0; b < 2; ++b)
      for (std::uint64_t cin = 0; cin < 2; ++cin) {
        const std::uint64_t out = run_bits(qfa, a | (b << 1) | (cin << 2));
        const std::uint64_t total = a + b + cin;
        REQUIRE(((out >> 2) & 1) == (total & 1));  // sum R
        REQUIRE(((out >> 3) & 1) == (total >> 1)); // carry S
      }
  // the worked pair from the truth table: 1 + 1 + 0 = 10b
  const std::uint64_t out = run_bits(qfa, 0b011);
  REQUIRE(((out >> 2) & 1) == 0);
  REQUIRE(((out >> 3) & 1) == 1);
}

TEST_CASE("QFS block") {
  const Circuit qfs = build_primitive(PrimitiveKind::kQfs);
  // wires: a=0 (minuend), b=1 (subtrahend), borrow-in/difference=2, borrow=3
  for (std::uint64_t a = 0; a < 2; ++a)
    for (std::uint64_t b = 0; b < 2; ++b)
      for (std::uint64_t cin = 0; cin < 2; ++cin) {
        const std::uint64_t out = run_bits(qfs, a | (b << 1) | (cin << 2));
        const std::int64_t diff = static_cast<std::int64_t>(a) -
                                  static_cast<std::int64_t>(b) -
                                  static_cast<std::int64_t>(cin);
        REQUIRE(((out >> 2) & 1) == (static_cast<std::uint64_t>(diff) & 1));
        REQUIRE(((out >> 3) & 1) == (diff < 0 ? 1u : 0u));
      }
  // A=0, B=1, C=0: difference 1, borrow 1
  const std::uint64_t out = run_bits(qfs, 0b010);
  REQUIRE(((out >> 2) & 1) == 1);
  REQUIRE(((out >> 3) & 1) == 1);
}

TEST_CASE("blocks are basis permutations") {
  // precondition for the reversible backend; verify_block_permutation throws
  // if any dense column is not a basis state
  for (const Block& b :
       {detail::make_qac(0, 1, 2), detail::make_qfa(0, 1, 2, 3),
        detail::make_qfs(0, 1, 2, 3)}) {
    const auto perm = verify_block_permutation(b);
    std::vector<bool> seen(perm.size(), false);
    for (const std::uint32_t p : perm) {
      REQUIRE(p < perm.size());
      REQUIRE_FALSE(seen[p]);
      seen[p] = true;
    }
  }
}

TEST_CASE("FinalAdding primitive") {
  const std::size_t n = 4;
  const Circuit fa = build_primitive(PrimitiveKind::kFinalAdding, n);
  REQUIRE(fa.classical_flag);
  std::mt19937_64 rng(53);
  for (int rep = 0; rep < 300; ++rep) {
    const std::uint64_t u = rng() % 16, z = rng() % 32, v = rng() % 16;
    BasisState in(static_cast<std::size_t>(fa.num_qubits), 0);
    store_field(in, fa.reg("u"), Natural(u));
    store_field(in, fa.reg("z"), Natural(z));
    store_field(in, fa.reg("v"), Natural(v));
    const BasisState out = run_reversible(fa, std::move(in));
    REQUIRE(load_field(out, fa.reg("p")).to_uint64() ==
            (u << n) + (z << (n / 2)) + v);
  }
  REQUIRE_THROWS_AS(build_primitive(PrimitiveKind::kFinalAdding, 5),
                    std::invalid_argument);
}

TEST_CASE("grade-school multiplier") {
  SECTION("worked pair at n=2") {
    const MultiplierCircuit mc = build_grade_school(2);
    REQUIRE(mc.circuit.classical_flag);
    REQUIRE(mc.product_register().count == 4);
    REQUIRE(product_of(mc, 3, 2).to_uint64() == 6);
  }

  SECTION("exhaustive n = 1, 2, 3") {
    for (std::size_t n = 1; n <= 3; ++n) {
      const MultiplierCircuit mc = build_grade_school(n);
      for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x)
        for (std::uint64_t y = 0; y < (std::uint64_t{1} << n); ++y)
          REQUIRE(product_of(mc, x, y, true).to_uint64() == x * y);
    }
  }

  SECTION("exhaustive n = 4") {
    const MultiplierCircuit mc = build_grade_school(4);
    for (std::uint64_t x = 0; x < 16; ++x)
      for (std::uint64_t y = 0; y < 16; ++y)
        REQUIRE(product_of(mc, x, y, true).to_uint64() == x * y);
    REQUIRE(product_of(mc, 15, 15).to_uint64() == 225);
  }
}

TEST_CASE("karatsuba multiplier") {
  SECTION("n=4 behaves like grade-school(4)") {
    const MultiplierCircuit mc = build_karatsuba(4);
    REQUIRE(mc.algorithm == MultiplierAlgorithm::kKaratsuba);
    REQUIRE(product_of(mc, 13, 11).to_uint64() == 143);
    for (std::uint64_t x = 0; x < 16; ++x)
      for (std::uint64_t y = 0; y < 16; ++y)
        REQUIRE(product_of(mc, x, y, true).to_uint64() == x * y);
  }

  SECTION("n=8 random pairs") {
    const MultiplierCircuit mc = build_karatsuba(8);
    std::mt19937_64 rng(59);
    for (int rep = 0; rep < 500; ++rep) {
      const std::uint64_t x = rng() % 256, y = rng() % 256;
      REQUIRE(product_of(mc, x, y, true).to_uint64() == x * y);
    }
    for (std::uint64_t y : {0ull, 1ull, 77ull, 255ull})
      REQUIRE(product_of(mc, 0, y).is_zero());
  }

  SECTION("invalid sizes") {
    REQUIRE_THROWS_AS(build_karatsuba(2), std::invalid_argument);
    REQUIRE_THROWS_AS(build_karatsuba(6), std::invalid_argument);
  }
}

TEST_CASE("multiply_reversible") {
  const MultiplierCircuit grade4 = build_grade_school(4);
  REQUIRE(multiply_reversible(grade4, Natural(8), Natural(9)).to_uint64() ==
          72);
  REQUIRE(multiply_reversible(grade4, Natural(1), Natural(1)).to_uint64() ==
          1);
  REQUIRE_THROWS_AS(multiply_reversible(grade4, Natural(16), Natural(1)),
                    std::invalid_argument);

  const MultiplierCircuit kara8 = build_karatsuba(8);
  REQUIRE(multiply_reversible(kara8, Natural(255), Natural(255)).to_uint64() ==
          65025);
}

TEST_CASE("reversible backend agrees with dense simulation on multipliers") {
  SECTION("n=1 exhaustive over all basis inputs") {
    const MultiplierCircuit mc = build_grade_school(1);
    const int q = mc.circuit.num_qubits;
    REQUIRE(q <= 16);
    for (std::uint64_t in = 0; in < (std::uint64_t{1} << q); ++in) {
      const std::uint64_t fast = run_reversible(mc.circuit, in);
      const Statevector s =
          apply_circuit(Statevector::basis(q, in), mc.circuit);
      REQUIRE(std::abs(s.amplitude(fast) - Amplitude(1.0, 0.0)) < 1e-9);
    }
  }

  SECTION("n=2 on sampled basis inputs") {
    const MultiplierCircuit mc = build_grade_school(2);
    const int q = mc.circuit.num_qubits;
    REQUIRE(q <= 16);
    std::mt19937_64 rng(61);
    for (int rep = 0; rep < 64; ++rep) {
      const std::uint64_t in = rng() & ((std::uint64_t{1} << q) - 1);
      const std::uint64_t fast = run_reversible(mc.circuit, in);
      const Statevector s =
          apply_circuit(Statevector::basis(q, in), mc.circuit);
      REQUIRE(std::abs(s.amplitude(fast) - Amplitude(1.0, 0.0)) < 1e-9);
    }
  }
}

TEST_CASE("multiplier followed by its inverse restores every input") {
  std::mt19937_64 rng(67);
  for (const auto& mc :
       {build_grade_school(3), build_karatsuba(8)}) {
    const Circuit inv = inverse(mc.circuit);
    REQUIRE(inv.classical_flag);
    for (int rep = 0; rep < 50; ++rep) {
      BasisState in(static_cast<std::size_t>(mc.circuit.num_qubits), 0);
      for (auto& bit : in) bit = rng() & 1;
      const BasisState mid = run_reversible(mc.circuit, in);
      REQUIRE(run_reversible(inv, mid) == in);
    }
  }
}

TEST_CASE("multiplier netlists flatten to engine gates") {
  const MultiplierCircuit mc = build_grade_school(2);
  const std::string net = to_netlist(mc.circuit);
  REQUIRE(net.find("# begin QAC") != std::string::npos);
  REQUIRE(net.find("cv ") != std::string::npos);
  REQUIRE(net.find("# register product [4, 8)") != std::string::npos);
}

// Copyright 2026 The qcc Authors
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

#include <doctest.h>

#include <cmath>

#include "gadget/Pauli.hpp"
#include "gadget/PauliSimp.hpp"
#include "gadget/PhaseGadget.hpp"
#include "gadget/Tableau.hpp"
#include "ir/Boxes.hpp"
#include "ir/Errors.hpp"
#include "peephole/Rebase.hpp"
#include "peephole/Transforms.hpp"
#include "peephole/Util.hpp"
#include "sim/Unitary.hpp"
#include "support/Helpers.hpp"

using namespace qcc;

namespace {

MatrixX pauli_matrix(const PauliString& p) {
  MatrixX m = MatrixX::Identity(1, 1);
  for (unsigned q = 0; q < p.size(); ++q) {
    MatrixX l(2, 2);
    switch (p.letter(q)) {
      case Pauli::I: l << 1, 0, 0, 1; break;
      case Pauli::X: l << 0, 1, 1, 0; break;
      case Pauli::Y: l << 0, std::complex<double>(0, -1), std::complex<double>(0, 1), 0; break;
      case Pauli::Z: l << 1, 0, 0, -1; break;
    }
    m = kron(l, m);
  }
  return p.negative ? MatrixX(-m) : m;
}

Circuit random_clifford(unsigned n, unsigned gates, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, 4);
  std::uniform_int_distribution<unsigned> qd(0, n - 1);
  Circuit c(n);
  for (unsigned k = 0; k < gates; ++k) {
    unsigned a = qd(rng), b = qd(rng);
    while (n > 1 && b == a) b = qd(rng);
    switch (pick(rng)) {
      case 0: c.add_op(OpType::H, {a}); break;
      case 1: c.add_op(OpType::S, {a}); break;
      case 2: c.add_op(OpType::Sdg, {a}); break;
      case 3: c.add_op(OpType::CZ, {a, b}); break;
      default: c.add_op(OpType::CX, {a, b}); break;
    }
  }
  return c;
}

unsigned cx_depth(const Circuit& c) {
  return c.depth([](const Op& op) { return op.type() == OpType::CX; });
}

}  // namespace

TEST_CASE("pauli products and commutation") {
  PauliString x({Pauli::X}), y({Pauli::Y}), z({Pauli::Z});
  CHECK_FALSE(x.commutes_with(z));
  PauliString xz({Pauli::X, Pauli::Z}), zx({Pauli::Z, Pauli::X});
  CHECK(xz.commutes_with(zx));
  // XZ = -iY, so only Hermitian products are representable; XX = I.
  PauliString ii = multiply(x, x);
  CHECK(ii.is_identity());
  CHECK_FALSE(ii.negative);
  CHECK(PauliString({Pauli::X, Pauli::I, Pauli::Z}).support() == std::vector<unsigned>{0, 2});
}

TEST_CASE("tableau conjugation matches dense matrices for every Pauli on three qubits") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    Circuit c = random_clifford(3, 25, seed);
    Tableau t = Tableau::from_circuit(c);
    MatrixX u = circuit_unitary(c);
    for (unsigned code = 1; code < 64; ++code) {
      std::vector<Pauli> letters;
      for (unsigned q = 0; q < 3; ++q) letters.push_back(static_cast<Pauli>((code >> (2 * q)) & 3));
      PauliString p(letters);
      PauliString img = t.conjugate(p);
      MatrixX expect = u * pauli_matrix(p) * u.adjoint();
      CHECK((pauli_matrix(img) - expect).norm() < 1e-10);
    }
  }
}

TEST_CASE("tableau synthesis reproduces the Clifford") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Circuit c = random_clifford(4, 40, seed);
    Tableau t = Tableau::from_circuit(c);
    Circuit s = t.synthesise();
    CHECK(Tableau::from_circuit(s) == t);
    CHECK(equiv_up_to_phase(c, s));
  }
}

TEST_CASE("tableau rejects non-Clifford gates") {
  Circuit c(1);
  c.add_op(OpType::T, {0});
  bool threw = false;
  try {
    Tableau::from_circuit(c);
  } catch (const Error& e) {
    threw = e.code() == ErrorCode::NonCliffordGate;
  }
  CHECK(threw);
}

TEST_CASE("phase gadget CX count and depth") {
  for (unsigned n = 1; n <= 8; ++n) {
    std::vector<unsigned> qs(n);
    for (unsigned i = 0; i < n; ++i) qs[i] = i;
    Circuit bal = phase_gadget_circuit(n, qs, Angle::exact(1, 7), true);
    Circuit lad = phase_gadget_circuit(n, qs, Angle::exact(1, 7), false);
    CHECK(bal.two_qubit_gate_count() == 2 * (n - 1));
    CHECK(lad.two_qubit_gate_count() == 2 * (n - 1));
    unsigned log = n > 1 ? static_cast<unsigned>(std::ceil(std::log2(n))) : 0;
    CHECK(cx_depth(bal) == 2 * log);
    CHECK(cx_depth(lad) == 2 * (n - 1));
    if (n <= 6) {
      Circuit ref = pauli_gadget_ladder(std::vector<Pauli>(n, Pauli::Z), Angle::exact(1, 7));
      CHECK(equiv_up_to_phase(ref, bal));
      CHECK(equiv_up_to_phase(ref, lad));
    }
  }
}

TEST_CASE("pauli gadgets with signs and letters") {
  for (const char* s : {"XYZ", "YIX", "ZZI", "IYY"}) {
    for (bool neg : {false, true}) {
      PauliString p(parse_pauli_string(s), neg);
      std::vector<Gate> gates;
      append_pauli_gadget(gates, p, Angle::exact(1, 3));
      Circuit c(3);
      for (const Gate& g : gates) c.add_op(g.op, g.qubits);
      Circuit ref = pauli_gadget_ladder(p.letters(), neg ? -Angle::exact(1, 3) : Angle::exact(1, 3));
      CHECK(equiv_up_to_phase(ref, c));
    }
  }
}

TEST_CASE("shared-parity gadget pairs use fewer CX") {
  PauliString p1(parse_pauli_string("XXYX")), p2(parse_pauli_string("XXXY"));
  CHECK(common_letters(p1, p2) == std::vector<unsigned>{0, 1});
  std::vector<Gate> pair, naive;
  append_pauli_gadget_pair(pair, p1, Angle::exact(1, 5), p2, Angle::exact(2, 7));
  append_pauli_gadget(naive, p1, Angle::exact(1, 5));
  append_pauli_gadget(naive, p2, Angle::exact(2, 7));
  Circuit a(4), b(4);
  for (const Gate& g : pair) a.add_op(g.op, g.qubits);
  for (const Gate& g : naive) b.add_op(g.op, g.qubits);
  CHECK(a.two_qubit_gate_count() < b.two_qubit_gate_count());
  CHECK(equiv_up_to_phase(a, b));
}

TEST_CASE("detection finds a ladder gadget") {
  Circuit c(3);
  c.add_op(OpType::CX, {0, 1});
  c.add_op(OpType::CX, {1, 2});
  c.add_op(OpType::Rz, {2}, {Angle::exact(1, 4)});
  c.add_op(OpType::CX, {1, 2});
  c.add_op(OpType::CX, {0, 1});
  GadgetDetection d = detect_phase_gadgets(c);
  REQUIRE(d.gadgets.size() == 1);
  CHECK(d.gadgets[0].gadget.qubits.size() == 3);
  CHECK(d.gadgets[0].gadget.qubits.back() == 2);
  CHECK(d.residual.empty());
  Circuit r = reconstruct_phase_gadgets(c, d, true);
  CHECK(equiv_up_to_phase(c, r));
  CHECK(cx_depth(r) == 4);
}

TEST_CASE("detection ignores non-gadget structure") {
  Circuit c(2);
  c.add_op(OpType::H, {0});
  c.add_op(OpType::CX, {0, 1});
  c.add_op(OpType::H, {0});
  GadgetDetection d = detect_phase_gadgets(c);
  CHECK(d.gadgets.empty());
}

TEST_CASE("adjacent two-qubit gadgets merge") {
  Circuit c = phase_gadget_circuit(2, {0, 1}, Angle::exact(1, 5));
  Circuit d = phase_gadget_circuit(2, {0, 1}, Angle::exact(1, 3));
  Circuit both = Circuit::compose(c, d);
  CHECK(both.two_qubit_gate_count() == 4);
  Circuit opt = both;
  optimise_phase_gadgets(opt);
  remove_redundancies(opt);
  CHECK(opt.two_qubit_gate_count() == 2);
  CHECK(equiv_up_to_phase(both, opt));
}

TEST_CASE("optimise phase gadgets leaves gadget-free circuits alone") {
  Circuit c(2);
  c.add_op(OpType::H, {0});
  c.add_op(OpType::Rx, {1}, {Angle::exact(1, 3)});
  Circuit before = c;
  CHECK_FALSE(optimise_phase_gadgets(c));
  CHECK(c.commands_equal(before));
}

TEST_CASE("optimise phase gadgets preserves random CX-Rz circuits") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<unsigned> qd(0, 3);
    std::uniform_int_distribution<int> pick(0, 3);
    Circuit c(4);
    for (int k = 0; k < 40; ++k) {
      unsigned a = qd(rng), b = qd(rng);
      while (b == a) b = qd(rng);
      int p = pick(rng);
      if (p == 0)
        c.add_op(OpType::Rz, {a}, {Angle::exact(static_cast<int>(b) + 1, 9)});
      else if (p == 1)
        c.add_op(OpType::H, {a});
      else
        c.add_op(OpType::CX, {a, b});
    }
    Circuit ref = c;
    optimise_phase_gadgets(c);
    CHECK(c.two_qubit_gate_count() <= ref.two_qubit_gate_count());
    CHECK(equiv_up_to_phase(ref, c));
  }
}

TEST_CASE("pauli form collects non-Clifford rotations") {
  Circuit c(2);
  c.add_op(OpType::H, {0});
  c.add_op(OpType::CX, {0, 1});
  c.add_op(OpType::Rz, {1}, {Angle::exact(1, 4)});
  PauliForm f = pauli_form(c);
  REQUIRE(f.rotations.size() == 1);
  // Z on qubit 1 pulled back through CX(0,1) then H(0) is X0 Z1.
  CHECK(f.rotations[0].pauli.letters() == std::vector<Pauli>{Pauli::X, Pauli::Z});
}

TEST_CASE("pauli simp preserves the unitary") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Circuit c = test::rich_random_circuit(4, 40, seed);
    rebase(c, internal_target());
    Circuit ref = c;
    pauli_simp(c);
    CHECK_MESSAGE(equiv_up_to_phase(ref, c), "seed " << seed);
  }
}

TEST_CASE("pauli simp on a single gadget does not add CX") {
  Circuit c = decompose_boxes([] {
    Circuit b(4);
    b.add_op(Op::pauli_exp_box(parse_pauli_string("XYZX"), Angle::exact(1, 9)),
             std::vector<unsigned>{0, 1, 2, 3});
    return b;
  }());
  Circuit ref = c;
  pauli_simp(c);
  CHECK(c.two_qubit_gate_count() <= ref.two_qubit_gate_count());
  CHECK(equiv_up_to_phase(ref, c));
}

TEST_CASE("pauli simp on a Clifford circuit") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Circuit c = random_clifford(5, 60, seed);
    Circuit ref = c;
    pauli_simp(c);
    CHECK(c.two_qubit_gate_count() <= 3 * 25);
    CHECK(equiv_up_to_phase(ref, c));
  }
}

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

#include "gadget/Tableau.hpp"
#include "ir/Errors.hpp"
#include "passes/Predicate.hpp"
#include "peephole/CliffordCatalog.hpp"
#include "peephole/CliffordSimp.hpp"
#include "peephole/Euler.hpp"
#include "peephole/Kak.hpp"
#include "peephole/Rebase.hpp"
#include "peephole/Transforms.hpp"
#include "sim/Unitary.hpp"
#include "support/Helpers.hpp"

using namespace qcc;

namespace {

MatrixX unitary_of(const Circuit& c) { return circuit_unitary(c); }

}  // namespace

TEST_CASE("euler circuits reproduce Haar unitaries in every basis") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 100; ++i) {
    Matrix2 u = test::haar_unitary(2, rng);
    for (EulerBasis b : {EulerBasis::ZXZ, EulerBasis::ZYZ, EulerBasis::U, EulerBasis::PhasedX}) {
      Circuit c = euler_circuit(u, b);
      CHECK(c.gate_count() <= 3);
      CHECK(Predicate::gate_set(euler_basis_gates(b)).check(c));
      CHECK(phase_distance(unitary_of(c), u) < 1e-10);
    }
  }
}

TEST_CASE("euler circuits of simple gates are short") {
  Matrix2 id = Matrix2::Identity();
  CHECK(euler_circuit(id, EulerBasis::ZXZ).gate_count() == 0);
  Matrix2 z = gate_matrix(Op(OpType::Z));
  CHECK(euler_circuit(z, EulerBasis::ZXZ).gate_count() == 1);
  Matrix2 x = gate_matrix(Op(OpType::X));
  CHECK(euler_circuit(x, EulerBasis::ZXZ).gate_count() == 1);
}

TEST_CASE("kak: Haar unitaries need at most three CX") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    Matrix4 u = test::haar_unitary(4, rng);
    Circuit c = kak_circuit(u);
    CHECK(c.two_qubit_gate_count() <= 3);
    CHECK(phase_distance(unitary_of(c), u) < 1e-8);
  }
}

TEST_CASE("kak: known CX counts") {
  auto count = [](OpType t) {
    Circuit g(2);
    g.add_op(t, {0, 1});
    return kak_circuit(unitary_of(g)).two_qubit_gate_count();
  };
  CHECK(count(OpType::CX) == 1);
  CHECK(count(OpType::CZ) == 1);
  CHECK(count(OpType::SWAP) == 3);
  Circuit loc(2);
  loc.add_op(OpType::H, {0});
  loc.add_op(OpType::T, {1});
  CHECK(kak_circuit(unitary_of(loc)).two_qubit_gate_count() == 0);
  Circuit crz(2);
  crz.add_op(OpType::CRz, {0, 1}, {Angle::exact(1, 3)});
  CHECK(kak_circuit(unitary_of(crz)).two_qubit_gate_count() == 2);
}

TEST_CASE("kak decomposition interaction coefficients") {
  KakDecomposition k = kak_decompose(canonical_gate(0.1, 0.05, 0.02));
  CHECK(k.a == doctest::Approx(0.1).epsilon(1e-9));
  CHECK(k.b == doctest::Approx(0.05).epsilon(1e-9));
  CHECK(k.c == doctest::Approx(0.02).epsilon(1e-9));
  CHECK(k.cx_count == 3);
}

TEST_CASE("kak resynthesis shrinks redundant blocks") {
  Circuit c(2);
  for (int i = 0; i < 4; ++i) {
    c.add_op(OpType::CX, {0, 1});
    c.add_op(OpType::Rz, {1}, {Angle::exact(1, 7)});
    c.add_op(OpType::CX, {1, 0});
  }
  Circuit ref = c;
  CHECK(kak_resynthesise(c));
  CHECK(c.two_qubit_gate_count() <= 3);
  CHECK(equiv_up_to_phase(ref, c));
}

TEST_CASE("rebase to every named target") {
  for (const std::string& name : target_names()) {
    Target t = *target_from_name(name);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      Circuit c = test::rich_random_circuit(3, 30, seed);
      c.add_op(OpType::CCX, {0, 1, 2});
      Circuit ref = c;
      rebase(c, t);
      CHECK_MESSAGE(Predicate::gate_set(t.gates).check(c), name);
      CHECK_MESSAGE(equiv_up_to_phase(ref, c), name << " seed " << seed);
    }
  }
  CHECK_FALSE(target_from_name("bogus").has_value());
}

TEST_CASE("remove redundancies") {
  Circuit c(2);
  c.add_op(OpType::H, {0});
  c.add_op(OpType::H, {0});
  c.add_op(OpType::CX, {0, 1});
  c.add_op(OpType::CX, {0, 1});
  c.add_op(OpType::Rz, {1}, {Angle::exact(1, 4)});
  c.add_op(OpType::Rz, {1}, {Angle::exact(-1, 4)});
  c.add_op(OpType::Rx, {0}, {Angle::exact(1, 3)});
  c.add_op(OpType::Rx, {0}, {Angle::exact(1, 3)});
  Circuit ref = c;
  CHECK(remove_redundancies(c));
  CHECK(c.gate_count() == 1);
  CHECK(equiv_up_to_phase(ref, c));
}

TEST_CASE("diagonal gates before measurement are dropped") {
  Circuit c(1, 1);
  c.add_op(OpType::H, {0});
  c.add_op(OpType::T, {0});
  c.add_op(Op(OpType::Measure), std::vector<unsigned>{0}, std::vector<unsigned>{0});
  CHECK(remove_redundancies(c));
  CHECK(c.gate_count() == 2);
}

TEST_CASE("commute through multis moves rotations earlier") {
  Circuit c(2);
  c.add_op(OpType::CX, {0, 1});
  c.add_op(OpType::Rz, {0}, {Angle::exact(1, 5)});
  c.add_op(OpType::Rx, {1}, {Angle::exact(1, 5)});
  Circuit ref = c;
  CHECK(commute_through_multis(c));
  CHECK(c.commands().back().op.type() == OpType::CX);
  CHECK(equiv_up_to_phase(ref, c));
  CHECK_FALSE(commute_through_multis(c));
}

TEST_CASE("squash merges single-qubit runs") {
  Circuit c(1);
  c.add_op(OpType::H, {0});
  c.add_op(OpType::T, {0});
  c.add_op(OpType::H, {0});
  c.add_op(OpType::S, {0});
  c.add_op(OpType::Rx, {0}, {Angle::exact(1, 3)});
  Circuit ref = c;
  CHECK(squash_1q(c, EulerBasis::ZXZ));
  CHECK(c.gate_count() <= 3);
  CHECK(equiv_up_to_phase(ref, c));
  // Already in basis and minimal: nothing to do.
  CHECK_FALSE(squash_1q(c, EulerBasis::ZXZ));
}

TEST_CASE("two-qubit costs") {
  CHECK(two_qubit_cost(Op(OpType::CX)) == 1);
  CHECK(two_qubit_cost(Op(OpType::CZ)) == 1);
  CHECK(two_qubit_cost(Op(OpType::SWAP)) == 3);
  CHECK(two_qubit_cost(Op(OpType::CRz, {Angle::exact(1, 3)})) == 2);
}

TEST_CASE("clifford catalog is sound") {
  const CliffordCatalog& cat = CliffordCatalog::builtin();
  REQUIRE_FALSE(cat.rules().empty());
  for (const auto& r : cat.rules()) {
    CHECK(r.replacement.two_qubit_gate_count() == r.cx_count);
    CHECK(r.cx_count <= 3);
    Circuit id = Circuit::compose(r.replacement, r.inverse);
    CHECK(phase_distance(unitary_of(id), MatrixX::Identity(4, 4)) < 1e-10);
  }
}

TEST_CASE("clifford catalog synthesis counts") {
  Circuit cx2(2);
  cx2.add_op(OpType::CX, {0, 1});
  cx2.add_op(OpType::H, {0});
  cx2.add_op(OpType::CX, {0, 1});
  cx2.add_op(OpType::H, {0});
  cx2.add_op(OpType::H, {0});
  Tableau t = Tableau::from_circuit(cx2);
  Circuit out = CliffordCatalog::builtin().synthesise(t);
  CHECK(out.two_qubit_gate_count() <= 2);
  CHECK(equiv_up_to_phase(cx2, out));
  Circuit sw(2);
  sw.add_op(OpType::SWAP, {0, 1});
  CHECK(CliffordCatalog::builtin().cx_count(Tableau::from_circuit(sw)) == 3);
}

TEST_CASE("clifford simp removes CX-phase-CX patterns") {
  // Z on the target conjugated by CX is Z on both wires.
  Circuit c(2);
  c.add_op(OpType::CX, {0, 1});
  c.add_op(OpType::Z, {1});
  c.add_op(OpType::CX, {0, 1});
  Circuit ref = c;
  clifford_simp(c, false);
  CHECK(c.two_qubit_gate_count() == 0);
  CHECK(equiv_up_to_phase(ref, c));
}

TEST_CASE("clifford simp never increases CX count") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    for (bool swaps : {false, true}) {
      Circuit c = test::rich_random_circuit(4, 50, seed);
      rebase(c, internal_target());
      Circuit ref = c;
      std::size_t before = c.two_qubit_gate_count();
      clifford_simp(c, swaps);
      CHECK(c.two_qubit_gate_count() <= before);
      CHECK(equiv_up_to_phase(ref, c));
      if (!swaps) CHECK_FALSE(c.has_implicit_permutation());
    }
  }
}

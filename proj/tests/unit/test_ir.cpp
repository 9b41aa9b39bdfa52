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

#include "ir/Angle.hpp"
#include "ir/Boxes.hpp"
#include "ir/Circuit.hpp"
#include "ir/Errors.hpp"
#include "sim/Unitary.hpp"
#include "support/Helpers.hpp"

using namespace qcc;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

}  // namespace

TEST_CASE("angles reduce modulo four half-turns") {
  CHECK(Angle::exact(9, 2) == Angle::exact(1, 2));
  CHECK(Angle::exact(-1, 2) == Angle::exact(7, 2));
  CHECK((Angle::exact(3, 4) + Angle::exact(5, 4)).exact() == Rational(2));
  CHECK((-Angle::exact(1, 4)).exact() == Rational(15, 4));
  CHECK((Angle::exact(1, 3) * Rational(3)).exact() == Rational(1));
  CHECK(Angle::exact(1, 2).is_clifford());
  CHECK_FALSE(Angle::exact(1, 4).is_clifford());
  CHECK(Angle::exact(2).is_multiple_of(Rational(2)));
}

TEST_CASE("real angles snap when close to a small rational") {
  Angle a = Angle::real(0.25 + 1e-14).snapped();
  CHECK(a.is_exact());
  CHECK(a.exact() == Rational(1, 4));
  Angle b = Angle::real(0.1234567);
  CHECK(b.is_float());
  CHECK(b.value() == doctest::Approx(0.1234567));
}

TEST_CASE("symbolic angles substitute and print") {
  Angle a = Angle::symbol("t", Rational(1, 2)) + Angle::exact(1, 4);
  CHECK(a.is_symbolic());
  CHECK(a.symbols() == std::set<std::string>{"t"});
  Angle b = a.substitute({{"t", Angle::exact(1)}});
  CHECK(b.is_exact());
  CHECK(b.exact() == Rational(3, 4));
  Angle p = Angle::parse(a.to_string());
  CHECK(p == a);
}

TEST_CASE("angle parser accepts signed fractions") {
  CHECK(Angle::parse("1/2").exact() == Rational(1, 2));
  CHECK(Angle::parse("-3/4").exact() == Rational(13, 4));
}

TEST_CASE("circuit construction tracks counts and depth") {
  Circuit c(3);
  c.add_op(OpType::H, {0});
  c.add_op(OpType::CX, {0, 1});
  c.add_op(OpType::CX, {1, 2});
  c.add_op(OpType::T, {2});
  c.add_op(OpType::SWAP, {0, 2});
  c.validate();
  CHECK(c.gate_count() == 5);
  CHECK(c.two_qubit_gate_count() == 5);
  CHECK(c.two_qubit_gate_count(true) == 3);
  CHECK(c.depth() == 5);
  CHECK(c.two_qubit_depth() == 3);
  CHECK(c.commands().size() == 5);
  CHECK(c.commands()[1].qubits == std::vector<UnitID>{{"q", 0}, {"q", 1}});
}

TEST_CASE("arity and unknown unit errors") {
  Circuit c(2);
  CHECK(code_of([&] { c.add_op(OpType::CX, {0}); }) == ErrorCode::ArityMismatch);
  CHECK(code_of([&] { c.add_op(OpType::CX, {0, 0}); }) == ErrorCode::ArityMismatch);
  CHECK(code_of([&] { c.add_op(OpType::H, {5}); }) == ErrorCode::UnknownUnit);
  CHECK(code_of([&] { c.add_op(Op(OpType::H), std::vector<UnitID>{{"r", 0}}); }) ==
        ErrorCode::UnknownUnit);
}

TEST_CASE("dagger inverts the unitary") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Circuit c = test::rich_random_circuit(3, 25, seed);
    Circuit id = Circuit::compose(c, c.dagger());
    CHECK(phase_distance(circuit_unitary(id), MatrixX::Identity(8, 8)) < 1e-9);
  }
}

TEST_CASE("compose multiplies unitaries in order") {
  Circuit a = test::rich_random_circuit(2, 10, 1);
  Circuit b = test::rich_random_circuit(2, 10, 2);
  Circuit ab = Circuit::compose(a, b);
  MatrixX expect = circuit_unitary(b) * circuit_unitary(a);
  CHECK(phase_distance(circuit_unitary(ab), expect) < 1e-10);
}

TEST_CASE("implicit permutation from rerouted outputs") {
  Circuit c(2);
  c.add_op(OpType::H, {0});
  CHECK_FALSE(c.has_implicit_permutation());
  c.permute_outputs({{{"q", 0}, {"q", 1}}, {{"q", 1}, {"q", 0}}});
  CHECK(c.has_implicit_permutation());
  auto p = c.implicit_permutation();
  CHECK(p.at({"q", 0}) == UnitID("q", 1));
  // Equal to H on qubit 0 followed by an explicit swap.
  Circuit d(2);
  d.add_op(OpType::H, {0});
  d.add_op(OpType::SWAP, {0, 1});
  CHECK(phase_distance(circuit_unitary(c), circuit_unitary(d)) < 1e-12);
}

TEST_CASE("remove_vertex and substitute keep the DAG valid") {
  Circuit c(2);
  c.add_op(OpType::H, {0});
  VertexId x = c.add_op(OpType::X, {1});
  c.add_op(OpType::CX, {0, 1});
  c.remove_vertex(x);
  c.validate();
  CHECK(c.gate_count() == 2);
  c.compact();
  c.validate();
  CHECK(c.gate_count() == 2);
}

TEST_CASE("boxes decompose to equivalent gates") {
  Circuit body(2);
  body.add_op(OpType::H, {0});
  body.add_op(OpType::CX, {0, 1});
  Circuit c(3);
  c.add_op(Op::circ_box(std::make_shared<const Circuit>(body)), std::vector<unsigned>{1, 2});
  c.add_op(Op::pauli_exp_box(parse_pauli_string("XYZ"), Angle::exact(1, 3)),
           std::vector<unsigned>{0, 1, 2});
  CHECK(c.has_boxes());
  Circuit d = decompose_boxes(c);
  CHECK_FALSE(d.has_boxes());
  // exp(-i pi/6 X0 Y1 Z2) = cos(pi/6) I - i sin(pi/6) P, P with qubit 0 least significant.
  MatrixX x(2, 2), y(2, 2), z(2, 2);
  x << 0, 1, 1, 0;
  y << 0, std::complex<double>(0, -1), std::complex<double>(0, 1), 0;
  z << 1, 0, 0, -1;
  MatrixX p = kron(z, kron(y, x));
  MatrixX e = std::cos(M_PI / 6) * MatrixX::Identity(8, 8) -
              std::complex<double>(0, std::sin(M_PI / 6)) * p;
  Circuit plain(3);
  plain.add_op(OpType::H, {1});
  plain.add_op(OpType::CX, {1, 2});
  MatrixX expect = e * circuit_unitary(plain);
  CHECK(phase_distance(circuit_unitary(d), expect) < 1e-10);
}

TEST_CASE("pauli gadget ladder implements the exponential") {
  // exp(-i pi/2 t ZZ) is diagonal with phases e^{-i pi t/2 (+-1)}.
  Circuit g = pauli_gadget_ladder(parse_pauli_string("ZZ"), Angle::exact(1, 2));
  MatrixX u = circuit_unitary(g);
  std::complex<double> a = std::polar(1.0, -M_PI / 4), b = std::polar(1.0, M_PI / 4);
  MatrixX expect = MatrixX::Zero(4, 4);
  expect(0, 0) = a;
  expect(1, 1) = b;
  expect(2, 2) = b;
  expect(3, 3) = a;
  CHECK(phase_distance(u, expect) < 1e-12);
}

TEST_CASE("symbol substitution on circuits") {
  Circuit c(1);
  c.add_op(OpType::Rz, {0}, {Angle::symbol("a")});
  CHECK(c.is_symbolic());
  Circuit d = c.substitute({{"a", Angle::exact(1, 2)}});
  CHECK_FALSE(d.is_symbolic());
  Circuit s(1);
  s.add_op(OpType::S, {0});
  CHECK(phase_distance(circuit_unitary(d), circuit_unitary(s)) < 1e-12);
}

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

#include "io/CircuitJson.hpp"
#include "io/Qasm.hpp"
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

const char* kBell = R"(OPENQASM 2.0;
include "qelib1.inc";
qreg q[2];
creg c[2];
h q[0];
cx q[0],q[1];
rz(pi/4) q[1];
u3(0.3,pi/2,-pi) q[0];
barrier q;
measure q -> c;
)";

}  // namespace

TEST_CASE("qasm parses registers, gates and measures") {
  Circuit c = parse_qasm(kBell);
  CHECK(c.n_qubits() == 2);
  CHECK(c.n_bits() == 2);
  auto cmds = c.commands();
  REQUIRE(cmds.size() == 7);
  CHECK(cmds[0].op.type() == OpType::H);
  auto find = [&](OpType t) {
    for (const Command& cmd : cmds)
      if (cmd.op.type() == t) return cmd.op;
    FAIL("missing op");
    return Op();
  };
  Op rz = find(OpType::Rz);
  CHECK(rz.param(0).is_exact());
  CHECK(rz.param(0).exact() == Rational(1, 4));
  Op u3 = find(OpType::U3);
  CHECK(u3.param(0).is_float());
  CHECK(u3.param(2).exact() == Rational(3));
  CHECK(cmds[4].op.type() == OpType::Barrier);
  CHECK(cmds[5].op.type() == OpType::Measure);
  CHECK(cmds[6].op.type() == OpType::Measure);
}

TEST_CASE("qasm decimals near multiples of pi snap") {
  Circuit c = parse_qasm(
      "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[1];\nrz(1.5707963267948966) q[0];\n");
  CHECK(c.commands()[0].op.param(0).exact() == Rational(1, 2));
}

TEST_CASE("qasm round trip preserves commands") {
  Circuit c = parse_qasm(kBell);
  Circuit d = parse_qasm(emit_qasm(c));
  CHECK(c.commands_equal(d));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Circuit r = test::rich_random_circuit(4, 30, seed);
    Circuit s = parse_qasm(emit_qasm(r));
    CHECK(equiv_up_to_phase(r, s, std::nullopt, 1e-10));
  }
}

TEST_CASE("qasm parse errors report line and column") {
  try {
    parse_qasm("OPENQASM 2.0;\nqreg q[2];\ncx q[0] q[1];\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 9);
  }
  CHECK(code_of([] { parse_qasm("OPENQASM 2.0;\nqreg q[1];\nh q[0]"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_qasm("OPENQASM 2.0;\nqreg q[1];\n$ q[0];"); }) == ErrorCode::ParseError);
}

TEST_CASE("qasm rejects unsupported constructs") {
  try {
    parse_qasm("OPENQASM 2.0;\nqreg q[1];\ncreg c[1];\nif(c==0) x q[0];\n");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnsupportedConstruct);
    CHECK(std::string(e.what()).find("'if'") != std::string::npos);
  }
  CHECK(code_of([] { parse_qasm("OPENQASM 2.0;\nqreg q[1];\nreset q[0];\n"); }) ==
        ErrorCode::UnsupportedConstruct);
  CHECK(code_of([] {
          parse_qasm("OPENQASM 2.0;\nqreg q[1];\ngate foo a { h a; }\n");
        }) == ErrorCode::UnsupportedConstruct);
  CHECK(code_of([] { parse_qasm("OPENQASM 2.0;\nqreg q[1];\ncu1(0.1) q[0],q[0];\n"); }) ==
        ErrorCode::UnsupportedConstruct);
}

TEST_CASE("qasm unit and arity errors point at the statement") {
  try {
    parse_qasm("OPENQASM 2.0;\nqreg q[2];\nh q[2];\n");
    FAIL("expected an error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK(code_of([] { parse_qasm("OPENQASM 2.0;\nqreg q[2];\ncx q[0];\n"); }) ==
        ErrorCode::ParseError);
  CHECK(code_of([] { parse_qasm("OPENQASM 2.0;\nqreg q[2];\nh r[0];\n"); }) ==
        ErrorCode::ParseError);
}

TEST_CASE("json round trip including boxes and symbols") {
  Circuit c(3, 1);
  c.add_op(OpType::H, {0});
  c.add_op(OpType::Rz, {1}, {Angle::symbol("a", Rational(1, 2))});
  c.add_op(Op::pauli_exp_box(parse_pauli_string("XZ"), Angle::exact(1, 5)),
           std::vector<unsigned>{0, 2});
  Circuit body(1);
  body.add_op(OpType::T, {0});
  c.add_op(Op::circ_box(std::make_shared<const Circuit>(body)), std::vector<unsigned>{2});
  c.add_op(Op(OpType::Measure), std::vector<unsigned>{0}, std::vector<unsigned>{0});
  c.add_phase(Angle::exact(1, 4));
  Circuit d = parse_circuit_json(emit_circuit_json(c));
  CHECK(c.commands_equal(d));
  CHECK(d.global_phase() == c.global_phase());
  CHECK(d.is_symbolic());
}

TEST_CASE("json keeps the implicit permutation") {
  Circuit c(2);
  c.add_op(OpType::X, {0});
  c.permute_outputs({{{"q", 0}, {"q", 1}}, {{"q", 1}, {"q", 0}}});
  Circuit d = parse_circuit_json(emit_circuit_json(c));
  CHECK(d.implicit_permutation() == c.implicit_permutation());
}

TEST_CASE("malformed json is rejected") {
  CHECK(code_of([] { parse_circuit_json("{not json"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_circuit_json(R"({"qubits": 1})"); }) == ErrorCode::InvalidArgument);
}

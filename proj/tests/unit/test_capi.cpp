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

#include <cstring>
#include <string>

#include "qcc/qcc.h"

namespace {

const char* kGhz = R"(OPENQASM 2.0;
include "qelib1.inc";
qreg q[4];
h q[0];
cx q[0],q[1];
cx q[1],q[2];
cx q[2],q[3];
t q[3];
cx q[0],q[3];
)";

std::string take(char* s) {
  std::string out = s ? s : "";
  qcc_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::strlen(qcc_version()) > 0);
  CHECK(std::string(qcc_status_name(QCC_PARSE_ERROR)) == "ParseError");
  CHECK(std::string(qcc_status_name(QCC_OK)) == "Ok");
}

TEST_CASE("parse, stats and emit") {
  qcc_circuit* c = nullptr;
  REQUIRE(qcc_circuit_from_qasm(kGhz, &c) == QCC_OK);
  qcc_stats st;
  REQUIRE(qcc_circuit_stats(c, &st) == QCC_OK);
  CHECK(st.qubits == 4);
  CHECK(st.gates == 6);
  CHECK(st.two_qubit_gates == 4);
  char* text = nullptr;
  REQUIRE(qcc_circuit_to_qasm(c, &text) == QCC_OK);
  CHECK(take(text).find("cx q[0],q[1];") != std::string::npos);
  char* json = nullptr;
  REQUIRE(qcc_circuit_to_json(c, &json) == QCC_OK);
  CHECK(take(json).find("\"gates\"") != std::string::npos);
  qcc_circuit_free(c);
}

TEST_CASE("errors are reported through status and message") {
  qcc_circuit* c = nullptr;
  CHECK(qcc_circuit_from_qasm("OPENQASM 2.0;\nqreg q[1];\nh q[0]", &c) == QCC_PARSE_ERROR);
  CHECK(c == nullptr);
  CHECK(std::string(qcc_last_error()).find("line") != std::string::npos);
  CHECK(qcc_circuit_from_qasm(nullptr, &c) == QCC_INVALID_ARGUMENT);
  CHECK(qcc_circuit_load("/nonexistent/file.qasm", &c) == QCC_IO);
  CHECK(qcc_random_circuit(1, 5, 0, &c) == QCC_INVALID_SIZE);
}

TEST_CASE("apply passes in place") {
  qcc_circuit* c = nullptr;
  REQUIRE(qcc_circuit_from_qasm(kGhz, &c) == QCC_OK);
  int changed = 0;
  CHECK(qcc_apply_passes(c, "rebase(cx,rz,rx),remove_redundancies", nullptr, 1, &changed) == QCC_OK);
  CHECK(changed == 1);
  CHECK(qcc_apply_passes(c, "rebase(cz-rxrz),optimise_phase_gadgets", nullptr, 1, &changed) ==
        QCC_INCOMPATIBLE_COMPOSITION);
  qcc_circuit_free(c);
}

TEST_CASE("compile and verify") {
  qcc_circuit* in = nullptr;
  REQUIRE(qcc_random_circuit(5, 60, 11, &in) == QCC_OK);
  qcc_compile_options o{};
  o.arch = "grid:3x3";
  o.strict = 1;
  o.reproducible = 1;
  qcc_circuit* out = nullptr;
  char* report = nullptr;
  REQUIRE(qcc_compile(in, &o, &out, &report) == QCC_OK);
  std::string rep = take(report);
  CHECK(rep.find("\"permutation\"") != std::string::npos);
  CHECK(rep.find("\"seconds\"") == std::string::npos);
  int eq = 0;
  double err = 1;
  REQUIRE(qcc_verify(in, out, rep.c_str(), 1e-8, &eq, &err) == QCC_OK);
  CHECK(eq == 1);
  CHECK(err < 1e-8);
  // Without the layout the routed circuit is not the same map.
  qcc_circuit* other = nullptr;
  REQUIRE(qcc_random_circuit(5, 60, 12, &other) == QCC_OK);
  REQUIRE(qcc_verify(in, other, nullptr, 1e-8, &eq, &err) == QCC_OK);
  CHECK(eq == 0);
  qcc_circuit_free(other);
  qcc_circuit_free(out);
  qcc_circuit_free(in);
}

TEST_CASE("compile error codes") {
  qcc_circuit* in = nullptr;
  REQUIRE(qcc_random_circuit(20, 40, 1, &in) == QCC_OK);
  qcc_compile_options o{};
  o.arch = "aspen";
  qcc_circuit* out = nullptr;
  CHECK(qcc_compile(in, &o, &out, nullptr) == QCC_TOO_MANY_QUBITS);
  o.arch = nullptr;
  o.pipeline = "bogus";
  CHECK(qcc_compile(in, &o, &out, nullptr) == QCC_INVALID_ARGUMENT);
  qcc_circuit_free(in);
}

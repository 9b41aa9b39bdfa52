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

#include "harness/Bench.hpp"
#include "harness/Pipelines.hpp"
#include "io/Qasm.hpp"
#include "passes/Predicate.hpp"
#include "sim/Unitary.hpp"

using namespace qcc;

TEST_CASE("corpus compiles on every device with every pipeline") {
  auto files = corpus_files(QCC_CORPUS_DIR);
  REQUIRE(files.size() >= 20);
  for (const std::string& arch : {"full", "rochester", "sycamore", "aspen"}) {
    for (const std::string& pipeline : {"full", "chem", "synthesise"}) {
      PipelineSpec s;
      s.name = pipeline;
      s.arch_name = arch;
      s.arch = load_architecture(arch);
      for (const std::string& f : files) {
        Circuit c = load_qasm_file(f);
        if (s.arch && c.n_qubits() > s.arch->n_nodes()) continue;
        CompileResult r = compile(c, s);
        INFO(f << " " << pipeline << " " << arch);
        CHECK(Predicate::gate_set(s.target.gates).check(r.circuit));
        if (s.arch) CHECK(Predicate::connectivity(s.arch).check(r.circuit));
        if (r.circuit.n_qubits() <= 8) CHECK(equiv_up_to_phase(r.reference, r.circuit, r.permutation));
        if (!s.arch && pipeline == "full") CHECK(r.output.two_qubit_gates <= r.input.two_qubit_gates);
      }
    }
  }
}

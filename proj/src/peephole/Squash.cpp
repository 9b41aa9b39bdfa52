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

#include "peephole/Transforms.hpp"
#include "peephole/Util.hpp"
#include "sim/GateMatrix.hpp"

namespace qcc {

namespace {

bool squashable(const Gate& g) {
  return g.qubits.size() == 1 && g.bits.empty() && is_gate(g.op.type()) && !g.op.is_symbolic();
}

}  // namespace

bool squash_1q(Circuit& c, EulerBasis basis, const std::optional<GateSet>& allowed) {
  GateSet ok = allowed ? *allowed : euler_basis_gates(basis);
  std::vector<Gate> gates = gate_list(c);
  std::vector<std::vector<std::size_t>> runs(c.n_qubits());
  std::vector<std::vector<Op>> replace(gates.size());
  std::vector<bool> replaced(gates.size(), false);
  Angle phase;
  bool changed = false;

  auto flush = [&](unsigned q) {
    std::vector<std::size_t>& run = runs[q];
    if (run.empty()) return;
    Matrix2 u = Matrix2::Identity();
    bool foreign = false;
    for (std::size_t i : run) {
      u = Matrix2(gate_matrix(gates[i].op)) * u;
      if (!ok.contains(gates[i].op.type())) foreign = true;
    }
    Circuit e = euler_circuit(u, basis);
    std::size_t n = e.gate_count();
    if (n < run.size() || (n == run.size() && foreign)) {
      for (std::size_t i : run) gates[i].alive = false;
      replaced[run.front()] = true;
      for (const Command& cmd : e.commands()) replace[run.front()].push_back(cmd.op);
      phase += e.global_phase();
      changed = true;
    }
    run.clear();
  };

  for (std::size_t i = 0; i < gates.size(); ++i) {
    if (squashable(gates[i])) {
      runs[gates[i].qubits[0]].push_back(i);
    } else {
      for (unsigned q : gates[i].qubits) flush(q);
    }
  }
  for (unsigned q = 0; q < c.n_qubits(); ++q) flush(q);
  if (!changed) return false;

  std::vector<Gate> out;
  for (std::size_t i = 0; i < gates.size(); ++i) {
    if (replaced[i]) {
      for (const Op& op : replace[i]) out.push_back(Gate{op, gates[i].qubits, {}, true});
    }
    if (gates[i].alive) out.push_back(gates[i]);
  }
  c = rebuild(c, out, phase);
  return true;
}

}  // namespace qcc

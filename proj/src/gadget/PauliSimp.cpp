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

#include "gadget/PauliSimp.hpp"

#include "gadget/PhaseGadget.hpp"
#include "ir/Errors.hpp"
#include "peephole/Rebase.hpp"
#include "peephole/Transforms.hpp"
#include "peephole/Util.hpp"

namespace qcc {

PauliForm pauli_form(const Circuit& in) {
  Circuit c = in;
  rebase(c, internal_target());
  unsigned n = c.n_qubits();
  // Inverse of the Clifford accumulated so far.
  Tableau inv(n);
  PauliForm out{{}, Tableau(n), c.global_phase()};
  for (const Gate& g : gate_list(c)) {
    OpType t = g.op.type();
    if (t == OpType::Measure || t == OpType::Barrier)
      fail(ErrorCode::NonUnitaryOps, "pauli_simp needs a unitary circuit");
    bool rotation = (t == OpType::Rz || t == OpType::Rx) && clifford_quarter(g.op.param(0)) < 0;
    if (!rotation) {
      inv.prepend(g.op.dagger(), g.qubits);
      continue;
    }
    Pauli axis = t == OpType::Rz ? Pauli::Z : Pauli::X;
    PauliString p = inv.conjugate(PauliString::single(n, g.qubits[0], axis));
    out.rotations.push_back({p, g.op.param(0)});
  }
  // inv is the tableau of C^dag; the tail is its inverse.
  Circuit tail = inv.synthesise().dagger();
  out.clifford = Tableau::from_circuit(tail);
  return out;
}

bool pauli_simp(Circuit& c) {
  PauliForm form = pauli_form(c);
  std::vector<Gate> gates;
  const auto& rots = form.rotations;
  for (std::size_t i = 0; i < rots.size();) {
    if (i + 1 < rots.size() && common_letters(rots[i].pauli, rots[i + 1].pauli).size() >= 2) {
      append_pauli_gadget_pair(gates, rots[i].pauli, rots[i].angle, rots[i + 1].pauli,
                               rots[i + 1].angle);
      i += 2;
    } else {
      append_pauli_gadget(gates, rots[i].pauli, rots[i].angle);
      i += 1;
    }
  }
  for (const Gate& g : gate_list(form.clifford.synthesise())) gates.push_back(g);
  Circuit out = rebuild(c, gates);
  out.set_phase(form.phase);
  remove_redundancies(out);
  c = std::move(out);
  return true;
}

}  // namespace qcc

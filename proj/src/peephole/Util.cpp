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

#include "peephole/Util.hpp"

#include <cmath>
#include <numbers>

#include "ir/Errors.hpp"
#include "sim/Unitary.hpp"

namespace qcc {

std::vector<Gate> gate_list(const Circuit& c) {
  std::vector<Gate> out;
  for (const Command& cmd : c.commands()) {
    Gate g;
    g.op = cmd.op;
    for (const UnitID& q : cmd.qubits) g.qubits.push_back(*c.qubit_index(q));
    for (const UnitID& b : cmd.bits) g.bits.push_back(*c.bit_index(b));
    out.push_back(std::move(g));
  }
  return out;
}

Circuit rebuild(const Circuit& c, const std::vector<Gate>& gates, const Angle& extra_phase) {
  Circuit out;
  for (const UnitID& q : c.qubits()) out.add_qubit(q);
  for (const UnitID& b : c.bits()) out.add_bit(b);
  for (const Gate& g : gates) {
    if (g.alive) out.add_op(g.op, g.qubits, g.bits);
  }
  if (c.has_implicit_permutation()) out.permute_outputs(c.implicit_permutation());
  out.set_phase(c.global_phase() + extra_phase);
  return out;
}

Angle angle_from_half_turns(double x) { return Angle::real(x).snapped(); }

Angle identity_phase(const Op& op) {
  MatrixX m = gate_matrix(op);
  return angle_from_half_turns(std::arg(m(0, 0)) / std::numbers::pi);
}

void match_phase(Circuit& c, const MatrixX& target) {
  c.set_phase(Angle());
  MatrixX u = wire_unitary(c);
  Complex t = (u.adjoint() * target).trace();
  if (std::abs(t) < 1e-9) fail(ErrorCode::Internal, "match_phase: matrices differ beyond a phase");
  c.set_phase(angle_from_half_turns(std::arg(t) / std::numbers::pi));
}

unsigned port_of(const std::vector<unsigned>& qubits, unsigned unit) {
  for (unsigned i = 0; i < qubits.size(); ++i)
    if (qubits[i] == unit) return i;
  fail(ErrorCode::Internal, "unit not on gate");
}

}  // namespace qcc

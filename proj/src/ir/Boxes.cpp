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

#include "ir/Boxes.hpp"

namespace qcc {

Circuit pauli_gadget_ladder(const std::vector<Pauli>& s, const Angle& angle) {
  Circuit c(static_cast<unsigned>(s.size()));
  std::vector<unsigned> support;
  for (unsigned i = 0; i < s.size(); ++i)
    if (s[i] != Pauli::I) support.push_back(i);
  if (support.empty()) {
    c.add_phase(-angle * Rational(1, 2));
    return c;
  }
  for (unsigned q : support) {
    if (s[q] == Pauli::X) c.add_op(OpType::H, {q});
    if (s[q] == Pauli::Y) c.add_op(OpType::Rx, {q}, {Angle(Rational(1, 2))});
  }
  for (std::size_t i = 0; i + 1 < support.size(); ++i) c.add_op(OpType::CX, {support[i], support[i + 1]});
  c.add_op(OpType::Rz, {support.back()}, {angle});
  for (std::size_t i = support.size() - 1; i > 0; --i) c.add_op(OpType::CX, {support[i - 1], support[i]});
  for (unsigned q : support) {
    if (s[q] == Pauli::X) c.add_op(OpType::H, {q});
    if (s[q] == Pauli::Y) c.add_op(OpType::Rx, {q}, {Angle(Rational(-1, 2))});
  }
  return c;
}

bool decompose_boxes_inplace(Circuit& c) {
  bool changed = false;
  for (VertexId v : c.gate_vertices()) {
    const Op op = c.op(v);
    if (!op.is_box()) continue;
    Circuit repl = op.type() == OpType::PauliExpBox ? pauli_gadget_ladder(op.paulis(), op.param(0))
                                                    : decompose_boxes(*op.box_circuit());
    Subcircuit hole;
    for (unsigned p = 0; p < op.n_ports(); ++p) {
      hole.ins.push_back({v, p});
      hole.outs.push_back({v, p});
    }
    hole.vertices = {v};
    c.substitute(repl, hole);
    changed = true;
  }
  if (changed) c.compact();
  return changed;
}

Circuit decompose_boxes(const Circuit& c) {
  Circuit out = c;
  decompose_boxes_inplace(out);
  return out;
}

}  // namespace qcc

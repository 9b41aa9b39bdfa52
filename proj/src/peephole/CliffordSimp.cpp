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

#include "peephole/CliffordSimp.hpp"

#include "gadget/Tableau.hpp"
#include "peephole/Blocks.hpp"
#include "peephole/CliffordCatalog.hpp"
#include "peephole/Rebase.hpp"
#include "peephole/Transforms.hpp"
#include "sim/Unitary.hpp"

namespace qcc {

namespace {

bool clifford_gate(const Gate& g) {
  if (g.op.is_symbolic()) return false;
  if (g.op.is_clifford()) return true;
  switch (g.op.type()) {
    case OpType::U2:
    case OpType::U3:
    case OpType::PhasedX:
      for (const Angle& a : g.op.params())
        if (clifford_quarter(a) < 0) return false;
      return true;
    default:
      return false;
  }
}

Tableau block_tableau(const std::vector<Gate>& gates, const TwoQubitBlock& b) {
  Tableau t(2);
  for (std::size_t i : b.gates) {
    std::vector<unsigned> local;
    for (unsigned w : gates[i].qubits) local.push_back(w == b.p ? 0 : 1);
    t.apply(gates[i].op, local);
  }
  return t;
}

}  // namespace

bool clifford_simp(Circuit& c, bool allow_swaps) {
  const CliffordCatalog& cat = CliffordCatalog::builtin();
  std::vector<Gate> gates = gate_list(c);
  std::vector<TwoQubitBlock> blocks = find_two_qubit_blocks(gates, c.n_qubits(), clifford_gate);
  std::vector<std::optional<Circuit>> repl(blocks.size());
  bool any = false;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const TwoQubitBlock& b = blocks[k];
    unsigned cost = 0;
    for (std::size_t i : b.gates) cost += two_qubit_cost(gates[i].op);
    Tableau t = block_tableau(gates, b);
    Circuit best = cat.synthesise(t);
    unsigned best_cx = static_cast<unsigned>(best.count_type(OpType::CX));
    if (allow_swaps) {
      Tableau ts = t;
      ts.apply(Op(OpType::SWAP), {0, 1});
      Circuit crossed = cat.synthesise(ts);
      unsigned cx = static_cast<unsigned>(crossed.count_type(OpType::CX));
      if (cx < best_cx) {
        // SWAP . C = crossed, so C = crossed followed by a wire swap.
        crossed.permute_outputs({{UnitID("q", 0), UnitID("q", 1)}, {UnitID("q", 1), UnitID("q", 0)}});
        best = std::move(crossed);
        best_cx = cx;
      }
    }
    rebase(best, internal_target());
    squash_1q(best, EulerBasis::ZXZ);
    remove_redundancies(best);
    if (best_cx < cost || (best_cx == cost && best.gate_count() < b.gates.size())) {
      MatrixX target = block_unitary(gates, b);
      if (best.has_implicit_permutation()) target = permutation_matrix({1, 0}) * target;
      match_phase(best, target);
      repl[k] = std::move(best);
      any = true;
    }
  }
  if (!any) return false;
  c = replace_blocks(c, std::move(gates), blocks, repl);
  return true;
}

}  // namespace qcc

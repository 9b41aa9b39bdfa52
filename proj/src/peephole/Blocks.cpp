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

#include "peephole/Blocks.hpp"

#include "sim/Unitary.hpp"

namespace qcc {

std::vector<TwoQubitBlock> find_two_qubit_blocks(const std::vector<Gate>& gates, unsigned n_qubits,
                                                 const GateFilter& admissible) {
  std::vector<TwoQubitBlock> done;
  std::vector<TwoQubitBlock> open;
  std::vector<int> block_of(n_qubits, -1);
  std::vector<std::vector<std::size_t>> pending(n_qubits);

  auto close = [&](unsigned w) {
    int b = block_of[w];
    if (b < 0) return;
    TwoQubitBlock& blk = open[b];
    block_of[blk.p] = block_of[blk.q] = -1;
    done.push_back(std::move(blk));
    blk.gates.clear();
  };

  for (std::size_t i = 0; i < gates.size(); ++i) {
    const Gate& g = gates[i];
    if (!g.alive) continue;
    bool ok = g.bits.empty() && is_gate(g.op.type()) && g.qubits.size() <= 2 && admissible(g);
    if (!ok) {
      for (unsigned w : g.qubits) {
        close(w);
        pending[w].clear();
      }
      continue;
    }
    if (g.qubits.size() == 1) {
      unsigned w = g.qubits[0];
      if (block_of[w] >= 0)
        open[block_of[w]].gates.push_back(i);
      else
        pending[w].push_back(i);
      continue;
    }
    unsigned p = g.qubits[0], q = g.qubits[1];
    if (block_of[p] >= 0 && block_of[p] == block_of[q]) {
      open[block_of[p]].gates.push_back(i);
      open[block_of[p]].n_two_qubit++;
      continue;
    }
    close(p);
    close(q);
    TwoQubitBlock blk;
    blk.p = p;
    blk.q = q;
    for (unsigned w : {p, q}) {
      for (std::size_t j : pending[w]) blk.gates.push_back(j);
      pending[w].clear();
    }
    blk.gates.push_back(i);
    blk.n_two_qubit = 1;
    block_of[p] = block_of[q] = static_cast<int>(open.size());
    open.push_back(std::move(blk));
  }
  for (unsigned w = 0; w < n_qubits; ++w) close(w);
  for (TwoQubitBlock& b : done) std::sort(b.gates.begin(), b.gates.end());
  return done;
}

Matrix4 block_unitary(const std::vector<Gate>& gates, const TwoQubitBlock& b) {
  MatrixX u = MatrixX::Identity(4, 4);
  for (std::size_t i : b.gates) {
    std::vector<unsigned> local;
    for (unsigned w : gates[i].qubits) local.push_back(w == b.p ? 0 : 1);
    apply_gate(u, gate_matrix(gates[i].op), local);
  }
  return u;
}

Circuit replace_blocks(const Circuit& c, std::vector<Gate> gates,
                       const std::vector<TwoQubitBlock>& blocks,
                       const std::vector<std::optional<Circuit>>& replacements) {
  std::vector<int> ends_block(gates.size(), -1);
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    if (!replacements[k]) continue;
    for (std::size_t i : blocks[k].gates) gates[i].alive = false;
    ends_block[blocks[k].gates.back()] = static_cast<int>(k);
  }
  // phys[x]: wire currently carrying the state that entered on wire x.
  std::vector<unsigned> phys(c.n_qubits());
  for (unsigned x = 0; x < c.n_qubits(); ++x) phys[x] = x;

  Circuit out;
  for (const UnitID& q : c.qubits()) out.add_qubit(q);
  for (const UnitID& b : c.bits()) out.add_bit(b);
  Angle phase = c.global_phase();
  for (std::size_t i = 0; i < gates.size(); ++i) {
    if (gates[i].alive) {
      std::vector<unsigned> qs;
      for (unsigned w : gates[i].qubits) qs.push_back(phys[w]);
      out.add_op(gates[i].op, qs, gates[i].bits);
    }
    if (ends_block[i] < 0) continue;
    const TwoQubitBlock& b = blocks[ends_block[i]];
    const Circuit& r = *replacements[ends_block[i]];
    for (const Command& cmd : r.commands()) {
      std::vector<unsigned> qs;
      for (const UnitID& u : cmd.qubits) qs.push_back(u.index == 0 ? phys[b.p] : phys[b.q]);
      out.add_op(cmd.op, qs);
    }
    phase += r.global_phase();
    if (r.has_implicit_permutation()) std::swap(phys[b.p], phys[b.q]);
  }
  std::map<UnitID, UnitID> orig = c.implicit_permutation();
  std::map<UnitID, UnitID> perm;
  for (unsigned x = 0; x < c.n_qubits(); ++x) {
    const UnitID& src = c.qubits()[phys[x]];
    auto it = orig.find(c.qubits()[x]);
    UnitID dst = it == orig.end() ? c.qubits()[x] : it->second;
    if (src != dst) perm[src] = dst;
  }
  if (!perm.empty()) out.permute_outputs(perm);
  out.set_phase(phase);
  return out;
}

}  // namespace qcc

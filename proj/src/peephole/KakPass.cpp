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

#include "ir/Errors.hpp"
#include "peephole/Blocks.hpp"
#include "peephole/Kak.hpp"
#include "peephole/Transforms.hpp"

namespace qcc {

unsigned two_qubit_cost(const Op& op) {
  switch (op.type()) {
    case OpType::CX:
    case OpType::CZ:
      return 1;
    case OpType::CRz:
      return 2;
    case OpType::SWAP:
      return 3;
    case OpType::Bridge:
      return 4;
    case OpType::CCX:
      return 6;
    default:
      return 0;
  }
}

bool kak_resynthesise(Circuit& c) {
  std::vector<Gate> gates = gate_list(c);
  auto admissible = [](const Gate& g) {
    if (g.op.is_symbolic()) return false;
    if (g.qubits.size() == 1) return true;
    switch (g.op.type()) {
      case OpType::CX:
      case OpType::CZ:
      case OpType::CRz:
      case OpType::SWAP:
        return true;
      default:
        return false;
    }
  };
  std::vector<TwoQubitBlock> blocks = find_two_qubit_blocks(gates, c.n_qubits(), admissible);
  std::vector<std::optional<Circuit>> repl(blocks.size());
  bool any = false;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const TwoQubitBlock& b = blocks[k];
    unsigned cost = 0;
    for (std::size_t i : b.gates) cost += two_qubit_cost(gates[i].op);
    if (cost == 0) continue;
    Matrix4 u = block_unitary(gates, b);
    if (unitarity_error(u) > 1e-10)
      throw Error(ErrorCode::NonUnitaryBlock, "kak: block on qubits " + std::to_string(b.p) + "," +
                                                  std::to_string(b.q) + " is not unitary");
    Circuit r = kak_circuit(u);
    unsigned new_cost = static_cast<unsigned>(r.count_type(OpType::CX));
    if (new_cost < cost || (new_cost == cost && r.gate_count() < b.gates.size())) {
      repl[k] = std::move(r);
      any = true;
    }
  }
  if (!any) return false;
  c = replace_blocks(c, std::move(gates), blocks, repl);
  return true;
}

}  // namespace qcc

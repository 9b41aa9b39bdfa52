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

#include <algorithm>

#include "peephole/Transforms.hpp"
#include "peephole/Util.hpp"

namespace qcc {

namespace {

bool same_wires(const Gate& a, const Gate& b) {
  if (a.qubits.size() != b.qubits.size()) return false;
  std::vector<unsigned> x = a.qubits, y = b.qubits;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

bool is_inverse_pair(const Gate& a, const Gate& b) {
  if (!a.bits.empty() || !b.bits.empty()) return false;
  OpType t = a.op.type();
  if (t != b.op.type()) return false;
  switch (t) {
    case OpType::CZ:
    case OpType::SWAP:
      return true;
    case OpType::CCX:
      return a.qubits[2] == b.qubits[2];
    case OpType::Barrier:
    case OpType::Measure:
      return false;
    default:
      break;
  }
  if (a.qubits != b.qubits) return false;
  if (a.op.is_symbolic() || is_box(t)) return false;
  switch (t) {
    case OpType::X:
    case OpType::Y:
    case OpType::Z:
    case OpType::H:
    case OpType::CX:
    case OpType::Bridge:
      return true;
    default:
      return false;
  }
}

bool is_inverse_named(const Gate& a, const Gate& b) {
  if (a.qubits != b.qubits) return false;
  auto pair = [&](OpType x, OpType y) {
    return (a.op.type() == x && b.op.type() == y) || (a.op.type() == y && b.op.type() == x);
  };
  return pair(OpType::S, OpType::Sdg) || pair(OpType::T, OpType::Tdg);
}

std::optional<Op> merge(const Gate& a, const Gate& b) {
  OpType t = a.op.type();
  if (t != b.op.type() || a.qubits != b.qubits) return std::nullopt;
  switch (t) {
    case OpType::Rz:
    case OpType::Rx:
    case OpType::Ry:
    case OpType::U1:
    case OpType::CRz:
      return Op(t, {a.op.param(0) + b.op.param(0)});
    case OpType::PhasedX:
      if (a.op.param(1) != b.op.param(1)) return std::nullopt;
      return Op(t, {a.op.param(0) + b.op.param(0), a.op.param(1)});
    default:
      return std::nullopt;
  }
}

Angle phase_of_identity(const Op& op) {
  if (op.is_symbolic()) return Angle();
  return identity_phase(op);
}

}  // namespace

bool remove_redundancies(Circuit& c) {
  std::vector<Gate> gates = gate_list(c);
  std::vector<std::vector<std::size_t>> stacks(c.n_qubits());
  Angle phase;
  bool changed = false;

  auto pop = [&](std::size_t idx) {
    for (unsigned q : gates[idx].qubits) {
      auto& s = stacks[q];
      if (!s.empty() && s.back() == idx) s.pop_back();
    }
  };

  for (std::size_t i = 0; i < gates.size(); ++i) {
    Gate& g = gates[i];
    OpType t = g.op.type();
    if (is_gate(t) && g.op.is_identity()) {
      phase += phase_of_identity(g.op);
      g.alive = false;
      changed = true;
      continue;
    }
    if (t == OpType::Measure) {
      auto& s = stacks[g.qubits[0]];
      while (!s.empty()) {
        Gate& top = gates[s.back()];
        if (top.qubits.size() != 1 || !is_diagonal(top.op.type())) break;
        top.alive = false;
        s.pop_back();
        changed = true;
      }
      s.push_back(i);
      continue;
    }
    bool handled = false;
    if (is_gate(t) && !g.qubits.empty()) {
      std::size_t top = stacks[g.qubits[0]].empty() ? SIZE_MAX : stacks[g.qubits[0]].back();
      bool shared = top != SIZE_MAX;
      for (unsigned q : g.qubits)
        if (stacks[q].empty() || stacks[q].back() != top) shared = false;
      if (shared && same_wires(gates[top], g)) {
        Gate& prev = gates[top];
        if (is_inverse_pair(prev, g) || is_inverse_named(prev, g)) {
          prev.alive = false;
          g.alive = false;
          pop(top);
          handled = true;
        } else if (auto m = merge(prev, g)) {
          g.alive = false;
          if (m->is_identity()) {
            phase += phase_of_identity(*m);
            prev.alive = false;
            pop(top);
          } else {
            prev.op = *m;
          }
          handled = true;
        }
      }
    }
    if (handled) {
      changed = true;
      continue;
    }
    for (unsigned q : g.qubits) stacks[q].push_back(i);
  }
  if (!changed) return false;
  c = rebuild(c, gates, phase);
  return true;
}

}  // namespace qcc

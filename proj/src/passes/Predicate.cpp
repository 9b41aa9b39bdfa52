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

#include "passes/Predicate.hpp"

#include <algorithm>

#include "ir/Errors.hpp"

namespace qcc {

std::string gate_set_name(const GateSet& gates) {
  std::vector<std::string> names;
  for (OpType t : gates) names.emplace_back(op_info(t).name);
  std::sort(names.begin(), names.end());
  std::string out = "{";
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? "," : "") + names[i];
  return out + "}";
}

std::optional<std::vector<unsigned>> placed_nodes(const Circuit& c) {
  std::vector<unsigned> out;
  for (const UnitID& q : c.qubits()) {
    if (q.reg != "node") return std::nullopt;
    out.push_back(q.index);
  }
  return out;
}

Predicate Predicate::gate_set(GateSet gates) {
  Predicate p(PredicateKind::GateSet);
  p.gates_ = std::move(gates);
  return p;
}

Predicate Predicate::connectivity(ArchitecturePtr arch) {
  if (!arch) fail(ErrorCode::InvalidArgument, "connectivity predicate needs an architecture");
  Predicate p(PredicateKind::Connectivity);
  p.arch_ = std::move(arch);
  return p;
}

Predicate Predicate::no_boxes() { return Predicate(PredicateKind::NoBoxes); }
Predicate Predicate::no_symbols() { return Predicate(PredicateKind::NoSymbols); }
Predicate Predicate::no_mid_circuit_measure() { return Predicate(PredicateKind::NoMidCircuitMeasure); }

Predicate Predicate::max_two_qubit_gates(std::size_t limit) {
  Predicate p(PredicateKind::MaxTwoQubitGates);
  p.limit_ = limit;
  return p;
}

bool Predicate::check(const Circuit& c) const {
  switch (kind_) {
    case PredicateKind::GateSet:
      for (VertexId v : c.gate_vertices()) {
        OpType t = c.op(v).type();
        if (t == OpType::Measure || t == OpType::Barrier) continue;
        if (!gates_.count(t)) return false;
      }
      return true;
    case PredicateKind::Connectivity: {
      auto nodes = placed_nodes(c);
      if (!nodes) return false;
      for (unsigned n : *nodes)
        if (!arch_->has_node(n)) return false;
      for (const Command& cmd : c.commands()) {
        const Op& op = cmd.op;
        if (!op.is_gate() && !op.is_box()) continue;
        if (op.n_qubits() < 2) continue;
        if (op.type() == OpType::Bridge) {
          unsigned a = cmd.qubits[0].index, m = cmd.qubits[1].index, b = cmd.qubits[2].index;
          if (!arch_->adjacent(a, m) || !arch_->adjacent(m, b)) return false;
          continue;
        }
        if (op.n_qubits() > 2) return false;
        if (!arch_->adjacent(cmd.qubits[0].index, cmd.qubits[1].index)) return false;
      }
      return true;
    }
    case PredicateKind::NoBoxes:
      return !c.has_boxes();
    case PredicateKind::NoSymbols:
      return !c.is_symbolic();
    case PredicateKind::NoMidCircuitMeasure: {
      std::set<UnitID> measured;
      for (const Command& cmd : c.commands()) {
        OpType t = cmd.op.type();
        if (t == OpType::Barrier) continue;
        for (const UnitID& q : cmd.qubits) {
          if (measured.count(q)) return false;
        }
        if (t == OpType::Measure) measured.insert(cmd.qubits[0]);
      }
      return true;
    }
    case PredicateKind::MaxTwoQubitGates:
      return !c.has_boxes() && c.two_qubit_gate_count() <= limit_;
  }
  return false;
}

std::string Predicate::name() const {
  switch (kind_) {
    case PredicateKind::GateSet: return "GateSet" + gate_set_name(gates_);
    case PredicateKind::Connectivity: return "Connectivity(" + arch_->name() + ")";
    case PredicateKind::NoBoxes: return "NoBoxes";
    case PredicateKind::NoSymbols: return "NoSymbols";
    case PredicateKind::NoMidCircuitMeasure: return "NoMidCircuitMeasure";
    case PredicateKind::MaxTwoQubitGates: return "MaxTwoQubitGates(" + std::to_string(limit_) + ")";
  }
  return "?";
}

bool Predicate::entails(const Predicate& other) const {
  if (kind_ == PredicateKind::GateSet && other.kind_ == PredicateKind::NoBoxes) {
    return !gates_.count(OpType::CircBox) && !gates_.count(OpType::PauliExpBox);
  }
  if (kind_ != other.kind_) return false;
  switch (kind_) {
    case PredicateKind::GateSet:
      return std::includes(other.gates_.begin(), other.gates_.end(), gates_.begin(), gates_.end());
    case PredicateKind::Connectivity:
      return arch_ == other.arch_ || arch_->edges() == other.arch_->edges();
    case PredicateKind::MaxTwoQubitGates:
      return limit_ <= other.limit_;
    default:
      return true;
  }
}

bool Predicate::conflicts(const Predicate& other) const {
  if (kind_ != other.kind_) return false;
  if (kind_ == PredicateKind::GateSet || kind_ == PredicateKind::Connectivity) return !entails(other);
  return false;
}

bool Predicate::operator==(const Predicate& o) const { return entails(o) && o.entails(*this); }

}  // namespace qcc

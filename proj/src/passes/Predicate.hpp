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

#pragma once

#include <set>
#include <string>

#include "ir/Circuit.hpp"
#include "mapping/Architecture.hpp"

namespace qcc {

enum class PredicateKind {
  GateSet,
  Connectivity,
  NoBoxes,
  NoSymbols,
  NoMidCircuitMeasure,
  MaxTwoQubitGates,
};

using GateSet = std::set<OpType>;

/** A pure property of a circuit. */
class Predicate {
 public:
  /** Every operation is in `gates`; Measure and Barrier are always allowed. */
  static Predicate gate_set(GateSet gates);
  /**
   * Qubits are device nodes (node[k]) and every multi-qubit gate acts on
   * adjacent nodes; a Bridge needs both of its hops to be edges.
   */
  static Predicate connectivity(ArchitecturePtr arch);
  static Predicate no_boxes();
  static Predicate no_symbols();
  /** Nothing but Measure and Barrier follows a Measure on any wire. */
  static Predicate no_mid_circuit_measure();
  static Predicate max_two_qubit_gates(std::size_t limit);

  PredicateKind kind() const { return kind_; }
  const GateSet& gates() const { return gates_; }
  const ArchitecturePtr& architecture() const { return arch_; }

  bool check(const Circuit& c) const;
  std::string name() const;

  /** Syntactic entailment, with subset reasoning for GateSet and MaxTwoQubitGates. */
  bool entails(const Predicate& other) const;
  /** True when both can never be jointly guaranteed by a pass emitting `this`. */
  bool conflicts(const Predicate& other) const;

  bool operator==(const Predicate& o) const;

 private:
  explicit Predicate(PredicateKind kind) : kind_(kind) {}

  PredicateKind kind_;
  GateSet gates_;
  ArchitecturePtr arch_;
  std::size_t limit_ = 0;
};

std::string gate_set_name(const GateSet& gates);

/** For a circuit placed on a device: the node id of each qubit, if all are node[k]. */
std::optional<std::vector<unsigned>> placed_nodes(const Circuit& c);

}  // namespace qcc

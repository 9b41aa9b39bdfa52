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

#include <map>
#include <vector>

#include "ir/Circuit.hpp"
#include "mapping/Architecture.hpp"
#include "mapping/Placement.hpp"

namespace qcc {

struct RoutingResult {
  /** Qubits are the used device nodes, named node[k], in ascending order. */
  Circuit circuit;
  /** Input qubit of the source circuit to the node it starts on. */
  std::map<UnitID, unsigned> initial_map;
  /** Output qubit of the source circuit to the node its state ends on. */
  std::map<UnitID, unsigned> final_map;
  /**
   * For each qubit index i of `circuit`, the index its initial content ends
   * on, including the implicit permutation of the source circuit. Suitable
   * as the perm argument of equiv_up_to_phase against routing_reference.
   */
  std::vector<unsigned> permutation;
  unsigned swaps = 0;
  unsigned bridges = 0;
};

/**
 * Inserts SWAP and Bridge gates so every two-qubit gate acts on adjacent
 * nodes. Qubits missing from `initial` are placed when first needed.
 */
RoutingResult route(const Circuit& c, const Architecture& arch, const PlacementMap& initial,
                    unsigned lookahead = 4);

/** The source circuit relabelled onto the nodes of a routing result. */
Circuit routing_reference(const Circuit& source, const RoutingResult& r);

/** SWAP to three CX, Bridge to four CX. */
bool decompose_routing_ops(Circuit& c);

}  // namespace qcc

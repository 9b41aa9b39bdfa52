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

namespace qcc {

/** Two-qubit interactions between logical qubits (wire indices). */
struct InteractionGraph {
  unsigned n_qubits = 0;
  /** Edge (a < b) to the index of the first 2q slice containing it. */
  std::map<Edge, unsigned> first_slice;
  /** Edge to the number of 2q gates acting on it. */
  std::map<Edge, unsigned> weight;
};

InteractionGraph interaction_graph(const Circuit& c);

/** Logical qubit index to device node. */
using PlacementMap = std::map<unsigned, unsigned>;

/**
 * Subgraph monomorphisms of the interaction graph into the device, up to
 * max_matches of them. When none exists, interaction edges are dropped
 * latest slice first and the search repeats. Qubits left without edges are
 * not placed.
 */
std::vector<PlacementMap> graph_placement(const Circuit& c, const Architecture& arch,
                                          unsigned max_matches = 8);

/** Log success probability of the placed interactions and readouts. */
double noise_aware_score(const PlacementMap& p, const InteractionGraph& g,
                         const Architecture& arch);

enum class PlacementMethod { None, Graph, NoiseAware };

PlacementMethod placement_method_from_name(const std::string& name);
std::string placement_method_name(PlacementMethod m);

PlacementMap place(const Circuit& c, const Architecture& arch, PlacementMethod method);

}  // namespace qcc

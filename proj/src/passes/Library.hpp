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

#include <memory>
#include <string>
#include <vector>

#include "mapping/Placement.hpp"
#include "mapping/Routing.hpp"
#include "passes/Pass.hpp"
#include "peephole/Rebase.hpp"

namespace qcc::passes {

/** Gates the Clifford and Pauli passes accept. */
const GateSet& clifford_rotation_gates();

Pass decompose_boxes();
Pass rebase(const Target& target);
Pass remove_redundancies();
Pass commute_through_multis();
Pass squash(EulerBasis basis);
Pass kak();
Pass clifford_simp(bool allow_swaps = false);
Pass optimise_phase_gadgets();
Pass pauli_simp();

/** Where a route pass leaves its last result. */
struct RoutingRecord {
  bool valid = false;
  RoutingResult result;
};

Pass route(ArchitecturePtr arch, PlacementMethod placement = PlacementMethod::Graph,
           std::shared_ptr<RoutingRecord> sink = nullptr, unsigned lookahead = 4);
Pass decompose_routing_ops();

/**
 * squash, commute_through_multis, remove_redundancies, kak, clifford_simp,
 * remove_redundancies, repeated while the gate count drops.
 */
Pass full_peephole(bool allow_swaps);

/**
 * Post-routing cleanup: rebase to {CX, U1, U2, U3}, then commute, remove
 * redundancies and squash while the gate count drops.
 */
Pass synthesise();

/** Rebase to the target, squash into its basis, remove redundancies. */
Pass finalise(const Target& target);

/** Target whose gate set equals the named gates, in any order. */
Target target_from_gates(const std::vector<std::string>& gate_names);

/** Names accepted by parse_pass_spec. */
std::vector<std::string> pass_names();

/**
 * Comma-separated passes with optional arguments, plus repeat(...) and
 * repeat_metric(metric, ...). route and route(placement) use `arch`.
 */
Pass parse_pass_spec(const std::string& spec, ArchitecturePtr arch = nullptr,
                     std::shared_ptr<RoutingRecord> sink = nullptr);

}  // namespace qcc::passes

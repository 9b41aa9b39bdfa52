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

#include <vector>

#include "ir/Circuit.hpp"
#include "sim/GateMatrix.hpp"

namespace qcc {

/** A command with units resolved to indices of the owning circuit. */
struct Gate {
  Op op;
  std::vector<unsigned> qubits;
  std::vector<unsigned> bits;
  bool alive = true;
};

/** Commands in canonical order, units as wire indices (the input unit of each wire). */
std::vector<Gate> gate_list(const Circuit& c);
/** Rebuilds a circuit with c's registers, implicit permutation and phase (plus extra_phase). */
Circuit rebuild(const Circuit& c, const std::vector<Gate>& gates, const Angle& extra_phase = Angle());

/** Half-turns to an Angle, snapped to a small rational when close. */
Angle angle_from_half_turns(double x);

/** Global phase (half-turns) of a gate whose matrix is a multiple of the identity. */
Angle identity_phase(const Op& op);

/** Sets the global phase of `c` so that its wire unitary matches `target` exactly. */
void match_phase(Circuit& c, const MatrixX& target);

/** Port index of `unit` among the op's qubits. */
unsigned port_of(const std::vector<unsigned>& qubits, unsigned unit);

}  // namespace qcc

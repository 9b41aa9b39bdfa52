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

#include "gadget/Pauli.hpp"
#include "gadget/Tableau.hpp"
#include "ir/Circuit.hpp"

namespace qcc {

struct PauliRotation {
  PauliString pauli;
  Angle angle;  // exp(-i pi angle/2 P)
};

/**
 * Rewrites c as a sequence of Pauli rotations followed by a Clifford, up to
 * global phase. Throws NonUnitaryOps on measurements or barriers.
 */
struct PauliForm {
  std::vector<PauliRotation> rotations;
  Tableau clifford;
  Angle phase;
};
PauliForm pauli_form(const Circuit& c);

/**
 * Resynthesises the circuit from its Pauli form: adjacent rotations sharing
 * letters on two or more qubits are built together, then the Clifford tail.
 */
bool pauli_simp(Circuit& c);

}  // namespace qcc

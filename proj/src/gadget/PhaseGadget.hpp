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
#include "ir/Circuit.hpp"
#include "peephole/Util.hpp"

namespace qcc {

/**
 * exp(-i pi a/2 Z...Z) on `qubits` as a CX tree, Rz on the root and the
 * mirrored tree. The balanced tree has logarithmic CX depth; the ladder is a
 * chain. The root is the last qubit in both cases.
 */
void append_phase_gadget(std::vector<Gate>& out, const std::vector<unsigned>& qubits,
                         const Angle& a, bool balanced = true);
Circuit phase_gadget_circuit(unsigned n_qubits, const std::vector<unsigned>& qubits,
                             const Angle& a, bool balanced = true);

/** exp(-i pi a/2 P), with the sign of P folded into the angle. */
void append_pauli_gadget(std::vector<Gate>& out, const PauliString& p, const Angle& a);

/**
 * Two consecutive Pauli gadgets sharing the common letters on at least two
 * qubits, with the shared parity computed once.
 */
void append_pauli_gadget_pair(std::vector<Gate>& out, const PauliString& p1, const Angle& a1,
                              const PauliString& p2, const Angle& a2);

/** Qubits where p1 and p2 hold the same non-identity letter. */
std::vector<unsigned> common_letters(const PauliString& p1, const PauliString& p2);

struct PhaseGadget {
  /** Root last. */
  std::vector<unsigned> qubits;
  Angle angle;
};

struct DetectedGadget {
  /** Index in gate_list of the central Rz. */
  std::size_t position;
  PhaseGadget gadget;
  /** All gate_list indices covered, the Rz included. */
  std::vector<std::size_t> gates;
};

struct GadgetDetection {
  std::vector<DetectedGadget> gadgets;
  /** gate_list indices not covered by any gadget. */
  std::vector<std::size_t> residual;
};

/**
 * Greedily grows each Rz outwards through matching CX pairs targeting the
 * gadget, so a CX ladder around an Rz becomes one gadget and a lone Rz a
 * gadget on one qubit.
 */
GadgetDetection detect_phase_gadgets(const Circuit& c);

/** The residual gates with each detected gadget synthesised at its Rz. */
Circuit reconstruct_phase_gadgets(const Circuit& c, const GadgetDetection& d,
                                  bool balanced = true);

/**
 * Rebuilds maximal {CX, diagonal} regions from their phase polynomials as
 * balanced phase gadgets followed by a CX network. A region is replaced when
 * its CX count does not grow and its gate count or depth shrinks.
 */
bool optimise_phase_gadgets(Circuit& c);

}  // namespace qcc

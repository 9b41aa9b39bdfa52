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
#include <optional>
#include <string>
#include <vector>

#include "ir/Circuit.hpp"
#include "sim/GateMatrix.hpp"

namespace qcc {

/**
 * Unitary of the gates along each wire, wires named by their input unit.
 * Qubit i of the circuit is bit i of the basis index (little-endian).
 * Includes the global phase attribute; ignores the implicit permutation.
 */
MatrixX wire_unitary(const Circuit& c);

/** Full operator: the implicit permutation applied after wire_unitary. */
MatrixX circuit_unitary(const Circuit& c);

/** Matrix moving the content of qubit i to qubit perm[i]. */
MatrixX permutation_matrix(const std::vector<unsigned>& perm);

/** Applies `m` (acting on `qubits`, first = least significant) to every column of `u`. */
void apply_gate(MatrixX& u, const MatrixX& m, const std::vector<unsigned>& qubits);

/**
 * True iff circuit_unitary(b) equals e^{i theta} P circuit_unitary(a) within tol,
 * P moving qubit i to perm[i] (identity when absent). Qubits match by position.
 */
bool equiv_up_to_phase(const Circuit& a, const Circuit& b,
                       const std::optional<std::vector<unsigned>>& perm = std::nullopt,
                       double tol = 1e-8);
double equivalence_error(const Circuit& a, const Circuit& b,
                         const std::optional<std::vector<unsigned>>& perm = std::nullopt);

/** Basis-state probabilities of the final state from |0...0>, keys big-endian strings. */
std::map<std::string, double> output_distribution(const Circuit& c);

}  // namespace qcc

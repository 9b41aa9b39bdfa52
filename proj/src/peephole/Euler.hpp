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

#include <optional>
#include <string>

#include "ir/Circuit.hpp"
#include "passes/Predicate.hpp"
#include "sim/GateMatrix.hpp"

namespace qcc {

/** Target form for single-qubit resynthesis. */
enum class EulerBasis {
  ZXZ,      // Rz Rx Rz
  ZYZ,      // Rz Ry Rz
  U,        // one of U1, U2, U3
  PhasedX,  // Rz then PhasedX
};

std::optional<EulerBasis> euler_basis_from_name(const std::string& name);
std::string euler_basis_name(EulerBasis b);
GateSet euler_basis_gates(EulerBasis b);

/** Angles (half-turns) with u = e^{i pi phase} Rz(alpha) Ry(beta) Rz(gamma). */
struct ZyzAngles {
  double alpha, beta, gamma, phase;
};
ZyzAngles zyz_angles(const Matrix2& u);

/**
 * One-qubit circuit with at most three rotations in the basis whose wire
 * unitary (including global phase) equals u.
 */
Circuit euler_circuit(const Matrix2& u, EulerBasis basis);

}  // namespace qcc

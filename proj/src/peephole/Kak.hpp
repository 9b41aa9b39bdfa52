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

#include "ir/Circuit.hpp"
#include "sim/GateMatrix.hpp"

namespace qcc {

/**
 * u = e^{i phase} L exp(i(a XX + b YY + c ZZ)) R with L, R local and
 * (a, b, c) in the Weyl chamber: pi/4 >= a >= b >= |c|. Radians.
 */
struct KakDecomposition {
  double a = 0, b = 0, c = 0;
  Matrix4 L, R;
  /** 0..3 */
  unsigned cx_count = 3;
};

KakDecomposition kak_decompose(const Matrix4& u);

/** exp(i(a XX + b YY + c ZZ)). */
Matrix4 canonical_gate(double a, double b, double c);

/** Factors a local 4x4 as kron(a1, a0), a0 acting on qubit 0. */
std::pair<Matrix2, Matrix2> factor_local(const Matrix4& m);

/**
 * Two-qubit circuit over {CX, Rz, Rx} with the minimal number of CX for u,
 * exact including global phase. Throws Internal if the result drifts.
 */
Circuit kak_circuit(const Matrix4& u);

}  // namespace qcc

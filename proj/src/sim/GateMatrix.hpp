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

#include <Eigen/Dense>
#include <complex>

#include "ir/Op.hpp"

namespace qcc {

using Complex = std::complex<double>;
using Matrix2 = Eigen::Matrix2cd;
using Matrix4 = Eigen::Matrix4cd;
using MatrixX = Eigen::MatrixXcd;

// Matrix conventions: all angles in half-turns, so Rz(t) = exp(-i*pi*t*Z/2).
// Multi-qubit gate matrices are little-endian: the op's first qubit is the
// least significant bit of the row/column index.

Matrix2 rz_matrix(double t);
Matrix2 rx_matrix(double t);
Matrix2 ry_matrix(double t);
Matrix2 u3_matrix(double theta, double phi, double lambda);

/** Dense matrix of a numeric gate; throws for non-gates or symbols. */
MatrixX gate_matrix(const Op& op);

/** Kronecker product with `a` acting on the more significant qubits. */
MatrixX kron(const MatrixX& a, const MatrixX& b);

/** max |U†U - I| entry. */
double unitarity_error(const MatrixX& u);

/**
 * Distance up to global phase: max entry of |b - e^{i theta} a|, theta
 * chosen from b's largest-magnitude entry.
 */
double phase_distance(const MatrixX& a, const MatrixX& b);

}  // namespace qcc

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

#include "sim/GateMatrix.hpp"

#include <cmath>
#include <numbers>

#include "ir/Errors.hpp"

namespace qcc {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI(0., 1.);

Complex expi(double x) { return {std::cos(x), std::sin(x)}; }

MatrixX permutation_gate(unsigned n_qubits, const std::vector<std::pair<int, int>>& swaps) {
  MatrixX m = MatrixX::Identity(1 << n_qubits, 1 << n_qubits);
  for (auto [a, b] : swaps) m.row(a).swap(m.row(b));
  return m;
}

}  // namespace

Matrix2 rz_matrix(double t) {
  Matrix2 m;
  m << expi(-kPi * t / 2), 0, 0, expi(kPi * t / 2);
  return m;
}

Matrix2 rx_matrix(double t) {
  double c = std::cos(kPi * t / 2), s = std::sin(kPi * t / 2);
  Matrix2 m;
  m << c, -kI * s, -kI * s, c;
  return m;
}

Matrix2 ry_matrix(double t) {
  double c = std::cos(kPi * t / 2), s = std::sin(kPi * t / 2);
  Matrix2 m;
  m << c, -s, s, c;
  return m;
}

Matrix2 u3_matrix(double theta, double phi, double lambda) {
  double c = std::cos(kPi * theta / 2), s = std::sin(kPi * theta / 2);
  Matrix2 m;
  m << c, -expi(kPi * lambda) * s, expi(kPi * phi) * s, expi(kPi * (phi + lambda)) * c;
  return m;
}

MatrixX kron(const MatrixX& a, const MatrixX& b) {
  MatrixX out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

MatrixX gate_matrix(const Op& op) {
  if (op.is_symbolic()) fail(ErrorCode::SymbolicParams, "symbolic gate " + op.to_string());
  auto p = [&](unsigned i) { return op.param(i).value(); };
  Matrix2 m;
  switch (op.type()) {
    case OpType::X: m << 0, 1, 1, 0; return m;
    case OpType::Y: m << 0, -kI, kI, 0; return m;
    case OpType::Z: m << 1, 0, 0, -1; return m;
    case OpType::H: m << 1, 1, 1, -1; return m / std::sqrt(2.);
    case OpType::S: m << 1, 0, 0, kI; return m;
    case OpType::Sdg: m << 1, 0, 0, -kI; return m;
    case OpType::T: m << 1, 0, 0, expi(kPi / 4); return m;
    case OpType::Tdg: m << 1, 0, 0, expi(-kPi / 4); return m;
    case OpType::Rx: return rx_matrix(p(0));
    case OpType::Ry: return ry_matrix(p(0));
    case OpType::Rz: return rz_matrix(p(0));
    case OpType::U1: m << 1, 0, 0, expi(kPi * p(0)); return m;
    case OpType::U2: return u3_matrix(0.5, p(0), p(1));
    case OpType::U3: return u3_matrix(p(0), p(1), p(2));
    case OpType::PhasedX:
      return rz_matrix(p(1)) * rx_matrix(p(0)) * rz_matrix(-p(1));
    case OpType::CX: return permutation_gate(2, {{1, 3}});
    case OpType::SWAP: return permutation_gate(2, {{1, 2}});
    case OpType::CCX: return permutation_gate(3, {{3, 7}});
    case OpType::Bridge: return permutation_gate(3, {{1, 5}, {3, 7}});
    case OpType::CZ: {
      MatrixX u = MatrixX::Identity(4, 4);
      u(3, 3) = -1;
      return u;
    }
    case OpType::CRz: {
      MatrixX u = MatrixX::Identity(4, 4);
      u(1, 1) = expi(-kPi * p(0) / 2);
      u(3, 3) = expi(kPi * p(0) / 2);
      return u;
    }
    default:
      fail(ErrorCode::NonUnitaryOps, "no matrix for " + op.to_string());
  }
}

double unitarity_error(const MatrixX& u) {
  MatrixX d = u.adjoint() * u - MatrixX::Identity(u.rows(), u.cols());
  return d.cwiseAbs().maxCoeff();
}

double phase_distance(const MatrixX& a, const MatrixX& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return INFINITY;
  Eigen::Index bi = 0, bj = 0;
  b.cwiseAbs().maxCoeff(&bi, &bj);
  Complex ref = a(bi, bj);
  if (std::abs(ref) < 1e-12) return (b - a).cwiseAbs().maxCoeff() + 1.;
  Complex phase = b(bi, bj) / ref;
  phase /= std::abs(phase);
  return (b - phase * a).cwiseAbs().maxCoeff();
}

}  // namespace qcc

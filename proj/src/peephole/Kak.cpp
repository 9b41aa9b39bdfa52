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

#include "peephole/Kak.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <unsupported/Eigen/MatrixFunctions>

#include "ir/Errors.hpp"
#include "peephole/Euler.hpp"
#include "peephole/Util.hpp"
#include "sim/Unitary.hpp"

namespace qcc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kClassTol = 1e-9;
const Complex kI(0., 1.);

Matrix2 pauli(char p) {
  Matrix2 m;
  switch (p) {
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, -kI, kI, 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: m = Matrix2::Identity();
  }
  return m;
}

Matrix4 kron2(const Matrix2& a1, const Matrix2& a0) { return kron(a1, a0); }

Matrix4 magic() {
  Matrix4 b;
  b << 1, 0, 0, kI, 0, kI, 1, 0, 0, kI, -1, 0, 1, 0, 0, -kI;
  return b / std::sqrt(2.);
}

// Simultaneous real orthogonal diagonalisation of a symmetric unitary.
Eigen::Matrix4d diagonalise(const Matrix4& m2) {
  Eigen::Matrix4d re = m2.real(), im = m2.imag();
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> dist(0., 2 * kPi);
  for (int attempt = 0; attempt < 100; ++attempt) {
    double th = attempt == 0 ? 0.4321 : dist(rng);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(re * std::cos(th) + im * std::sin(th));
    Eigen::Matrix4d p = es.eigenvectors();
    Matrix4 d = p.transpose().cast<Complex>() * m2 * p.cast<Complex>();
    double off = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if (i != j) off = std::max(off, std::abs(d(i, j)));
    if (off < 1e-10) {
      if (p.determinant() < 0) p.col(0) = -p.col(0);
      return p;
    }
  }
  fail(ErrorCode::Internal, "KAK diagonalisation did not converge");
}

struct Tracker {
  double v[3];
  Matrix4 L, R;

  // N(v) = Q^dag N(v') Q
  void conj(const Matrix4& q, int i, int j) {
    std::swap(v[i], v[j]);
    L = L * q.adjoint();
    R = q * R;
  }
  // Q N(v) Q = N(v') for Hermitian Q
  void flip(const Matrix4& q, int i, int j) {
    v[i] = -v[i];
    v[j] = -v[j];
    L = L * q;
    R = q * R;
  }
};

const Matrix4& swap_q(int i, int j) {
  static const Matrix4 ab = kron2(rz_matrix(0.5), rz_matrix(0.5));
  static const Matrix4 bc = kron2(rx_matrix(0.5), rx_matrix(0.5));
  static const Matrix4 ac = [] {
    Matrix2 h;
    h << 1, 1, 1, -1;
    h /= std::sqrt(2.);
    return kron2(h, h);
  }();
  if (i + j == 1) return ab;
  if (i + j == 3) return bc;
  return ac;
}

const Matrix4& flip_q(int i, int j) {
  static const Matrix4 ab = kron2(Matrix2::Identity(), pauli('Z'));
  static const Matrix4 bc = kron2(Matrix2::Identity(), pauli('X'));
  static const Matrix4 ac = kron2(Matrix2::Identity(), pauli('Y'));
  if (i + j == 1) return ab;
  if (i + j == 3) return bc;
  return ac;
}

void canonicalise(Tracker& t) {
  static const Matrix4 shifts[3] = {kron2(pauli('X'), pauli('X')), kron2(pauli('Y'), pauli('Y')),
                                    kron2(pauli('Z'), pauli('Z'))};
  for (int k = 0; k < 3; ++k) {
    // N(v) = N(v - m pi/2) (i P P)^m
    double m = std::round(t.v[k] / (kPi / 2));
    if (t.v[k] - m * kPi / 2 <= -kPi / 4 + 1e-13) m -= 1;
    t.v[k] -= m * kPi / 2;
    long mi = static_cast<long>(m);
    if (mi % 2 != 0) t.R = shifts[k] * t.R;
  }
  for (int pass = 0; pass < 3; ++pass) {
    for (int i = 0; i < 2; ++i) {
      if (std::fabs(t.v[i]) + 1e-13 < std::fabs(t.v[i + 1])) t.conj(swap_q(i, i + 1), i, i + 1);
    }
  }
  if (t.v[0] < 0 && t.v[1] < 0) {
    t.flip(flip_q(0, 1), 0, 1);
  } else if (t.v[0] < 0) {
    t.flip(flip_q(0, 2), 0, 2);
  } else if (t.v[1] < 0) {
    t.flip(flip_q(1, 2), 1, 2);
  }
  // Keep a, b off the open boundary: -pi/4 is equivalent to pi/4.
}

void append_1q(Circuit& c, const Matrix2& m, unsigned q) {
  Circuit e = euler_circuit(m, EulerBasis::ZXZ);
  for (const Command& cmd : e.commands()) c.add_op(cmd.op, std::vector<unsigned>{q});
}

Angle rad(double x) { return angle_from_half_turns(x / kPi); }

}  // namespace

Matrix4 canonical_gate(double a, double b, double c) {
  Matrix4 h = a * kron2(pauli('X'), pauli('X')) + b * kron2(pauli('Y'), pauli('Y')) +
              c * kron2(pauli('Z'), pauli('Z'));
  return Matrix4((kI * h).exp());
}

std::pair<Matrix2, Matrix2> factor_local(const Matrix4& m) {
  int bi = 0, bj = 0;
  double best = -1;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      double n = m.block<2, 2>(2 * i, 2 * j).norm();
      if (n > best) best = n, bi = i, bj = j;
    }
  Matrix2 blk = m.block<2, 2>(2 * bi, 2 * bj);
  Matrix2 a0 = blk / std::sqrt(blk.determinant());
  Matrix2 a1;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) a1(i, j) = (Matrix2(m.block<2, 2>(2 * i, 2 * j)) * a0.adjoint()).trace() / 2.;
  return {a1, a0};
}

KakDecomposition kak_decompose(const Matrix4& u_in) {
  Matrix4 u = u_in / std::pow(u_in.determinant(), 0.25);
  Matrix4 b = magic();
  Matrix4 up = b.adjoint() * u * b;
  Matrix4 m2 = up.transpose() * up;
  Eigen::Matrix4d p = diagonalise(m2);
  Matrix4 pc = p.cast<Complex>();
  Matrix4 d = pc.transpose() * m2 * pc;
  double theta[4];
  double sum = 0;
  for (int k = 0; k < 4; ++k) {
    theta[k] = std::arg(d(k, k)) / 2;
    sum += theta[k];
  }
  // det(Dh) must be 1, not -1.
  if (std::fabs(std::remainder(sum, 2 * kPi)) > 1) theta[0] += kPi;
  Matrix4 dh = Matrix4::Zero(), dh_inv = Matrix4::Zero();
  for (int k = 0; k < 4; ++k) {
    dh(k, k) = std::polar(1., theta[k]);
    dh_inv(k, k) = std::polar(1., -theta[k]);
  }
  Matrix4 k1 = up * pc * dh_inv;

  // theta_k = a x_k + b y_k + c z_k + phi
  Eigen::Matrix4d sys;
  Eigen::Vector4d rhs;
  Matrix4 xx = b.adjoint() * kron2(pauli('X'), pauli('X')) * b;
  Matrix4 yy = b.adjoint() * kron2(pauli('Y'), pauli('Y')) * b;
  Matrix4 zz = b.adjoint() * kron2(pauli('Z'), pauli('Z')) * b;
  for (int k = 0; k < 4; ++k) {
    sys(k, 0) = xx(k, k).real();
    sys(k, 1) = yy(k, k).real();
    sys(k, 2) = zz(k, k).real();
    sys(k, 3) = 1;
    rhs(k) = theta[k];
  }
  Eigen::Vector4d sol = sys.fullPivLu().solve(rhs);

  Tracker t;
  t.v[0] = sol(0);
  t.v[1] = sol(1);
  t.v[2] = sol(2);
  t.L = b * k1 * b.adjoint();
  t.R = b * pc.transpose() * b.adjoint();
  canonicalise(t);

  KakDecomposition out;
  out.a = t.v[0];
  out.b = t.v[1];
  out.c = t.v[2];
  out.L = t.L;
  out.R = t.R;
  bool a0 = std::fabs(out.a) < kClassTol, b0 = std::fabs(out.b) < kClassTol,
       c0 = std::fabs(out.c) < kClassTol;
  if (a0 && b0 && c0)
    out.cx_count = 0;
  else if (std::fabs(out.a - kPi / 4) < kClassTol && b0 && c0)
    out.cx_count = 1;
  else if (c0)
    out.cx_count = 2;
  else
    out.cx_count = 3;
  return out;
}

Circuit kak_circuit(const Matrix4& u) {
  KakDecomposition k = kak_decompose(u);
  Tracker t{{k.a, k.b, k.c}, k.L, k.R};
  Circuit core(2);
  switch (k.cx_count) {
    case 0:
      break;
    case 1: {
      t.conj(swap_q(0, 2), 0, 2);
      core.add_op(OpType::Rz, {1}, {Angle(Rational(1, 2))});
      core.add_op(OpType::Rx, {1}, {Angle(Rational(1, 2))});
      core.add_op(OpType::Rz, {1}, {Angle(Rational(1, 2))});
      core.add_op(OpType::CX, {0, 1});
      core.add_op(OpType::Rz, {1}, {Angle(Rational(1, 2))});
      core.add_op(OpType::Rx, {1}, {Angle(Rational(1, 2))});
      core.add_op(OpType::Rz, {1}, {Angle(Rational(1, 2))});
      core.add_op(OpType::Rz, {0}, {Angle(Rational(-1, 2))});
      core.add_op(OpType::Rz, {1}, {Angle(Rational(-1, 2))});
      break;
    }
    case 2: {
      t.conj(swap_q(1, 2), 1, 2);
      core.add_op(OpType::CX, {0, 1});
      core.add_op(OpType::Rx, {0}, {rad(-2 * t.v[0])});
      core.add_op(OpType::Rz, {1}, {rad(-2 * t.v[2])});
      core.add_op(OpType::CX, {0, 1});
      break;
    }
    default: {
      double a = t.v[0], b = t.v[1], c = t.v[2];
      core.add_op(OpType::Rz, {1}, {rad(-kPi / 2)});
      core.add_op(OpType::CX, {1, 0});
      core.add_op(OpType::Rz, {0}, {rad(-2 * c - kPi / 2)});
      core.add_op(OpType::Rx, {1}, {rad(kPi / 2)});
      core.add_op(OpType::Rz, {1}, {rad(2 * a + kPi / 2)});
      core.add_op(OpType::CX, {0, 1});
      core.add_op(OpType::Rz, {1}, {rad(-2 * b - kPi / 2)});
      core.add_op(OpType::Rx, {1}, {rad(-kPi / 2)});
      core.add_op(OpType::CX, {1, 0});
      core.add_op(OpType::Rz, {0}, {rad(kPi / 2)});
      break;
    }
  }
  // u ~ L core R: core is applied after R and before L.
  Circuit out(2);
  auto [r1, r0] = factor_local(t.R);
  auto [l1, l0] = factor_local(t.L);
  if (k.cx_count == 0) {
    auto [m1, m0] = factor_local(t.L * t.R);
    append_1q(out, m0, 0);
    append_1q(out, m1, 1);
  } else {
    append_1q(out, r0, 0);
    append_1q(out, r1, 1);
    for (const Command& cmd : core.commands()) {
      std::vector<unsigned> qs;
      for (const UnitID& q : cmd.qubits) qs.push_back(q.index);
      out.add_op(cmd.op, qs);
    }
    append_1q(out, l0, 0);
    append_1q(out, l1, 1);
  }
  match_phase(out, u);
  double err = (wire_unitary(out) - MatrixX(u)).cwiseAbs().maxCoeff();
  if (err > 1e-8) fail(ErrorCode::Internal, "KAK synthesis error " + std::to_string(err));
  return out;
}

}  // namespace qcc

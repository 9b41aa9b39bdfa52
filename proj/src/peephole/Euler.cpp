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

#include "peephole/Euler.hpp"

#include <cmath>
#include <numbers>

#include "peephole/Util.hpp"

namespace qcc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kAngleTol = 1e-12;

// Distance from x to the nearest multiple of `period`.
double off_multiple(double x, double period) {
  return std::fabs(x - period * std::round(x / period));
}

void add_rotation(Circuit& c, OpType t, const Angle& a) {
  if (a.is_zero_mod(2, kAngleTol)) return;  // +-identity, phase fixed later
  c.add_op(t, {0}, {a});
}

}  // namespace

std::optional<EulerBasis> euler_basis_from_name(const std::string& name) {
  if (name == "zxz") return EulerBasis::ZXZ;
  if (name == "zyz") return EulerBasis::ZYZ;
  if (name == "u" || name == "u3") return EulerBasis::U;
  if (name == "phasedx") return EulerBasis::PhasedX;
  return std::nullopt;
}

std::string euler_basis_name(EulerBasis b) {
  switch (b) {
    case EulerBasis::ZXZ: return "zxz";
    case EulerBasis::ZYZ: return "zyz";
    case EulerBasis::U: return "u";
    case EulerBasis::PhasedX: return "phasedx";
  }
  return "?";
}

GateSet euler_basis_gates(EulerBasis b) {
  switch (b) {
    case EulerBasis::ZXZ: return {OpType::Rz, OpType::Rx};
    case EulerBasis::ZYZ: return {OpType::Rz, OpType::Ry};
    case EulerBasis::U: return {OpType::U1, OpType::U2, OpType::U3};
    case EulerBasis::PhasedX: return {OpType::Rz, OpType::PhasedX};
  }
  return {};
}

ZyzAngles zyz_angles(const Matrix2& u) {
  Complex det = u.determinant();
  Complex root = std::sqrt(det);
  Matrix2 v = u / root;
  Complex a = v(0, 0), b = v(1, 0);
  double beta = 2 * std::atan2(std::abs(b), std::abs(a));
  double sum = std::abs(a) < 1e-14 ? 0. : -2 * std::arg(a);
  double diff = std::abs(b) < 1e-14 ? 0. : 2 * std::arg(b);
  ZyzAngles z;
  z.alpha = (sum + diff) / 2 / kPi;
  z.gamma = (sum - diff) / 2 / kPi;
  z.beta = beta / kPi;
  z.phase = std::arg(root) / kPi;
  return z;
}

Circuit euler_circuit(const Matrix2& u, EulerBasis basis) {
  ZyzAngles z = zyz_angles(u);
  Circuit c(1);
  // Ry(beta) is +-I: only the z part survives.
  bool flat = off_multiple(z.beta, 2) < kAngleTol;
  Angle alpha = angle_from_half_turns(z.alpha);
  Angle beta = angle_from_half_turns(z.beta);
  Angle gamma = angle_from_half_turns(z.gamma);
  switch (basis) {
    case EulerBasis::ZYZ:
    case EulerBasis::ZXZ: {
      OpType mid = basis == EulerBasis::ZYZ ? OpType::Ry : OpType::Rx;
      // Rz(a) Ry(b) Rz(g) = Rz(a + 1/2) Rx(b) Rz(g - 1/2).
      Angle shift = basis == EulerBasis::ZXZ ? Angle(Rational(1, 2)) : Angle();
      if (flat) {
        add_rotation(c, OpType::Rz, alpha + gamma);
      } else {
        add_rotation(c, OpType::Rz, gamma - shift);
        add_rotation(c, mid, beta);
        add_rotation(c, OpType::Rz, alpha + shift);
      }
      break;
    }
    case EulerBasis::U: {
      if (flat) {
        Angle lam = alpha + gamma;
        if (!lam.is_zero_mod(2, kAngleTol)) c.add_op(OpType::U1, {0}, {lam});
      } else if (off_multiple(z.beta - 0.5, 4) < kAngleTol) {
        c.add_op(OpType::U2, {0}, {alpha, gamma});
      } else {
        c.add_op(OpType::U3, {0}, {beta, alpha, gamma});
      }
      break;
    }
    case EulerBasis::PhasedX: {
      add_rotation(c, OpType::Rz, alpha + gamma);
      if (!flat) {
        c.add_op(OpType::PhasedX, {0}, {beta, alpha + Angle(Rational(1, 2))});
      }
      break;
    }
  }
  match_phase(c, u);
  return c;
}

}  // namespace qcc

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

#include <Eigen/QR>
#include <cstdint>
#include <random>

#include "ir/Circuit.hpp"
#include "sim/GateMatrix.hpp"

namespace qcc::test {

/** Haar-random unitary via QR of a complex Ginibre matrix. */
inline MatrixX haar_unitary(unsigned dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  MatrixX z(dim, dim);
  for (unsigned i = 0; i < dim; ++i)
    for (unsigned j = 0; j < dim; ++j) z(i, j) = {g(rng), g(rng)};
  Eigen::HouseholderQR<MatrixX> qr(z);
  MatrixX q = qr.householderQ();
  MatrixX r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (unsigned j = 0; j < dim; ++j) {
    auto d = r(j, j);
    q.col(j) *= d / std::abs(d);
  }
  return q;
}

/** Random circuit over a broad gate set, including non-Clifford rotations. */
inline Circuit rich_random_circuit(unsigned n, unsigned gates, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, 13);
  std::uniform_int_distribution<unsigned> qd(0, n - 1);
  std::uniform_int_distribution<int> num(-15, 15);
  Circuit c(n);
  for (unsigned k = 0; k < gates; ++k) {
    unsigned a = qd(rng), b = qd(rng);
    while (b == a) b = qd(rng);
    Angle t = Angle::exact(num(rng), 8);
    switch (pick(rng)) {
      case 0: c.add_op(OpType::H, {a}); break;
      case 1: c.add_op(OpType::S, {a}); break;
      case 2: c.add_op(OpType::T, {a}); break;
      case 3: c.add_op(OpType::X, {a}); break;
      case 4: c.add_op(OpType::Rz, {a}, {t}); break;
      case 5: c.add_op(OpType::Rx, {a}, {t}); break;
      case 6: c.add_op(OpType::Ry, {a}, {Angle::real(0.1 * num(rng))}); break;
      case 7: c.add_op(OpType::U3, {a}, {t, Angle::exact(1, 3), Angle::exact(-1, 5)}); break;
      case 8:
      case 9: c.add_op(OpType::CX, {a, b}); break;
      case 10: c.add_op(OpType::CZ, {a, b}); break;
      case 11: c.add_op(OpType::SWAP, {a, b}); break;
      case 12: c.add_op(OpType::CRz, {a, b}, {t}); break;
      default: c.add_op(OpType::Sdg, {a}); break;
    }
  }
  return c;
}

}  // namespace qcc::test

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

namespace qcc {

/**
 * Stabilizer tableau of a Clifford unitary C: the images C X_i C^dag and
 * C Z_i C^dag. Global phase is not tracked.
 */
class Tableau {
 public:
  explicit Tableau(unsigned n);
  /** Throws NonCliffordGate on a non-Clifford gate; ignores the implicit permutation. */
  static Tableau from_circuit(const Circuit& c);

  unsigned n_qubits() const { return n_; }
  const PauliString& x_image(unsigned q) const { return rows_[q]; }
  const PauliString& z_image(unsigned q) const { return rows_[n_ + q]; }
  void set_images(unsigned q, PauliString x, PauliString z);

  /** C := g C. */
  void apply(const Op& op, const std::vector<unsigned>& qubits);
  /** C := C g. */
  void prepend(const Op& op, const std::vector<unsigned>& qubits);

  /** C P C^dag. */
  PauliString conjugate(const PauliString& p) const;

  /** Circuit (H, S, Sdg, X, Z, CX, Rx(+-1/2)) implementing C up to global phase. */
  Circuit synthesise() const;

  bool operator==(const Tableau&) const = default;

 private:
  void h(unsigned a);
  void s(unsigned a);
  void cx(unsigned a, unsigned b);
  void pauli_x(unsigned a);
  void pauli_z(unsigned a);

  unsigned n_;
  std::vector<PauliString> rows_;
};

/** k with angle == k/2 (mod 4), or -1 when the angle is not a Clifford angle. */
int clifford_quarter(const Angle& a);

}  // namespace qcc

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

#include "harness/Uccsd.hpp"

#include <algorithm>
#include <random>

#include "ir/Errors.hpp"

namespace qcc {

namespace {

// Letters over qubits lo..hi: `ends` maps the excitation qubits to X or Y,
// Z in between an odd-even pair, I elsewhere.
std::vector<Pauli> excitation_string(const std::vector<unsigned>& qs,
                                     const std::vector<Pauli>& letters) {
  unsigned lo = qs.front(), hi = qs.back();
  std::vector<Pauli> s(hi - lo + 1, Pauli::I);
  for (std::size_t k = 0; k < qs.size(); k += 2)
    for (unsigned q = qs[k] + 1; q < qs[k + 1]; ++q) s[q - lo] = Pauli::Z;
  for (std::size_t k = 0; k < qs.size(); ++k) s[qs[k] - lo] = letters[k];
  return s;
}

}  // namespace

Circuit uccsd_circuit(unsigned n_qubits, unsigned n_boxes, std::uint64_t seed) {
  if (n_qubits < 2) fail(ErrorCode::InvalidSize, "ansatz needs at least 2 qubits");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(-1., 1.);
  Circuit c(n_qubits);
  unsigned boxes = 0;
  auto add = [&](const std::vector<unsigned>& qs, const std::vector<Pauli>& letters, double a) {
    if (boxes == n_boxes) return;
    std::vector<unsigned> wires;
    for (unsigned q = qs.front(); q <= qs.back(); ++q) wires.push_back(q);
    c.add_op(Op::pauli_exp_box(excitation_string(qs, letters), Angle::real(a)), wires);
    ++boxes;
  };
  while (boxes < n_boxes) {
    bool dbl = n_qubits >= 4 && std::uniform_int_distribution<int>(0, 1)(rng) == 1;
    std::vector<unsigned> all(n_qubits);
    for (unsigned q = 0; q < n_qubits; ++q) all[q] = q;
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<unsigned> qs(all.begin(), all.begin() + (dbl ? 4 : 2));
    std::sort(qs.begin(), qs.end());
    double a = angle(rng);
    using P = Pauli;
    if (!dbl) {
      add(qs, {P::X, P::Y}, a);
      add(qs, {P::Y, P::X}, -a);
    } else {
      static const std::vector<std::vector<P>> kDoubles = {
          {P::X, P::X, P::X, P::Y}, {P::X, P::X, P::Y, P::X}, {P::X, P::Y, P::X, P::X},
          {P::Y, P::X, P::X, P::X}, {P::Y, P::Y, P::Y, P::X}, {P::Y, P::Y, P::X, P::Y},
          {P::Y, P::X, P::Y, P::Y}, {P::X, P::Y, P::Y, P::Y}};
      for (std::size_t k = 0; k < kDoubles.size(); ++k) add(qs, kDoubles[k], k < 4 ? a : -a);
    }
  }
  return c;
}

}  // namespace qcc

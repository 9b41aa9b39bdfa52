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

#include "harness/RandomCircuit.hpp"

#include <array>
#include <random>

#include "ir/Errors.hpp"

namespace qcc {

Circuit random_circuit(unsigned n_qubits, unsigned n_gates, std::uint64_t seed) {
  if (n_qubits < 2) fail(ErrorCode::InvalidSize, "random circuits need at least 2 qubits");
  if (n_gates == 0) fail(ErrorCode::InvalidSize, "random circuits need at least 1 gate");
  static constexpr std::array<OpType, 7> kGates = {OpType::X, OpType::Y, OpType::Z, OpType::H,
                                                   OpType::T, OpType::S, OpType::CX};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<unsigned> pick_gate(0, kGates.size() - 1);
  std::uniform_int_distribution<unsigned> pick_qubit(0, n_qubits - 1);
  std::uniform_int_distribution<unsigned> pick_other(0, n_qubits - 2);
  while (true) {
    Circuit c(n_qubits);
    bool has_cx = false;
    for (unsigned k = 0; k < n_gates; ++k) {
      OpType t = kGates[pick_gate(rng)];
      unsigned a = pick_qubit(rng);
      if (t == OpType::CX) {
        unsigned b = pick_other(rng);
        if (b >= a) ++b;
        c.add_op(t, {a, b});
        has_cx = true;
      } else {
        c.add_op(t, {a});
      }
    }
    if (has_cx) return c;
  }
}

}  // namespace qcc

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

#include <cstdint>

#include "ir/Circuit.hpp"

namespace qcc {

/**
 * A chemistry-style ansatz: n_boxes PauliExpBoxes from single (X Z..Z Y)
 * and double (four X/Y letters joined by Z chains) excitations with random
 * angles. Excitations contribute several strings sharing one angle.
 */
Circuit uccsd_circuit(unsigned n_qubits, unsigned n_boxes, std::uint64_t seed);

}  // namespace qcc

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

#include <optional>

#include "ir/Circuit.hpp"
#include "passes/Predicate.hpp"
#include "peephole/Euler.hpp"

namespace qcc {

/**
 * Cancels adjacent inverse pairs, merges same-axis rotations, drops
 * identities and diagonal gates directly before a measurement.
 */
bool remove_redundancies(Circuit& c);

/** Moves single-qubit gates backwards through multi-qubit gates they commute with. */
bool commute_through_multis(Circuit& c);

/**
 * Resynthesises maximal runs of numeric single-qubit gates in `basis`. A run
 * is replaced when the result is shorter, or equally long while the run uses
 * a gate outside `allowed` (the basis gates by default).
 */
bool squash_1q(Circuit& c, EulerBasis basis, const std::optional<GateSet>& allowed = std::nullopt);

/**
 * Resynthesises two-qubit blocks with the minimal number of CX over
 * {CX, Rz, Rx}. A block is replaced only when that lowers its two-qubit gate
 * count, or keeps it and lowers the total gate count.
 */
bool kak_resynthesise(Circuit& c);

/** Two-qubit cost used when comparing blocks: CX, CZ 1; CRz 2; SWAP 3. */
unsigned two_qubit_cost(const Op& op);

}  // namespace qcc

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

#include <functional>
#include <vector>

#include "peephole/Util.hpp"

namespace qcc {

/**
 * A convex run of gates confined to qubits p and q. Gates on the two wires
 * are contiguous, so the block may be moved to the position of its last gate.
 */
struct TwoQubitBlock {
  unsigned p = 0, q = 0;
  std::vector<std::size_t> gates;
  unsigned n_two_qubit = 0;
};

using GateFilter = std::function<bool(const Gate&)>;

/** Maximal blocks holding at least one two-qubit gate; `admissible` selects usable gates. */
std::vector<TwoQubitBlock> find_two_qubit_blocks(const std::vector<Gate>& gates, unsigned n_qubits,
                                                 const GateFilter& admissible);

/** 4x4 unitary of a block, p as the least significant qubit. */
Matrix4 block_unitary(const std::vector<Gate>& gates, const TwoQubitBlock& b);

/**
 * Replaces blocks by new gate lists over local wires {0 = p, 1 = q};
 * an empty optional keeps the block.
 */
Circuit replace_blocks(const Circuit& c, std::vector<Gate> gates,
                       const std::vector<TwoQubitBlock>& blocks,
                       const std::vector<std::optional<Circuit>>& replacements);

}  // namespace qcc

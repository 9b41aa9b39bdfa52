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

#include "ir/Circuit.hpp"

namespace qcc {

/**
 * Replaces two-qubit Clifford blocks with catalog circuits of minimal CX
 * count. With allow_swaps, a block may also be realised up to a swap of its
 * wires, recorded in the implicit permutation.
 */
bool clifford_simp(Circuit& c, bool allow_swaps = true);

}  // namespace qcc

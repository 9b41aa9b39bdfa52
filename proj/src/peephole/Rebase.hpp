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
#include <string>
#include <vector>

#include "ir/Circuit.hpp"
#include "passes/Predicate.hpp"
#include "peephole/Euler.hpp"

namespace qcc {

/** A native gate set: one entangling gate plus a single-qubit basis. */
struct Target {
  std::string name;
  GateSet gates;
  OpType entangler = OpType::CX;
  EulerBasis basis = EulerBasis::ZXZ;
};

/** cx-u, cz-rxrz, cx-rzrx, cz-phasedx; also "cx,rz,rx" for the internal set. */
std::optional<Target> target_from_name(const std::string& name);
std::vector<std::string> target_names();
/** {CX, Rz, Rx}. */
const Target& internal_target();

/** Rewrites every gate into the target set. Throws BoxesPresent on boxes. */
bool rebase(Circuit& c, const Target& target);

}  // namespace qcc

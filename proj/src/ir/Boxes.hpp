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

#include "ir/Circuit.hpp"

namespace qcc {

/**
 * exp(-i*pi*angle/2 * s) as basis change, CX ladder, Rz, and the mirror image.
 * Identity letters are skipped; the basis change is H for X and Rx(1/2) for Y.
 */
Circuit pauli_gadget_ladder(const std::vector<Pauli>& s, const Angle& angle);

/** Inlines every CircBox and expands every PauliExpBox, recursively. */
Circuit decompose_boxes(const Circuit& c);

/** In-place variant; returns whether anything was expanded. */
bool decompose_boxes_inplace(Circuit& c);

}  // namespace qcc

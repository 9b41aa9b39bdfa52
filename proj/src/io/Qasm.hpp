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

#include <string>
#include <string_view>

#include "ir/Circuit.hpp"

namespace qcc {

/**
 * Parses the OpenQASM 2.0 subset: qreg/creg, the qelib1 gates
 * u1 u2 u3 rx ry rz h x y z s sdg t tdg cx cz swap ccx, measure and barrier.
 * Angles are converted from radians to half-turns; decimals close to a small
 * rational multiple of pi are snapped to exact values.
 */
Circuit parse_qasm(std::string_view text);
Circuit load_qasm_file(const std::string& path);

/**
 * Emits QASM. Exact angles print as pi*p/q, others as pi*<17 significant
 * digits>. The implicit permutation and global phase are not representable
 * and are dropped.
 */
std::string emit_qasm(const Circuit& c);

}  // namespace qcc

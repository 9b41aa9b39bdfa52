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

#include <json.hpp>
#include <string>

#include "ir/Circuit.hpp"

namespace qcc {

/** Circuit JSON, format_version 1. Angles are half-turn strings. */
nlohmann::json circuit_to_json(const Circuit& c);
Circuit circuit_from_json(const nlohmann::json& j);

std::string emit_circuit_json(const Circuit& c);
Circuit parse_circuit_json(const std::string& text);

/** Loads .qasm or .json by extension. */
Circuit load_circuit_file(const std::string& path);

}  // namespace qcc

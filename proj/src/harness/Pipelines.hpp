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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ir/Circuit.hpp"
#include "mapping/Architecture.hpp"
#include "mapping/Placement.hpp"
#include "passes/Library.hpp"
#include "peephole/Rebase.hpp"

namespace qcc {

struct PipelineSpec {
  /** full, chem, synthesise or custom. */
  std::string name = "full";
  Target target = *target_from_name("cx-u");
  /** "full" means all-to-all connectivity and no routing. */
  std::string arch_name = "full";
  ArchitecturePtr arch;
  /** Pass spec for the custom pipeline. */
  std::string passes;
  PlacementMethod placement = PlacementMethod::Graph;
  /** Check pass contracts while running. */
  bool strict = false;
};

/** nullptr for "full", otherwise a builtin name or JSON file. */
ArchitecturePtr load_architecture(const std::string& name_or_path);

std::vector<std::string> pipeline_names();

Pass build_pipeline(const PipelineSpec& spec,
                    std::shared_ptr<passes::RoutingRecord> sink = nullptr);

struct CircuitMetrics {
  std::size_t qubits = 0;
  std::size_t gates = 0;
  std::size_t two_qubit_gates = 0;
  std::size_t depth = 0;
  std::size_t two_qubit_depth = 0;
};

CircuitMetrics metrics(const Circuit& c);

struct CompileResult {
  /** Never carries an implicit permutation. Qubits are node[k] when routed. */
  Circuit circuit;
  /** The input laid out on the output's qubits. */
  Circuit reference;
  /**
   * equiv_up_to_phase(reference, circuit, permutation) holds: the content of
   * qubit i of `reference` ends on qubit permutation[i] of `circuit`.
   */
  std::vector<unsigned> permutation;
  std::optional<std::map<UnitID, unsigned>> initial_map;
  std::optional<std::map<UnitID, unsigned>> final_map;
  unsigned swaps = 0;
  unsigned bridges = 0;
  std::string pass_name;
  CircuitMetrics input;
  CircuitMetrics output;
  double seconds = 0.;
};

/**
 * Runs the pipeline, then checks the output is in the target gate set and,
 * on a device, respects its connectivity.
 */
CompileResult compile(const Circuit& input, const PipelineSpec& spec);

/** Report JSON; wall time is left out when reproducible. */
nlohmann::json compile_report(const CompileResult& r, const PipelineSpec& spec,
                              bool reproducible = false);

/** `input` on the given output qubits, renamed through an optional initial map. */
Circuit embed_reference(const Circuit& input, const std::vector<UnitID>& qubits,
                        const std::optional<std::map<UnitID, unsigned>>& initial_map);

/** Initial map, permutation and output qubits as stored in a report. */
struct ReportLayout {
  std::optional<std::map<UnitID, unsigned>> initial_map;
  std::optional<std::vector<unsigned>> permutation;
  std::optional<std::vector<UnitID>> qubits;
};
ReportLayout layout_from_report(const nlohmann::json& report);

/**
 * Keeps only `qubits`, in that order. QASM output declares whole registers,
 * so a routed circuit read back carries idle device nodes; they are dropped
 * here. Throws UnknownUnit if a dropped qubit is used.
 */
Circuit restrict_qubits(const Circuit& c, const std::vector<UnitID>& qubits);

}  // namespace qcc

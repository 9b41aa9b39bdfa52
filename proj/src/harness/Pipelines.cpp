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

#include "harness/Pipelines.hpp"

#include <chrono>

#include "harness/Log.hpp"
#include "ir/Boxes.hpp"
#include "ir/Errors.hpp"
#include "peephole/Util.hpp"

namespace qcc {

ArchitecturePtr load_architecture(const std::string& name_or_path) {
  if (name_or_path.empty() || name_or_path == "full") return nullptr;
  return std::make_shared<const Architecture>(Architecture::load(name_or_path));
}

std::vector<std::string> pipeline_names() { return {"full", "chem", "synthesise", "custom"}; }

namespace {

void append_routing(std::vector<Pass>& v, const PipelineSpec& spec,
                    const std::shared_ptr<passes::RoutingRecord>& sink) {
  if (!spec.arch) return;
  v.push_back(passes::route(spec.arch, spec.placement, sink));
  v.push_back(passes::decompose_routing_ops());
}

}  // namespace

Pass build_pipeline(const PipelineSpec& spec, std::shared_ptr<passes::RoutingRecord> sink) {
  std::vector<Pass> v{passes::decompose_boxes()};
  if (spec.name == "full" || spec.name == "chem") {
    v.push_back(passes::rebase(internal_target()));
    if (spec.name == "chem") {
      v.push_back(passes::pauli_simp());
      v.push_back(passes::rebase(internal_target()));
    }
    // Wire swaps would break a later placement, so they are only allowed without routing.
    v.push_back(passes::full_peephole(!spec.arch));
    append_routing(v, spec, sink);
    v.push_back(passes::synthesise());
  } else if (spec.name == "synthesise") {
    v.push_back(passes::rebase(internal_target()));
    append_routing(v, spec, sink);
    v.push_back(passes::synthesise());
  } else if (spec.name == "custom") {
    if (spec.passes.empty()) fail(ErrorCode::InvalidArgument, "custom pipeline needs --passes");
    Pass user = passes::parse_pass_spec(spec.passes, spec.arch, sink);
    v.push_back(user);
    bool routed = false;
    if (spec.arch)
      for (const Predicate& p : user.contract().post)
        routed = routed || p.entails(Predicate::connectivity(spec.arch));
    if (spec.arch && !routed) {
      v.push_back(passes::rebase(internal_target()));
      append_routing(v, spec, sink);
    }
  } else {
    fail(ErrorCode::InvalidArgument, "unknown pipeline '" + spec.name + "'");
  }
  v.push_back(passes::finalise(spec.target));
  return Pass::sequence(v);
}

CircuitMetrics metrics(const Circuit& c) {
  CircuitMetrics m;
  m.qubits = c.n_qubits();
  m.gates = c.gate_count();
  m.two_qubit_gates = c.two_qubit_gate_count();
  m.depth = c.depth();
  m.two_qubit_depth = c.two_qubit_depth();
  return m;
}

namespace {

// Drops the implicit permutation; perm[j] is where the content that c leaves
// on qubit j sits in the result.
Circuit strip_permutation(const Circuit& c, std::vector<unsigned>& perm) {
  perm.resize(c.n_qubits());
  std::map<UnitID, UnitID> implicit = c.implicit_permutation();
  for (unsigned i = 0; i < c.n_qubits(); ++i) perm[*c.qubit_index(implicit.at(c.qubits()[i]))] = i;
  Circuit out;
  for (const UnitID& q : c.qubits()) out.add_qubit(q);
  for (const UnitID& b : c.bits()) out.add_bit(b);
  for (const Gate& g : gate_list(c)) out.add_op(g.op, g.qubits, g.bits);
  out.set_phase(c.global_phase());
  return out;
}

}  // namespace

Circuit embed_reference(const Circuit& input, const std::vector<UnitID>& qubits,
                        const std::optional<std::map<UnitID, unsigned>>& initial_map) {
  auto rename = [&](const UnitID& u) {
    if (!initial_map) return u;
    auto it = initial_map->find(u);
    if (it == initial_map->end())
      fail(ErrorCode::UnknownUnit, "no initial placement for " + u.repr());
    return Architecture::node_unit(it->second);
  };
  Circuit out;
  for (const UnitID& q : qubits) out.add_qubit(q);
  for (const UnitID& b : input.bits()) out.add_bit(b);
  for (const Command& cmd : input.commands()) {
    std::vector<UnitID> qs;
    for (const UnitID& q : cmd.qubits) qs.push_back(rename(q));
    out.add_op(cmd.op, qs, cmd.bits);
  }
  if (input.has_implicit_permutation()) {
    std::map<UnitID, UnitID> perm;
    for (const auto& [a, b] : input.implicit_permutation()) perm[rename(a)] = rename(b);
    out.permute_outputs(perm);
  }
  out.set_phase(input.global_phase());
  return out;
}

CompileResult compile(const Circuit& input, const PipelineSpec& spec) {
  auto start = std::chrono::steady_clock::now();
  if (spec.arch && input.n_qubits() > spec.arch->n_nodes())
    fail(ErrorCode::TooManyQubits, "circuit has " + std::to_string(input.n_qubits()) +
                                       " qubits, " + spec.arch->name() + " has " +
                                       std::to_string(spec.arch->n_nodes()));
  auto sink = std::make_shared<passes::RoutingRecord>();
  Pass pipeline = build_pipeline(spec, sink);
  Circuit c = input;
  pipeline.apply(c, spec.strict);

  Predicate gates = Predicate::gate_set(spec.target.gates);
  if (!gates.check(c))
    fail(ErrorCode::PostconditionFailed, "output is not in " + gates.name());
  if (spec.arch && !Predicate::connectivity(spec.arch).check(c))
    fail(ErrorCode::PostconditionFailed, "output violates the connectivity of " + spec.arch->name());

  CompileResult r;
  r.pass_name = pipeline.name();
  std::vector<unsigned> strip;
  r.circuit = strip_permutation(c, strip);
  Circuit flat = decompose_boxes(input);
  if (sink->valid) {
    const RoutingResult& routing = sink->result;
    r.initial_map = routing.initial_map;
    r.final_map = routing.final_map;
    r.swaps = routing.swaps;
    r.bridges = routing.bridges;
    r.reference = embed_reference(flat, r.circuit.qubits(), r.initial_map);
    r.permutation.resize(routing.permutation.size());
    for (unsigned i = 0; i < routing.permutation.size(); ++i)
      r.permutation[i] = strip[routing.permutation[i]];
  } else {
    r.reference = flat;
    r.permutation = strip;
  }
  r.input = metrics(flat);
  r.output = metrics(r.circuit);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  log().debug("compiled with {}: 2q {} -> {}", r.pass_name, r.input.two_qubit_gates,
              r.output.two_qubit_gates);
  return r;
}

namespace {

nlohmann::json metrics_json(const CircuitMetrics& m) {
  return {{"qubits", m.qubits},
          {"gates", m.gates},
          {"two_qubit_gates", m.two_qubit_gates},
          {"depth", m.depth},
          {"two_qubit_depth", m.two_qubit_depth}};
}

nlohmann::json map_json(const std::map<UnitID, unsigned>& m) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [u, n] : m) j[u.repr()] = n;
  return j;
}

}  // namespace

nlohmann::json compile_report(const CompileResult& r, const PipelineSpec& spec,
                              bool reproducible) {
  nlohmann::json j;
  j["pipeline"] = spec.name;
  j["arch"] = spec.arch_name;
  j["target"] = spec.target.name;
  j["passes"] = r.pass_name;
  j["input"] = metrics_json(r.input);
  j["output"] = metrics_json(r.output);
  auto ratio = [](std::size_t out, std::size_t in) {
    return in == 0 ? nlohmann::json(nullptr) : nlohmann::json(double(out) / double(in));
  };
  j["ratio_2q"] = ratio(r.output.two_qubit_gates, r.input.two_qubit_gates);
  j["ratio_depth"] = ratio(r.output.two_qubit_depth, r.input.two_qubit_depth);
  nlohmann::json qubits = nlohmann::json::array();
  for (const UnitID& q : r.circuit.qubits()) qubits.push_back(q.repr());
  j["qubits"] = qubits;
  j["permutation"] = r.permutation;
  if (r.initial_map) j["initial_map"] = map_json(*r.initial_map);
  if (r.final_map) j["final_map"] = map_json(*r.final_map);
  j["swaps"] = r.swaps;
  j["bridges"] = r.bridges;
  if (!reproducible) j["seconds"] = r.seconds;
  return j;
}

ReportLayout layout_from_report(const nlohmann::json& report) {
  ReportLayout l;
  try {
    if (report.contains("initial_map")) {
      std::map<UnitID, unsigned> m;
      for (const auto& [k, v] : report.at("initial_map").items()) m[UnitID::parse(k)] = v.get<unsigned>();
      l.initial_map = std::move(m);
    }
    if (report.contains("permutation"))
      l.permutation = report.at("permutation").get<std::vector<unsigned>>();
    if (report.contains("qubits")) {
      std::vector<UnitID> qs;
      for (const auto& q : report.at("qubits")) qs.push_back(UnitID::parse(q.get<std::string>()));
      l.qubits = std::move(qs);
    }
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, std::string("malformed report: ") + e.what());
  }
  return l;
}

Circuit restrict_qubits(const Circuit& c, const std::vector<UnitID>& qubits) {
  Circuit out;
  for (const UnitID& q : qubits) {
    if (!c.qubit_index(q)) fail(ErrorCode::UnknownUnit, "circuit has no qubit " + q.repr());
    out.add_qubit(q);
  }
  for (const UnitID& b : c.bits()) out.add_bit(b);
  for (const Command& cmd : c.commands()) {
    for (const UnitID& q : cmd.qubits)
      if (!out.qubit_index(q)) fail(ErrorCode::UnknownUnit, q.repr() + " is used but not in the layout");
    out.add_op(cmd.op, cmd.qubits, cmd.bits);
  }
  std::map<UnitID, UnitID> perm;
  for (const auto& [a, b] : c.implicit_permutation()) {
    if (a == b) continue;
    if (!out.qubit_index(a) || !out.qubit_index(b))
      fail(ErrorCode::UnknownUnit, "implicit permutation leaves the layout at " + a.repr());
    perm[a] = b;
  }
  if (!perm.empty()) out.permute_outputs(perm);
  out.set_phase(c.global_phase());
  return out;
}

}  // namespace qcc

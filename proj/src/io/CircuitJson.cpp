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

#include "io/CircuitJson.hpp"

#include <fstream>
#include <sstream>

#include "io/Qasm.hpp"
#include "ir/Errors.hpp"

namespace qcc {

using nlohmann::json;

json circuit_to_json(const Circuit& c) {
  json j;
  j["format_version"] = 1;
  j["qubits"] = json::array();
  for (const UnitID& q : c.qubits()) j["qubits"].push_back(q.repr());
  j["bits"] = json::array();
  for (const UnitID& b : c.bits()) j["bits"].push_back(b.repr());
  j["gates"] = json::array();
  for (const Command& cmd : c.commands()) {
    json g;
    g["op"] = std::string(op_info(cmd.op.type()).name);
    g["params"] = json::array();
    for (const Angle& a : cmd.op.params()) g["params"].push_back(a.to_string());
    g["qubits"] = json::array();
    for (const UnitID& q : cmd.qubits) g["qubits"].push_back(q.repr());
    g["bits"] = json::array();
    for (const UnitID& b : cmd.bits) g["bits"].push_back(b.repr());
    if (cmd.op.type() == OpType::PauliExpBox) g["pauli"] = pauli_string(cmd.op.paulis());
    if (cmd.op.type() == OpType::CircBox) g["circuit"] = circuit_to_json(*cmd.op.box_circuit());
    j["gates"].push_back(std::move(g));
  }
  j["implicit_permutation"] = json::array();
  for (const auto& [a, b] : c.implicit_permutation()) {
    j["implicit_permutation"].push_back({a.repr(), b.repr()});
  }
  if (c.global_phase() != Angle()) j["global_phase"] = c.global_phase().to_string();
  return j;
}

Circuit circuit_from_json(const json& j) {
  try {
    if (j.value("format_version", 0) != 1) {
      fail(ErrorCode::InvalidArgument, "unsupported circuit format_version");
    }
    Circuit c;
    for (const auto& q : j.at("qubits")) c.add_qubit(UnitID::parse(q.get<std::string>()));
    if (j.contains("bits"))
      for (const auto& b : j.at("bits")) c.add_bit(UnitID::parse(b.get<std::string>()));
    for (const auto& g : j.at("gates")) {
      std::string tag = g.at("op").get<std::string>();
      auto type = op_type_from_name(tag);
      if (!type || is_boundary(*type)) fail(ErrorCode::InvalidArgument, "unknown op " + tag);
      std::vector<Angle> params;
      if (g.contains("params"))
        for (const auto& p : g.at("params")) params.push_back(Angle::parse(p.get<std::string>()));
      std::vector<UnitID> qs, bs;
      for (const auto& q : g.at("qubits")) qs.push_back(UnitID::parse(q.get<std::string>()));
      if (g.contains("bits"))
        for (const auto& b : g.at("bits")) bs.push_back(UnitID::parse(b.get<std::string>()));
      Op op;
      if (*type == OpType::Barrier) {
        op = Op::barrier(static_cast<unsigned>(qs.size()));
      } else if (*type == OpType::PauliExpBox) {
        if (params.size() != 1) fail(ErrorCode::ArityMismatch, "PauliExpBox takes one angle");
        op = Op::pauli_exp_box(parse_pauli_string(g.at("pauli").get<std::string>()), params[0]);
      } else if (*type == OpType::CircBox) {
        op = Op::circ_box(std::make_shared<const Circuit>(circuit_from_json(g.at("circuit"))));
      } else {
        op = Op(*type, params);
      }
      c.add_op(op, qs, bs);
    }
    if (j.contains("implicit_permutation")) {
      std::map<UnitID, UnitID> perm;
      for (const auto& pair : j.at("implicit_permutation")) {
        UnitID a = UnitID::parse(pair.at(0).get<std::string>());
        UnitID b = UnitID::parse(pair.at(1).get<std::string>());
        if (a != b) perm[a] = b;
      }
      if (!perm.empty()) c.permute_outputs(perm);
    }
    if (j.contains("global_phase")) c.set_phase(Angle::parse(j.at("global_phase").get<std::string>()));
    return c;
  } catch (const json::exception& e) {
    fail(ErrorCode::InvalidArgument, std::string("malformed circuit JSON: ") + e.what());
  }
}

std::string emit_circuit_json(const Circuit& c) { return circuit_to_json(c).dump(2) + "\n"; }

Circuit parse_circuit_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), 0, static_cast<unsigned>(e.byte));
  }
  return circuit_from_json(j);
}

Circuit load_circuit_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Io, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") return parse_circuit_json(ss.str());
  return parse_qasm(ss.str());
}

}  // namespace qcc

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

#include "peephole/Transforms.hpp"

namespace qcc {

namespace {

bool is_z_type(OpType t) {
  switch (t) {
    case OpType::Z:
    case OpType::S:
    case OpType::Sdg:
    case OpType::T:
    case OpType::Tdg:
    case OpType::Rz:
    case OpType::U1:
      return true;
    default:
      return false;
  }
}

bool is_x_type(OpType t) { return t == OpType::X || t == OpType::Rx; }

bool commutes_on_port(OpType gate, unsigned port, OpType multi) {
  if (is_z_type(gate)) {
    switch (multi) {
      case OpType::CX:
      case OpType::Bridge:
        return port == 0;
      case OpType::CZ:
      case OpType::CRz:
        return true;
      case OpType::CCX:
        return port < 2;
      default:
        return false;
    }
  }
  if (is_x_type(gate)) {
    switch (multi) {
      case OpType::CX: return port == 1;
      case OpType::Bridge: return port == 2;
      case OpType::CCX: return port == 2;
      default: return false;
    }
  }
  return false;
}

}  // namespace

bool commute_through_multis(Circuit& c) {
  bool changed = false;
  bool moved = true;
  while (moved) {
    moved = false;
    for (VertexId v : c.gate_vertices()) {
      const Vertex& vx = c.vertex(v);
      if (!vx.alive || vx.in.size() != 1) continue;
      OpType t = vx.op.type();
      if (!is_z_type(t) && !is_x_type(t)) continue;
      PortRef src = vx.in[0];
      const Op& pred = c.op(src.vertex);
      if (!commutes_on_port(t, src.port, pred.type())) continue;
      Op op = vx.op;
      c.remove_vertex(v);
      c.insert_before(op, {PortRef{src.vertex, src.port}});
      moved = changed = true;
    }
  }
  if (changed) c.compact();
  return changed;
}

}  // namespace qcc

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

#include "peephole/Rebase.hpp"

#include "ir/Errors.hpp"
#include "peephole/Util.hpp"
#include "sim/GateMatrix.hpp"

namespace qcc {

namespace {

const Rational kHalf(1, 2);

using GateSeq = std::vector<Gate>;

void push(GateSeq& out, OpType t, std::vector<unsigned> qs, std::vector<Angle> params = {}) {
  out.push_back(Gate{Op(t, std::move(params)), std::move(qs), {}, true});
}

// Entangling and multi-qubit gates in terms of CX and single-qubit gates.
GateSeq expand_multi(const Gate& g) {
  GateSeq out;
  const auto& q = g.qubits;
  switch (g.op.type()) {
    case OpType::CZ:
      push(out, OpType::H, {q[1]});
      push(out, OpType::CX, {q[0], q[1]});
      push(out, OpType::H, {q[1]});
      break;
    case OpType::SWAP:
      push(out, OpType::CX, {q[0], q[1]});
      push(out, OpType::CX, {q[1], q[0]});
      push(out, OpType::CX, {q[0], q[1]});
      break;
    case OpType::Bridge:
      push(out, OpType::CX, {q[0], q[1]});
      push(out, OpType::CX, {q[1], q[2]});
      push(out, OpType::CX, {q[0], q[1]});
      push(out, OpType::CX, {q[1], q[2]});
      break;
    case OpType::CRz: {
      Angle half = g.op.param(0) * kHalf;
      push(out, OpType::Rz, {q[1]}, {half});
      push(out, OpType::CX, {q[0], q[1]});
      push(out, OpType::Rz, {q[1]}, {-half});
      push(out, OpType::CX, {q[0], q[1]});
      break;
    }
    case OpType::CCX: {
      unsigned a = q[0], b = q[1], t = q[2];
      push(out, OpType::H, {t});
      push(out, OpType::CX, {b, t});
      push(out, OpType::Tdg, {t});
      push(out, OpType::CX, {a, t});
      push(out, OpType::T, {t});
      push(out, OpType::CX, {b, t});
      push(out, OpType::Tdg, {t});
      push(out, OpType::CX, {a, t});
      push(out, OpType::T, {b});
      push(out, OpType::T, {t});
      push(out, OpType::H, {t});
      push(out, OpType::CX, {a, b});
      push(out, OpType::T, {a});
      push(out, OpType::Tdg, {b});
      push(out, OpType::CX, {a, b});
      break;
    }
    default:
      fail(ErrorCode::UnsupportedGate, "cannot rebase " + g.op.to_string());
  }
  return out;
}

// Symbolic single-qubit gates, written with exact formulas. Returns the
// replacement in terms of Rz/Rx (zxz), U1/U3 (u) or Rz/PhasedX.
GateSeq symbolic_1q(const Gate& g, EulerBasis basis, Angle& phase) {
  GateSeq out;
  unsigned q = g.qubits[0];
  const Op& op = g.op;
  auto P = [&](unsigned i) { return op.param(i); };
  if (basis == EulerBasis::U) {
    switch (op.type()) {
      case OpType::Rx: push(out, OpType::U3, {q}, {P(0), Angle(-kHalf), Angle(kHalf)}); break;
      case OpType::Ry: push(out, OpType::U3, {q}, {P(0), Angle(), Angle()}); break;
      case OpType::Rz:
        push(out, OpType::U1, {q}, {P(0)});
        phase += -(P(0) * kHalf);
        break;
      case OpType::PhasedX:
        push(out, OpType::U3, {q}, {P(0), P(1) - Angle(kHalf), Angle(kHalf) - P(1)});
        break;
      default:
        fail(ErrorCode::UnsupportedGate, "cannot rebase " + op.to_string());
    }
    return out;
  }
  GateSeq zx;
  switch (op.type()) {
    case OpType::Rz:
    case OpType::Rx:
      zx.push_back(g);
      break;
    case OpType::Ry:
      push(zx, OpType::Rz, {q}, {Angle(-kHalf)});
      push(zx, OpType::Rx, {q}, {P(0)});
      push(zx, OpType::Rz, {q}, {Angle(kHalf)});
      break;
    case OpType::U1:
      push(zx, OpType::Rz, {q}, {P(0)});
      phase += P(0) * kHalf;
      break;
    case OpType::U2:
    case OpType::U3: {
      Angle theta = op.type() == OpType::U2 ? Angle(kHalf) : P(0);
      Angle phi = op.type() == OpType::U2 ? P(0) : P(1);
      Angle lam = op.type() == OpType::U2 ? P(1) : P(2);
      push(zx, OpType::Rz, {q}, {lam - Angle(kHalf)});
      push(zx, OpType::Rx, {q}, {theta});
      push(zx, OpType::Rz, {q}, {phi + Angle(kHalf)});
      phase += (phi + lam) * kHalf;
      break;
    }
    case OpType::PhasedX:
      push(zx, OpType::Rz, {q}, {-P(1)});
      push(zx, OpType::Rx, {q}, {P(0)});
      push(zx, OpType::Rz, {q}, {P(1)});
      break;
    default:
      fail(ErrorCode::UnsupportedGate, "cannot rebase " + op.to_string());
  }
  if (basis == EulerBasis::ZYZ) {
    for (const Gate& z : zx) {
      if (z.op.type() == OpType::Rx) {
        // Rx(t) = Rz(1/2) Ry(t) Rz(-1/2)
        push(out, OpType::Rz, {q}, {Angle(kHalf)});
        push(out, OpType::Ry, {q}, {z.op.param(0)});
        push(out, OpType::Rz, {q}, {Angle(-kHalf)});
      } else {
        out.push_back(z);
      }
    }
    return out;
  }
  if (basis == EulerBasis::PhasedX) {
    for (const Gate& z : zx) {
      if (z.op.type() == OpType::Rx)
        push(out, OpType::PhasedX, {q}, {z.op.param(0), Angle()});
      else
        out.push_back(z);
    }
    return out;
  }
  return zx;
}

void rebase_1q(const Gate& g, const Target& target, GateSeq& out, Angle& phase) {
  if (target.gates.contains(g.op.type())) {
    out.push_back(g);
    return;
  }
  if (g.op.is_symbolic()) {
    for (Gate& s : symbolic_1q(g, target.basis, phase)) {
      if (!target.gates.contains(s.op.type()))
        fail(ErrorCode::Internal, "symbolic rebase produced " + s.op.to_string());
      out.push_back(std::move(s));
    }
    return;
  }
  Circuit e = euler_circuit(Matrix2(gate_matrix(g.op)), target.basis);
  for (const Command& cmd : e.commands()) out.push_back(Gate{cmd.op, g.qubits, {}, true});
  phase += e.global_phase();
}

void rebase_gate(const Gate& g, const Target& target, GateSeq& out, Angle& phase) {
  OpType t = g.op.type();
  if (t == OpType::Measure || t == OpType::Barrier || target.gates.contains(t)) {
    out.push_back(g);
    return;
  }
  if (is_box(t)) fail(ErrorCode::BoxesPresent, "decompose boxes before rebasing");
  if (g.qubits.size() == 1) {
    rebase_1q(g, target, out, phase);
    return;
  }
  if (t == OpType::CX) {
    // CX = H(t) CZ H(t)
    GateSeq seq;
    push(seq, OpType::H, {g.qubits[1]});
    push(seq, OpType::CZ, {g.qubits[0], g.qubits[1]});
    push(seq, OpType::H, {g.qubits[1]});
    for (const Gate& s : seq) rebase_gate(s, target, out, phase);
    return;
  }
  for (const Gate& s : expand_multi(g)) rebase_gate(s, target, out, phase);
}

Target make_target(std::string name, GateSet gates, OpType ent, EulerBasis basis) {
  return Target{std::move(name), std::move(gates), ent, basis};
}

}  // namespace

std::optional<Target> target_from_name(const std::string& name) {
  if (name == "cx-u")
    return make_target(name, {OpType::CX, OpType::U1, OpType::U2, OpType::U3}, OpType::CX,
                       EulerBasis::U);
  if (name == "cz-rxrz")
    return make_target(name, {OpType::CZ, OpType::Rz, OpType::Rx}, OpType::CZ, EulerBasis::ZXZ);
  if (name == "cx-rzrx")
    return make_target(name, {OpType::CX, OpType::Rz, OpType::Rx, OpType::H}, OpType::CX,
                       EulerBasis::ZXZ);
  if (name == "cz-phasedx")
    return make_target(name, {OpType::CZ, OpType::PhasedX, OpType::Rz}, OpType::CZ,
                       EulerBasis::PhasedX);
  if (name == "cx,rz,rx" || name == "internal") return internal_target();
  return std::nullopt;
}

std::vector<std::string> target_names() { return {"cx-u", "cz-rxrz", "cx-rzrx", "cz-phasedx"}; }

const Target& internal_target() {
  static const Target t =
      make_target("cx,rz,rx", {OpType::CX, OpType::Rz, OpType::Rx}, OpType::CX, EulerBasis::ZXZ);
  return t;
}

bool rebase(Circuit& c, const Target& target) {
  std::vector<Gate> gates = gate_list(c);
  bool changed = false;
  GateSeq out;
  Angle phase;
  for (const Gate& g : gates) {
    std::size_t before = out.size();
    rebase_gate(g, target, out, phase);
    if (out.size() != before + 1 || !(out.back().op == g.op)) changed = true;
  }
  if (!changed) return false;
  c = rebuild(c, out, phase);
  return true;
}

}  // namespace qcc

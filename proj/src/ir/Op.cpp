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

#include "ir/Op.hpp"

#include <array>

#include "ir/Circuit.hpp"
#include "ir/Errors.hpp"

namespace qcc {

namespace {

constexpr std::array<OpInfo, 29> kInfo = {{
    {"X", "x", 1, 0, 0},
    {"Y", "y", 1, 0, 0},
    {"Z", "z", 1, 0, 0},
    {"H", "h", 1, 0, 0},
    {"S", "s", 1, 0, 0},
    {"Sdg", "sdg", 1, 0, 0},
    {"T", "t", 1, 0, 0},
    {"Tdg", "tdg", 1, 0, 0},
    {"Rx", "rx", 1, 0, 1},
    {"Ry", "ry", 1, 0, 1},
    {"Rz", "rz", 1, 0, 1},
    {"U1", "u1", 1, 0, 1},
    {"U2", "u2", 1, 0, 2},
    {"U3", "u3", 1, 0, 3},
    {"PhasedX", "", 1, 0, 2},
    {"CX", "cx", 2, 0, 0},
    {"CZ", "cz", 2, 0, 0},
    {"SWAP", "swap", 2, 0, 0},
    {"CCX", "ccx", 3, 0, 0},
    {"CRz", "crz", 2, 0, 1},
    {"Bridge", "", 3, 0, 0},
    {"Measure", "measure", 1, 1, 0},
    {"Barrier", "barrier", 0, 0, 0},
    {"CircBox", "", 0, 0, 0},
    {"PauliExpBox", "", 0, 0, 1},
    {"Input", "", 0, 0, 0},
    {"Output", "", 0, 0, 0},
    {"ClInput", "", 0, 0, 0},
    {"ClOutput", "", 0, 0, 0},
}};

}  // namespace

char pauli_char(Pauli p) {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
  }
  return '?';
}

std::vector<Pauli> parse_pauli_string(std::string_view s) {
  std::vector<Pauli> out;
  for (char c : s) {
    switch (c) {
      case 'I': out.push_back(Pauli::I); break;
      case 'X': out.push_back(Pauli::X); break;
      case 'Y': out.push_back(Pauli::Y); break;
      case 'Z': out.push_back(Pauli::Z); break;
      default:
        fail(ErrorCode::InvalidArgument, "bad Pauli letter in '" + std::string(s) + "'");
    }
  }
  return out;
}

std::string pauli_string(const std::vector<Pauli>& s) {
  std::string out;
  for (Pauli p : s) out += pauli_char(p);
  return out;
}

const OpInfo& op_info(OpType type) { return kInfo.at(static_cast<std::size_t>(type)); }

std::optional<OpType> op_type_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kInfo.size(); ++i) {
    if (kInfo[i].name == name) return static_cast<OpType>(i);
  }
  return std::nullopt;
}

bool is_boundary(OpType t) {
  return t == OpType::Input || t == OpType::Output || t == OpType::ClInput ||
         t == OpType::ClOutput;
}

bool is_box(OpType t) { return t == OpType::CircBox || t == OpType::PauliExpBox; }

bool is_gate(OpType t) {
  return !is_boundary(t) && !is_box(t) && t != OpType::Measure && t != OpType::Barrier;
}

bool is_diagonal(OpType t) {
  switch (t) {
    case OpType::Z:
    case OpType::S:
    case OpType::Sdg:
    case OpType::T:
    case OpType::Tdg:
    case OpType::Rz:
    case OpType::U1:
    case OpType::CZ:
    case OpType::CRz:
      return true;
    default:
      return false;
  }
}

Op::Op(OpType type, std::vector<Angle> params) : type_(type), params_(std::move(params)) {
  const OpInfo& info = op_info(type);
  if (type == OpType::Barrier || qcc::is_box(type)) {
    fail(ErrorCode::InvalidArgument, "use the dedicated constructor for " + std::string(info.name));
  }
  if (params_.size() != info.n_params) {
    fail(
        ErrorCode::ArityMismatch, std::string(info.name) + " takes " +
                                      std::to_string(info.n_params) + " parameters, got " +
                                      std::to_string(params_.size()));
  }
  n_qubits_ = info.n_qubits;
  n_bits_ = info.n_bits;
}

Op Op::barrier(unsigned n_qubits) {
  Op op;
  op.type_ = OpType::Barrier;
  op.n_qubits_ = n_qubits;
  return op;
}

Op Op::circ_box(std::shared_ptr<const Circuit> body) {
  Op op;
  op.type_ = OpType::CircBox;
  op.n_qubits_ = body->n_qubits();
  op.n_bits_ = body->n_bits();
  op.box_ = std::move(body);
  return op;
}

Op Op::pauli_exp_box(std::vector<Pauli> paulis, Angle angle) {
  if (paulis.empty()) fail(ErrorCode::InvalidArgument, "empty Pauli string");
  Op op;
  op.type_ = OpType::PauliExpBox;
  op.n_qubits_ = static_cast<unsigned>(paulis.size());
  op.paulis_ = std::move(paulis);
  op.params_ = {std::move(angle)};
  return op;
}

bool Op::is_symbolic() const {
  for (const Angle& a : params_)
    if (a.is_symbolic()) return true;
  if (box_ && box_->is_symbolic()) return true;
  return false;
}

bool Op::is_clifford() const {
  switch (type_) {
    case OpType::X:
    case OpType::Y:
    case OpType::Z:
    case OpType::H:
    case OpType::S:
    case OpType::Sdg:
    case OpType::CX:
    case OpType::CZ:
    case OpType::SWAP:
      return true;
    case OpType::Rx:
    case OpType::Ry:
    case OpType::Rz:
    case OpType::U1:
      return params_[0].is_clifford();
    default:
      return false;
  }
}

bool Op::is_identity() const {
  switch (type_) {
    case OpType::Rx:
    case OpType::Ry:
    case OpType::Rz:
    case OpType::U1:
      return params_[0].is_zero_mod(2);
    case OpType::CRz:
      return params_[0].is_zero_mod(4);
    case OpType::PhasedX:
      return params_[0].is_zero_mod(2);
    case OpType::U3:
      return params_[0].is_zero_mod(2) && (params_[1] + params_[2]).is_zero_mod(2);
    default:
      return false;
  }
}

Op Op::dagger() const {
  switch (type_) {
    case OpType::X:
    case OpType::Y:
    case OpType::Z:
    case OpType::H:
    case OpType::CX:
    case OpType::CZ:
    case OpType::SWAP:
    case OpType::CCX:
    case OpType::Bridge:
      return *this;
    case OpType::S: return Op(OpType::Sdg);
    case OpType::Sdg: return Op(OpType::S);
    case OpType::T: return Op(OpType::Tdg);
    case OpType::Tdg: return Op(OpType::T);
    case OpType::Rx:
    case OpType::Ry:
    case OpType::Rz:
    case OpType::U1:
    case OpType::CRz:
      return Op(type_, {-params_[0]});
    case OpType::U2:
      return Op(OpType::U3, {Angle(Rational(-1, 2)), -params_[1], -params_[0]});
    case OpType::U3:
      return Op(OpType::U3, {-params_[0], -params_[2], -params_[1]});
    case OpType::PhasedX:
      return Op(OpType::PhasedX, {-params_[0], params_[1]});
    case OpType::PauliExpBox:
      return pauli_exp_box(paulis_, -params_[0]);
    case OpType::CircBox:
      return circ_box(std::make_shared<const Circuit>(box_->dagger()));
    default:
      fail(ErrorCode::InvalidArgument, "no inverse for " + std::string(op_info(type_).name));
  }
}

std::string Op::to_string() const {
  std::string out(op_info(type_).name);
  if (type_ == OpType::PauliExpBox) out += "[" + pauli_string(paulis_) + "]";
  if (!params_.empty()) {
    out += "(";
    for (std::size_t i = 0; i < params_.size(); ++i) {
      if (i) out += ", ";
      out += params_[i].to_string();
    }
    out += ")";
  }
  return out;
}

Op Op::substitute(const std::map<std::string, Angle>& bindings) const {
  Op op = *this;
  for (Angle& a : op.params_) a = a.substitute(bindings);
  if (box_) op.box_ = std::make_shared<const Circuit>(box_->substitute(bindings));
  return op;
}

bool Op::operator==(const Op& o) const {
  if (type_ != o.type_ || params_ != o.params_ || n_qubits_ != o.n_qubits_ ||
      n_bits_ != o.n_bits_ || paulis_ != o.paulis_)
    return false;
  if (box_ == o.box_) return true;
  if (!box_ || !o.box_) return false;
  return box_->commands_equal(*o.box_);
}

}  // namespace qcc

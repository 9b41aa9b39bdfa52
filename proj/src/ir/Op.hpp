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

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ir/Angle.hpp"

namespace qcc {

class Circuit;

enum class OpType {
  X, Y, Z, H, S, Sdg, T, Tdg,
  Rx, Ry, Rz, U1, U2, U3, PhasedX,
  CX, CZ, SWAP, CCX, CRz,
  // Distance-2 CX (control, middle, target) produced by routing.
  Bridge,
  Measure, Barrier,
  CircBox, PauliExpBox,
  Input, Output, ClInput, ClOutput,
};

enum class Pauli { I, X, Y, Z };

char pauli_char(Pauli p);
std::vector<Pauli> parse_pauli_string(std::string_view s);
std::string pauli_string(const std::vector<Pauli>& s);

/** Static arity data. n_qubits == 0 means variable (Barrier, boxes). */
struct OpInfo {
  std::string_view name;       // JSON tag, e.g. "CX"
  std::string_view qasm_name;  // empty when not expressible in QASM
  unsigned n_qubits;
  unsigned n_bits;
  unsigned n_params;
};
const OpInfo& op_info(OpType type);
std::optional<OpType> op_type_from_name(std::string_view name);

bool is_boundary(OpType t);
bool is_box(OpType t);
/** Unitary gate (not boundary, measure, barrier, box). */
bool is_gate(OpType t);
/** Diagonal in the computational basis. */
bool is_diagonal(OpType t);

class Op {
 public:
  Op() : type_(OpType::Barrier) {}
  explicit Op(OpType type, std::vector<Angle> params = {});
  static Op barrier(unsigned n_qubits);
  static Op circ_box(std::shared_ptr<const Circuit> body);
  static Op pauli_exp_box(std::vector<Pauli> paulis, Angle angle);

  OpType type() const { return type_; }
  const std::vector<Angle>& params() const { return params_; }
  const Angle& param(unsigned i) const { return params_.at(i); }
  unsigned n_qubits() const { return n_qubits_; }
  unsigned n_bits() const { return n_bits_; }
  unsigned n_ports() const { return n_qubits_ + n_bits_; }

  const std::shared_ptr<const Circuit>& box_circuit() const { return box_; }
  const std::vector<Pauli>& paulis() const { return paulis_; }

  bool is_gate() const { return qcc::is_gate(type_); }
  bool is_box() const { return qcc::is_box(type_); }
  bool is_symbolic() const;
  /** Clifford with exact parameters. */
  bool is_clifford() const;
  /** Numerically the identity (up to global phase). */
  bool is_identity() const;
  /** Inverse gate; only for gates. */
  Op dagger() const;

  std::string to_string() const;
  Op substitute(const std::map<std::string, Angle>& bindings) const;

  bool operator==(const Op& o) const;
  bool operator!=(const Op& o) const { return !(*this == o); }

 private:
  OpType type_;
  std::vector<Angle> params_;
  unsigned n_qubits_ = 0;
  unsigned n_bits_ = 0;
  std::shared_ptr<const Circuit> box_;
  std::vector<Pauli> paulis_;
};

}  // namespace qcc

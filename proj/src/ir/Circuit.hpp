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

#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ir/Op.hpp"

namespace qcc {

/** A named qubit or bit, e.g. q[3]. */
struct UnitID {
  std::string reg;
  unsigned index = 0;

  UnitID() = default;
  UnitID(std::string r, unsigned i) : reg(std::move(r)), index(i) {}

  std::string repr() const { return reg + "[" + std::to_string(index) + "]"; }
  /** Accepts "reg[i]". */
  static UnitID parse(const std::string& s);

  auto operator<=>(const UnitID&) const = default;
  bool operator==(const UnitID&) const = default;
};

using VertexId = std::uint32_t;
constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

/** One end of an edge: a vertex and a port index on it. */
struct PortRef {
  VertexId vertex = kNoVertex;
  unsigned port = 0;
  bool operator==(const PortRef&) const = default;
};

/**
 * Gate vertex with per-port adjacency. Port i of the input side pairs with
 * port i of the output side; quantum ports come before classical ones.
 * Input boundaries only have out[0], output boundaries only have in[0].
 */
struct Vertex {
  Op op;
  std::vector<PortRef> in;
  std::vector<PortRef> out;
  bool alive = true;
};

struct Command {
  Op op;
  std::vector<UnitID> qubits;
  std::vector<UnitID> bits;
  VertexId vertex = kNoVertex;

  bool operator==(const Command& o) const {
    return op == o.op && qubits == o.qubits && bits == o.bits;
  }
};

/**
 * A convex region to be replaced. For each wire through the region, `ins`
 * holds the first region vertex and the in-port the wire enters on, `outs`
 * the last vertex and its out-port. Wires are ordered qubits first.
 */
struct Subcircuit {
  std::vector<PortRef> ins;
  std::vector<PortRef> outs;
  std::vector<VertexId> vertices;
};

using OpFilter = std::function<bool(const Op&)>;

/**
 * Quantum circuit as a ported DAG.
 *
 * Wires are identified by the unit of the input boundary they start from;
 * the output unit a wire reaches defines the implicit permutation.
 */
class Circuit {
 public:
  Circuit() = default;
  /** Qubits q[0..n) and bits c[0..m). */
  explicit Circuit(unsigned n_qubits, unsigned n_bits = 0);

  void add_qubit(const UnitID& id);
  void add_bit(const UnitID& id);
  void add_q_register(const std::string& name, unsigned size);
  void add_c_register(const std::string& name, unsigned size);

  unsigned n_qubits() const { return static_cast<unsigned>(qubits_.size()); }
  unsigned n_bits() const { return static_cast<unsigned>(bits_.size()); }
  const std::vector<UnitID>& qubits() const { return qubits_; }
  const std::vector<UnitID>& bits() const { return bits_; }
  std::optional<unsigned> qubit_index(const UnitID& id) const;
  std::optional<unsigned> bit_index(const UnitID& id) const;

  /** Appends before the output boundaries of the named units. */
  VertexId add_op(const Op& op, const std::vector<UnitID>& qubits,
                  const std::vector<UnitID>& bits = {});
  /** Convenience: units are indices into qubits()/bits(). */
  VertexId add_op(const Op& op, const std::vector<unsigned>& qubits,
                  const std::vector<unsigned>& bits = {});
  VertexId add_op(OpType type, const std::vector<unsigned>& qubits,
                  std::vector<Angle> params = {});
  VertexId add_barrier(const std::vector<unsigned>& qubits);

  // Graph access.
  const Vertex& vertex(VertexId v) const { return vertices_.at(v); }
  const Op& op(VertexId v) const { return vertices_.at(v).op; }
  std::size_t vertex_capacity() const { return vertices_.size(); }
  /** Live non-boundary vertices in id order. */
  std::vector<VertexId> gate_vertices() const;
  VertexId input(unsigned q) const { return q_in_.at(q); }
  VertexId output(unsigned q) const { return q_out_.at(q); }
  VertexId cl_input(unsigned b) const { return c_in_.at(b); }
  VertexId cl_output(unsigned b) const { return c_out_.at(b); }
  bool is_boundary_vertex(VertexId v) const { return is_boundary(op(v).type()); }

  // Mutation.
  void set_op(VertexId v, const Op& op);
  /** Deletes a vertex, joining each in-edge to the matching out-edge. */
  void remove_vertex(VertexId v);
  /** Inserts a vertex so that its port i sits on the edge entering dests[i]. */
  VertexId insert_before(const Op& op, const std::vector<PortRef>& dests);
  /** Replaces a region; replacement unit k attaches to region wire k. */
  void substitute(const Circuit& replacement, const Subcircuit& hole);
  /** Reroutes the wire reaching output unit u so it reaches perm[u]. */
  void permute_outputs(const std::map<UnitID, UnitID>& perm);
  /** Renumbers vertices densely, dropping dead ones. */
  void compact();

  // Whole-circuit operations.
  Circuit dagger() const;
  Circuit substitute(const std::map<std::string, Angle>& bindings) const;
  /** Sequential composition; signatures must match. */
  static Circuit compose(const Circuit& a, const Circuit& b);
  /** Replaces unit names, keeping structure. */
  Circuit rename_units(const std::map<UnitID, UnitID>& qmap) const;

  // Queries.
  std::vector<std::vector<VertexId>> slices() const;
  std::vector<Command> commands() const;
  bool commands_equal(const Circuit& o) const;
  /** For each vertex and port, the index of the wire's starting unit (qubits then bits). */
  std::vector<std::vector<unsigned>> port_units() const;

  std::size_t gate_count() const;
  std::size_t count(const OpFilter& f) const;
  std::size_t count_type(OpType t) const;
  /** CX and CZ count 1; SWAP counts 3 unless swap_as_one. */
  std::size_t two_qubit_gate_count(bool swap_as_one = false) const;
  /** Layer count; optional filter restricts which gates contribute. */
  unsigned depth(const OpFilter& filter = nullptr) const;
  unsigned two_qubit_depth() const;

  std::map<UnitID, UnitID> implicit_permutation() const;
  bool has_implicit_permutation() const;

  bool is_symbolic() const;
  std::set<std::string> symbols() const;
  bool has_boxes() const;

  const Angle& global_phase() const { return phase_; }
  void add_phase(const Angle& a) { phase_ += a; }
  void set_phase(const Angle& a) { phase_ = a; }

  /** Throws Internal on any structural violation. */
  void validate() const;

  std::string to_string() const;

 private:
  VertexId new_vertex(const Op& op, unsigned n_in, unsigned n_out);
  void connect(PortRef src, PortRef dst);
  void check_boxes_absent(const char* what) const;

  std::vector<Vertex> vertices_;
  std::vector<UnitID> qubits_;
  std::vector<UnitID> bits_;
  std::vector<VertexId> q_in_, q_out_, c_in_, c_out_;
  std::map<UnitID, unsigned> qubit_lookup_;
  std::map<UnitID, unsigned> bit_lookup_;
  Angle phase_;
};

}  // namespace qcc

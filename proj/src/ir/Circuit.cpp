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

#include "ir/Circuit.hpp"

#include <algorithm>
#include <sstream>

#include "ir/Errors.hpp"

namespace qcc {

UnitID UnitID::parse(const std::string& s) {
  auto open = s.find('[');
  if (open == std::string::npos || open == 0 || s.back() != ']') {
    fail(ErrorCode::InvalidArgument, "malformed unit id '" + s + "'");
  }
  std::string digits = s.substr(open + 1, s.size() - open - 2);
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
    fail(ErrorCode::InvalidArgument, "malformed unit id '" + s + "'");
  }
  return UnitID(s.substr(0, open), static_cast<unsigned>(std::stoul(digits)));
}

Circuit::Circuit(unsigned n_qubits, unsigned n_bits) {
  add_q_register("q", n_qubits);
  add_c_register("c", n_bits);
}

VertexId Circuit::new_vertex(const Op& op, unsigned n_in, unsigned n_out) {
  Vertex v;
  v.op = op;
  v.in.resize(n_in);
  v.out.resize(n_out);
  vertices_.push_back(std::move(v));
  return static_cast<VertexId>(vertices_.size() - 1);
}

void Circuit::connect(PortRef src, PortRef dst) {
  vertices_[src.vertex].out[src.port] = dst;
  vertices_[dst.vertex].in[dst.port] = src;
}

void Circuit::add_qubit(const UnitID& id) {
  if (qubit_lookup_.count(id) || bit_lookup_.count(id)) {
    fail(ErrorCode::InvalidArgument, "duplicate unit " + id.repr());
  }
  VertexId in = new_vertex(Op(OpType::Input), 0, 1);
  VertexId out = new_vertex(Op(OpType::Output), 1, 0);
  connect({in, 0}, {out, 0});
  qubit_lookup_[id] = n_qubits();
  qubits_.push_back(id);
  q_in_.push_back(in);
  q_out_.push_back(out);
}

void Circuit::add_bit(const UnitID& id) {
  if (qubit_lookup_.count(id) || bit_lookup_.count(id)) {
    fail(ErrorCode::InvalidArgument, "duplicate unit " + id.repr());
  }
  VertexId in = new_vertex(Op(OpType::ClInput), 0, 1);
  VertexId out = new_vertex(Op(OpType::ClOutput), 1, 0);
  connect({in, 0}, {out, 0});
  bit_lookup_[id] = n_bits();
  bits_.push_back(id);
  c_in_.push_back(in);
  c_out_.push_back(out);
}

void Circuit::add_q_register(const std::string& name, unsigned size) {
  for (unsigned i = 0; i < size; ++i) add_qubit(UnitID(name, i));
}

void Circuit::add_c_register(const std::string& name, unsigned size) {
  for (unsigned i = 0; i < size; ++i) add_bit(UnitID(name, i));
}

std::optional<unsigned> Circuit::qubit_index(const UnitID& id) const {
  auto it = qubit_lookup_.find(id);
  if (it == qubit_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<unsigned> Circuit::bit_index(const UnitID& id) const {
  auto it = bit_lookup_.find(id);
  if (it == bit_lookup_.end()) return std::nullopt;
  return it->second;
}

VertexId Circuit::add_op(
    const Op& op, const std::vector<UnitID>& qubits, const std::vector<UnitID>& bits) {
  if (is_boundary(op.type())) fail(ErrorCode::InvalidArgument, "cannot append a boundary");
  if (qubits.size() != op.n_qubits() || bits.size() != op.n_bits()) {
    fail(
        ErrorCode::ArityMismatch, op.to_string() + " expects " + std::to_string(op.n_qubits()) +
                                      " qubits and " + std::to_string(op.n_bits()) + " bits");
  }
  std::vector<PortRef> dests;
  std::set<UnitID> seen;
  for (const UnitID& q : qubits) {
    auto idx = qubit_index(q);
    if (!idx) fail(ErrorCode::UnknownUnit, "unknown qubit " + q.repr());
    if (!seen.insert(q).second) fail(ErrorCode::ArityMismatch, "repeated qubit " + q.repr());
    dests.push_back({q_out_[*idx], 0});
  }
  for (const UnitID& b : bits) {
    auto idx = bit_index(b);
    if (!idx) fail(ErrorCode::UnknownUnit, "unknown bit " + b.repr());
    if (!seen.insert(b).second) fail(ErrorCode::ArityMismatch, "repeated bit " + b.repr());
    dests.push_back({c_out_[*idx], 0});
  }
  return insert_before(op, dests);
}

VertexId Circuit::add_op(
    const Op& op, const std::vector<unsigned>& qubits, const std::vector<unsigned>& bits) {
  std::vector<UnitID> qs, bs;
  for (unsigned q : qubits) {
    if (q >= n_qubits()) fail(ErrorCode::UnknownUnit, "qubit index " + std::to_string(q));
    qs.push_back(qubits_[q]);
  }
  for (unsigned b : bits) {
    if (b >= n_bits()) fail(ErrorCode::UnknownUnit, "bit index " + std::to_string(b));
    bs.push_back(bits_[b]);
  }
  return add_op(op, qs, bs);
}

VertexId Circuit::add_op(OpType type, const std::vector<unsigned>& qubits, std::vector<Angle> params) {
  return add_op(Op(type, std::move(params)), qubits);
}

VertexId Circuit::add_barrier(const std::vector<unsigned>& qubits) {
  return add_op(Op::barrier(static_cast<unsigned>(qubits.size())), qubits);
}

std::vector<VertexId> Circuit::gate_vertices() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < vertices_.size(); ++v) {
    if (vertices_[v].alive && !is_boundary(vertices_[v].op.type())) out.push_back(v);
  }
  return out;
}

void Circuit::set_op(VertexId v, const Op& op) {
  Vertex& vx = vertices_.at(v);
  if (op.n_qubits() != vx.op.n_qubits() || op.n_bits() != vx.op.n_bits()) {
    fail(ErrorCode::ArityMismatch, "set_op arity change");
  }
  vx.op = op;
}

void Circuit::remove_vertex(VertexId v) {
  Vertex& vx = vertices_.at(v);
  if (is_boundary(vx.op.type())) fail(ErrorCode::InvalidArgument, "cannot remove a boundary");
  for (unsigned p = 0; p < vx.in.size(); ++p) {
    PortRef src = vx.in[p];
    PortRef dst = vx.out[p];
    connect(src, dst);
  }
  vx.alive = false;
  vx.in.clear();
  vx.out.clear();
}

VertexId Circuit::insert_before(const Op& op, const std::vector<PortRef>& dests) {
  if (dests.size() != op.n_ports()) fail(ErrorCode::ArityMismatch, "insert_before arity");
  unsigned n = op.n_ports();
  VertexId v = new_vertex(op, n, n);
  for (unsigned i = 0; i < n; ++i) {
    PortRef src = vertices_[dests[i].vertex].in[dests[i].port];
    connect(src, {v, i});
    connect({v, i}, dests[i]);
  }
  return v;
}

void Circuit::substitute(const Circuit& repl, const Subcircuit& hole) {
  std::size_t n_wires = repl.n_qubits() + repl.n_bits();
  if (hole.ins.size() != n_wires || hole.outs.size() != n_wires) {
    fail(ErrorCode::ArityMismatch, "substitute: wire count mismatch");
  }
  std::vector<PortRef> pred(n_wires), succ(n_wires);
  for (std::size_t i = 0; i < n_wires; ++i) {
    pred[i] = vertices_.at(hole.ins[i].vertex).in.at(hole.ins[i].port);
    succ[i] = vertices_.at(hole.outs[i].vertex).out.at(hole.outs[i].port);
  }
  for (VertexId v : hole.vertices) {
    vertices_.at(v).alive = false;
    vertices_[v].in.clear();
    vertices_[v].out.clear();
  }
  std::map<VertexId, std::size_t> repl_inputs, repl_outputs;
  for (unsigned k = 0; k < repl.n_qubits(); ++k) {
    repl_inputs[repl.q_in_[k]] = k;
    repl_outputs[repl.q_out_[k]] = k;
  }
  for (unsigned k = 0; k < repl.n_bits(); ++k) {
    repl_inputs[repl.c_in_[k]] = repl.n_qubits() + k;
    repl_outputs[repl.c_out_[k]] = repl.n_qubits() + k;
  }
  std::map<VertexId, VertexId> mapped;
  for (VertexId r : repl.gate_vertices()) {
    const Vertex& rv = repl.vertices_[r];
    mapped[r] = new_vertex(rv.op, static_cast<unsigned>(rv.in.size()),
                           static_cast<unsigned>(rv.out.size()));
  }
  auto resolve_src = [&](PortRef src) -> PortRef {
    auto it = repl_inputs.find(src.vertex);
    if (it != repl_inputs.end()) return pred[it->second];
    return {mapped.at(src.vertex), src.port};
  };
  for (VertexId r : repl.gate_vertices()) {
    const Vertex& rv = repl.vertices_[r];
    for (unsigned p = 0; p < rv.in.size(); ++p) {
      connect(resolve_src(rv.in[p]), {mapped[r], p});
    }
  }
  for (const auto& [rout, k] : repl_outputs) {
    connect(resolve_src(repl.vertices_[rout].in[0]), succ[k]);
  }
  phase_ += repl.phase_;
}

void Circuit::permute_outputs(const std::map<UnitID, UnitID>& perm) {
  std::set<UnitID> targets;
  std::vector<std::pair<PortRef, VertexId>> moves;
  for (const auto& [from, to] : perm) {
    auto fi = qubit_index(from);
    auto ti = qubit_index(to);
    if (!fi || !ti) fail(ErrorCode::UnknownUnit, "permutation names unknown qubit");
    if (!targets.insert(to).second) fail(ErrorCode::InvalidArgument, "permutation not injective");
    moves.push_back({vertices_[q_out_[*fi]].in[0], q_out_[*ti]});
  }
  for (const UnitID& t : targets) {
    if (!perm.count(t)) fail(ErrorCode::InvalidArgument, "permutation not closed");
  }
  for (const auto& [src, out] : moves) connect(src, {out, 0});
}

void Circuit::compact() {
  std::vector<VertexId> remap(vertices_.size(), kNoVertex);
  std::vector<Vertex> kept;
  for (VertexId v = 0; v < vertices_.size(); ++v) {
    if (vertices_[v].alive) {
      remap[v] = static_cast<VertexId>(kept.size());
      kept.push_back(std::move(vertices_[v]));
    }
  }
  for (Vertex& vx : kept) {
    for (PortRef& p : vx.in) p.vertex = remap[p.vertex];
    for (PortRef& p : vx.out) p.vertex = remap[p.vertex];
  }
  for (auto* list : {&q_in_, &q_out_, &c_in_, &c_out_}) {
    for (VertexId& v : *list) v = remap[v];
  }
  vertices_ = std::move(kept);
}

std::vector<std::vector<unsigned>> Circuit::port_units() const {
  std::vector<std::vector<unsigned>> units(vertices_.size());
  for (VertexId v = 0; v < vertices_.size(); ++v) {
    if (vertices_[v].alive) units[v].assign(vertices_[v].in.size(), 0);
  }
  auto walk = [&](VertexId start, unsigned wire) {
    PortRef cur = vertices_[start].out[0];
    std::size_t guard = 0;
    while (!is_boundary(vertices_[cur.vertex].op.type())) {
      units[cur.vertex][cur.port] = wire;
      cur = vertices_[cur.vertex].out[cur.port];
      if (++guard > vertices_.size() * 4 + 8) fail(ErrorCode::Internal, "wire does not terminate");
    }
  };
  for (unsigned k = 0; k < n_qubits(); ++k) walk(q_in_[k], k);
  for (unsigned k = 0; k < n_bits(); ++k) walk(c_in_[k], n_qubits() + k);
  return units;
}

std::vector<std::vector<VertexId>> Circuit::slices() const {
  auto units = port_units();
  std::vector<unsigned> pending(vertices_.size(), 0);
  std::vector<VertexId> current;
  for (VertexId v : gate_vertices()) {
    for (const PortRef& src : vertices_[v].in) {
      if (!is_boundary(vertices_[src.vertex].op.type())) ++pending[v];
    }
    if (pending[v] == 0) current.push_back(v);
  }
  auto key = [&](VertexId v) {
    return units[v].empty() ? 0u : *std::min_element(units[v].begin(), units[v].end());
  };
  std::vector<std::vector<VertexId>> out;
  while (!current.empty()) {
    std::sort(current.begin(), current.end(), [&](VertexId a, VertexId b) {
      unsigned ka = key(a), kb = key(b);
      return ka != kb ? ka < kb : a < b;
    });
    std::vector<VertexId> next;
    for (VertexId v : current) {
      for (const PortRef& dst : vertices_[v].out) {
        if (is_boundary(vertices_[dst.vertex].op.type())) continue;
        if (--pending[dst.vertex] == 0) next.push_back(dst.vertex);
      }
    }
    out.push_back(std::move(current));
    current = std::move(next);
  }
  return out;
}

std::vector<Command> Circuit::commands() const {
  auto units = port_units();
  std::vector<Command> out;
  for (const auto& slice : slices()) {
    for (VertexId v : slice) {
      Command cmd;
      cmd.op = vertices_[v].op;
      cmd.vertex = v;
      for (unsigned p = 0; p < cmd.op.n_qubits(); ++p) cmd.qubits.push_back(qubits_[units[v][p]]);
      for (unsigned p = cmd.op.n_qubits(); p < cmd.op.n_ports(); ++p) {
        cmd.bits.push_back(bits_[units[v][p] - n_qubits()]);
      }
      out.push_back(std::move(cmd));
    }
  }
  return out;
}

bool Circuit::commands_equal(const Circuit& o) const {
  return qubits_ == o.qubits_ && bits_ == o.bits_ && commands() == o.commands() &&
         implicit_permutation() == o.implicit_permutation();
}

std::size_t Circuit::gate_count() const {
  return count([](const Op& op) { return op.type() != OpType::Barrier; });
}

std::size_t Circuit::count(const OpFilter& f) const {
  std::size_t n = 0;
  for (VertexId v : gate_vertices())
    if (f(vertices_[v].op)) ++n;
  return n;
}

std::size_t Circuit::count_type(OpType t) const {
  return count([t](const Op& op) { return op.type() == t; });
}

void Circuit::check_boxes_absent(const char* what) const {
  if (has_boxes()) fail(ErrorCode::BoxesPresent, std::string(what) + ": decompose boxes first");
}

std::size_t Circuit::two_qubit_gate_count(bool swap_as_one) const {
  check_boxes_absent("two_qubit_gate_count");
  std::size_t n = 0;
  for (VertexId v : gate_vertices()) {
    switch (vertices_[v].op.type()) {
      case OpType::CX:
      case OpType::CZ:
        n += 1;
        break;
      case OpType::SWAP:
        n += swap_as_one ? 1 : 3;
        break;
      // Non-maximal or composite gates count their CX cost.
      case OpType::CRz:
        n += 2;
        break;
      case OpType::Bridge:
        n += 4;
        break;
      case OpType::CCX:
        n += 6;
        break;
      default:
        break;
    }
  }
  return n;
}

unsigned Circuit::depth(const OpFilter& filter) const {
  check_boxes_absent("depth");
  std::vector<unsigned> d(vertices_.size(), 0);
  unsigned best = 0;
  for (const auto& slice : slices()) {
    for (VertexId v : slice) {
      unsigned m = 0;
      for (const PortRef& src : vertices_[v].in) m = std::max(m, d[src.vertex]);
      const Op& op = vertices_[v].op;
      bool counts = op.type() != OpType::Barrier && (!filter || filter(op));
      d[v] = m + (counts ? 1 : 0);
      best = std::max(best, d[v]);
    }
  }
  return best;
}

unsigned Circuit::two_qubit_depth() const {
  return depth([](const Op& op) { return op.is_gate() && op.n_qubits() >= 2; });
}

std::map<UnitID, UnitID> Circuit::implicit_permutation() const {
  std::map<VertexId, unsigned> out_index;
  for (unsigned k = 0; k < n_qubits(); ++k) out_index[q_out_[k]] = k;
  std::map<UnitID, UnitID> perm;
  for (unsigned k = 0; k < n_qubits(); ++k) {
    PortRef cur = vertices_[q_in_[k]].out[0];
    while (!is_boundary(vertices_[cur.vertex].op.type())) {
      cur = vertices_[cur.vertex].out[cur.port];
    }
    perm[qubits_[k]] = qubits_[out_index.at(cur.vertex)];
  }
  return perm;
}

bool Circuit::has_implicit_permutation() const {
  for (const auto& [a, b] : implicit_permutation())
    if (a != b) return true;
  return false;
}

bool Circuit::is_symbolic() const {
  for (VertexId v : gate_vertices())
    if (vertices_[v].op.is_symbolic()) return true;
  return false;
}

std::set<std::string> Circuit::symbols() const {
  std::set<std::string> out;
  for (VertexId v : gate_vertices()) {
    const Op& op = vertices_[v].op;
    for (const Angle& a : op.params()) {
      auto s = a.symbols();
      out.insert(s.begin(), s.end());
    }
    if (op.box_circuit()) {
      auto s = op.box_circuit()->symbols();
      out.insert(s.begin(), s.end());
    }
  }
  return out;
}

bool Circuit::has_boxes() const {
  for (VertexId v : gate_vertices())
    if (vertices_[v].op.is_box()) return true;
  return false;
}

Circuit Circuit::dagger() const {
  Circuit out;
  for (const UnitID& q : qubits_) out.add_qubit(q);
  for (const UnitID& b : bits_) out.add_bit(b);
  auto perm = implicit_permutation();
  std::map<UnitID, UnitID> inverse;
  for (const auto& [a, b] : perm) inverse[b] = a;
  auto cmds = commands();
  for (auto it = cmds.rbegin(); it != cmds.rend(); ++it) {
    if (it->op.type() == OpType::Measure) {
      fail(ErrorCode::NonUnitaryOps, "cannot invert a measurement");
    }
    std::vector<UnitID> qs;
    for (const UnitID& q : it->qubits) qs.push_back(perm.at(q));
    Op op = it->op.type() == OpType::Barrier ? it->op : it->op.dagger();
    out.add_op(op, qs, it->bits);
  }
  out.permute_outputs(inverse);
  out.phase_ = -phase_;
  return out;
}

Circuit Circuit::substitute(const std::map<std::string, Angle>& bindings) const {
  Circuit out = *this;
  for (VertexId v : out.gate_vertices()) {
    out.vertices_[v].op = out.vertices_[v].op.substitute(bindings);
  }
  out.phase_ = phase_.substitute(bindings);
  return out;
}

Circuit Circuit::compose(const Circuit& a, const Circuit& b) {
  if (a.qubits_ != b.qubits_ || a.bits_ != b.bits_) {
    fail(ErrorCode::SignatureMismatch, "compose: register signatures differ");
  }
  Circuit out = a;
  for (const Command& cmd : b.commands()) out.add_op(cmd.op, cmd.qubits, cmd.bits);
  if (b.has_implicit_permutation()) out.permute_outputs(b.implicit_permutation());
  out.phase_ += b.phase_;
  return out;
}

Circuit Circuit::rename_units(const std::map<UnitID, UnitID>& qmap) const {
  auto rn = [&](const UnitID& u) {
    auto it = qmap.find(u);
    return it == qmap.end() ? u : it->second;
  };
  Circuit out;
  for (const UnitID& q : qubits_) out.add_qubit(rn(q));
  for (const UnitID& b : bits_) out.add_bit(b);
  for (const Command& cmd : commands()) {
    std::vector<UnitID> qs;
    for (const UnitID& q : cmd.qubits) qs.push_back(rn(q));
    out.add_op(cmd.op, qs, cmd.bits);
  }
  if (has_implicit_permutation()) {
    std::map<UnitID, UnitID> perm;
    for (const auto& [a, b] : implicit_permutation()) perm[rn(a)] = rn(b);
    out.permute_outputs(perm);
  }
  out.phase_ = phase_;
  return out;
}

void Circuit::validate() const {
  auto bad = [](const std::string& msg) { fail(ErrorCode::Internal, "invalid circuit: " + msg); };
  auto quantum_port = [&](VertexId v, unsigned p) {
    OpType t = vertices_[v].op.type();
    if (t == OpType::Input || t == OpType::Output) return true;
    if (t == OpType::ClInput || t == OpType::ClOutput) return false;
    return p < vertices_[v].op.n_qubits();
  };
  std::size_t live = 0;
  for (VertexId v = 0; v < vertices_.size(); ++v) {
    const Vertex& vx = vertices_[v];
    if (!vx.alive) continue;
    OpType t = vx.op.type();
    if (!is_boundary(t)) {
      ++live;
      if (vx.in.size() != vx.op.n_ports() || vx.out.size() != vx.op.n_ports()) bad("port arity");
    }
    for (unsigned p = 0; p < vx.in.size(); ++p) {
      PortRef src = vx.in[p];
      if (src.vertex >= vertices_.size() || !vertices_[src.vertex].alive) bad("dangling in-edge");
      const Vertex& sv = vertices_[src.vertex];
      if (src.port >= sv.out.size() || !(sv.out[src.port] == PortRef{v, p})) bad("edge mismatch");
      if (quantum_port(src.vertex, src.port) != quantum_port(v, p)) bad("edge kind mismatch");
    }
    for (unsigned p = 0; p < vx.out.size(); ++p) {
      PortRef dst = vx.out[p];
      if (dst.vertex >= vertices_.size() || !vertices_[dst.vertex].alive) bad("dangling out-edge");
      const Vertex& dv = vertices_[dst.vertex];
      if (dst.port >= dv.in.size() || !(dv.in[dst.port] == PortRef{v, p})) bad("edge mismatch");
    }
  }
  std::size_t sliced = 0;
  for (const auto& s : slices()) sliced += s.size();
  if (sliced != live) bad("cycle detected");
  auto perm = implicit_permutation();
  std::set<UnitID> outs;
  for (const auto& [a, b] : perm) outs.insert(b);
  if (outs.size() != perm.size()) bad("paths do not end at distinct outputs");
}

std::string Circuit::to_string() const {
  std::ostringstream os;
  for (const Command& cmd : commands()) {
    os << cmd.op.to_string();
    for (const UnitID& q : cmd.qubits) os << " " << q.repr();
    for (const UnitID& b : cmd.bits) os << " -> " << b.repr();
    os << "\n";
  }
  return os.str();
}

}  // namespace qcc

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

#include "mapping/Routing.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "ir/Errors.hpp"
#include "peephole/Util.hpp"

namespace qcc {

namespace {

struct OutGate {
  Op op;
  std::vector<unsigned> nodes;
  std::vector<unsigned> bits;
};

using Score = std::vector<long>;

class Router {
 public:
  Router(const Circuit& c, const Architecture& arch, unsigned lookahead)
      : c_(c), arch_(arch), lookahead_(lookahead), gates_(gate_list(c)) {
    const unsigned n = c.n_qubits();
    pos_.assign(n, -1);
    init_.assign(n, 0);
    pending_.resize(n);
    qwire_.resize(n);
    bwire_.resize(c.n_bits());
    qhead_.assign(n, 0);
    bhead_.assign(c.n_bits(), 0);
    for (unsigned g = 0; g < gates_.size(); ++g) {
      const Gate& gate = gates_[g];
      if (gate.qubits.size() > 2 && gate.op.type() != OpType::Barrier)
        throw Error(ErrorCode::UnsupportedGate,
                    "routing: " + gate.op.to_string() + " acts on more than two qubits");
      for (unsigned q : gate.qubits) qwire_[q].push_back(g);
      for (unsigned b : gate.bits) bwire_[b].push_back(g);
    }
    done_.assign(gates_.size(), false);
    for (unsigned node : arch.nodes()) origin_[node] = node;
  }

  RoutingResult run(const PlacementMap& initial) {
    for (const auto& [q, node] : initial) {
      if (q >= pos_.size() || !arch_.has_node(node) || occ_.count(node))
        throw Error(ErrorCode::InvalidArgument, "routing: invalid initial placement");
      put(q, node);
    }
    long best = std::numeric_limits<long>::max();
    unsigned stall = 0;
    const unsigned stall_limit = 2 * arch_.n_nodes();
    while (true) {
      if (advance()) {
        best = std::numeric_limits<long>::max();
        stall = 0;
      }
      std::vector<unsigned> s0 = blocked();
      if (s0.empty()) break;
      if (stall >= stall_limit) {
        fallback(s0.front());
        best = std::numeric_limits<long>::max();
        stall = 0;
        continue;
      }
      step(s0);
      long d = 0;
      for (unsigned g : s0) d += dist(g);
      if (d < best) {
        best = d;
        stall = 0;
      } else {
        ++stall;
      }
    }
    for (unsigned q = 0; q < pos_.size(); ++q)
      if (pos_[q] < 0) put(q, free_node(-1));
    return finish();
  }

 private:
  // Front gates that can run are emitted; returns whether anything ran.
  bool advance() {
    bool any = false, changed = true;
    while (changed) {
      changed = false;
      for (unsigned q = 0; q < qwire_.size(); ++q) {
        while (qhead_[q] < qwire_[q].size()) {
          unsigned g = qwire_[q][qhead_[q]];
          if (!is_front(g) || !try_execute(g)) break;
          complete(g);
          changed = any = true;
        }
      }
      for (unsigned b = 0; b < bwire_.size(); ++b) {
        while (bhead_[b] < bwire_[b].size()) {
          unsigned g = bwire_[b][bhead_[b]];
          if (!is_front(g) || !try_execute(g)) break;
          complete(g);
          changed = any = true;
        }
      }
    }
    return any;
  }

  bool is_front(unsigned g) const {
    for (unsigned q : gates_[g].qubits)
      if (qwire_[q][qhead_[q]] != g) return false;
    for (unsigned b : gates_[g].bits)
      if (bwire_[b][bhead_[b]] != g) return false;
    return true;
  }

  void complete(unsigned g) {
    done_[g] = true;
    for (unsigned q : gates_[g].qubits) ++qhead_[q];
    for (unsigned b : gates_[g].bits) ++bhead_[b];
  }

  static bool is_two_qubit(const Gate& g) {
    return g.qubits.size() == 2 && g.op.type() != OpType::Barrier;
  }

  bool try_execute(unsigned g) {
    const Gate& gate = gates_[g];
    if (is_two_qubit(gate)) {
      unsigned a = gate.qubits[0], b = gate.qubits[1];
      if (pos_[a] < 0 && pos_[b] < 0) put(a, free_node(-1));
      if (pos_[a] < 0) put(a, free_node(pos_[b]));
      if (pos_[b] < 0) put(b, free_node(pos_[a]));
      if (!arch_.adjacent(node(a), node(b))) return false;
      emit(gate.op, {node(a), node(b)}, gate.bits);
      return true;
    }
    if (gate.qubits.size() == 1 && gate.bits.empty() && pos_[gate.qubits[0]] < 0) {
      pending_[gate.qubits[0]].push_back(g);
      return true;
    }
    std::vector<unsigned> nodes;
    for (unsigned q : gate.qubits) {
      if (pos_[q] < 0) put(q, free_node(-1));
      nodes.push_back(node(q));
    }
    emit(gate.op, nodes, gate.bits);
    return true;
  }

  std::vector<unsigned> blocked() const {
    std::vector<unsigned> s0;
    for (unsigned q = 0; q < qwire_.size(); ++q) {
      if (qhead_[q] >= qwire_[q].size()) continue;
      unsigned g = qwire_[q][qhead_[q]];
      if (is_two_qubit(gates_[g]) && gates_[g].qubits[0] == q && is_front(g)) s0.push_back(g);
    }
    std::sort(s0.begin(), s0.end());
    return s0;
  }

  // Slices after S0, each a list of qubit pairs.
  std::vector<std::vector<std::pair<unsigned, unsigned>>> lookahead_slices(
      const std::vector<unsigned>& s0) const {
    std::vector<std::vector<std::pair<unsigned, unsigned>>> slices(lookahead_ + 1);
    std::vector<unsigned> layer(pos_.size(), 0);
    std::set<unsigned> in_s0(s0.begin(), s0.end());
    unsigned start = *std::min_element(s0.begin(), s0.end());
    for (unsigned g = start; g < gates_.size(); ++g) {
      if (done_[g] || !is_two_qubit(gates_[g])) continue;
      unsigned a = gates_[g].qubits[0], b = gates_[g].qubits[1];
      unsigned l = in_s0.count(g) ? 0 : std::max(1u, std::max(layer[a], layer[b]));
      layer[a] = layer[b] = l + 1;
      if (l <= lookahead_) slices[l].push_back({a, b});
    }
    return slices;
  }

  Score score(const std::vector<std::vector<std::pair<unsigned, unsigned>>>& slices) const {
    Score s;
    for (const auto& slice : slices) {
      long d = 0;
      for (auto [a, b] : slice)
        if (pos_[a] >= 0 && pos_[b] >= 0) d += arch_.distance(node(a), node(b));
      s.push_back(d);
    }
    return s;
  }

  void swap_positions(unsigned u, unsigned v) {
    auto ou = occ_.find(u), ov = occ_.find(v);
    int qu = ou == occ_.end() ? -1 : static_cast<int>(ou->second);
    int qv = ov == occ_.end() ? -1 : static_cast<int>(ov->second);
    occ_.erase(u);
    occ_.erase(v);
    if (qu >= 0) {
      pos_[qu] = static_cast<int>(v);
      occ_[v] = static_cast<unsigned>(qu);
    }
    if (qv >= 0) {
      pos_[qv] = static_cast<int>(u);
      occ_[u] = static_cast<unsigned>(qv);
    }
  }

  void step(const std::vector<unsigned>& s0) {
    auto slices = lookahead_slices(s0);
    std::set<unsigned> active;
    for (unsigned g : s0) active.insert(gates_[g].qubits.begin(), gates_[g].qubits.end());
    std::optional<Edge> best_edge;
    Score best;
    for (const Edge& e : arch_.edges()) {
      auto ou = occ_.find(e.first), ov = occ_.find(e.second);
      bool touches = (ou != occ_.end() && active.count(ou->second)) ||
                     (ov != occ_.end() && active.count(ov->second));
      if (!touches) continue;
      swap_positions(e.first, e.second);
      Score s = score(slices);
      swap_positions(e.first, e.second);
      if (!best_edge || s < best) {
        best = s;
        best_edge = e;
      }
    }
    auto [u, v] = *best_edge;
    // A CX at distance two touched by the chosen swap may run as a Bridge.
    std::set<unsigned> moved;
    if (occ_.count(u)) moved.insert(occ_.at(u));
    if (occ_.count(v)) moved.insert(occ_.at(v));
    for (unsigned g : s0) {
      const Gate& gate = gates_[g];
      if (gate.op.type() != OpType::CX || dist(g) != 2) continue;
      if (!moved.count(gate.qubits[0]) && !moved.count(gate.qubits[1])) continue;
      auto without = slices;
      auto& first = without[0];
      first.erase(std::find(first.begin(), first.end(),
                            std::pair<unsigned, unsigned>{gate.qubits[0], gate.qubits[1]}));
      Score keep = score(without);
      swap_positions(u, v);
      Score moved_score = score(without);
      swap_positions(u, v);
      if (keep <= moved_score) {
        unsigned c = node(gate.qubits[0]), t = node(gate.qubits[1]);
        unsigned mid = arch_.shortest_path(c, t)[1];
        emit(Op(OpType::Bridge), {c, mid, t}, {});
        ++bridges_;
        complete(g);
        return;
      }
      break;
    }
    emit_swap(u, v);
  }

  void emit_swap(unsigned u, unsigned v) {
    emit(Op(OpType::SWAP), {u, v}, {});
    ++swaps_;
    swap_positions(u, v);
    std::swap(origin_[u], origin_[v]);
  }

  void fallback(unsigned g) {
    unsigned a = gates_[g].qubits[0], b = gates_[g].qubits[1];
    std::vector<unsigned> path = arch_.shortest_path(node(a), node(b));
    for (std::size_t i = 0; i + 2 < path.size(); ++i) emit_swap(path[i], path[i + 1]);
  }

  long dist(unsigned g) const {
    return arch_.distance(node(gates_[g].qubits[0]), node(gates_[g].qubits[1]));
  }

  unsigned node(unsigned q) const { return static_cast<unsigned>(pos_[q]); }

  // Free node nearest `near`, or of highest degree when near < 0.
  unsigned free_node(int near) const {
    std::optional<unsigned> best;
    for (unsigned n : arch_.nodes()) {
      if (occ_.count(n)) continue;
      if (!best) {
        best = n;
        continue;
      }
      if (near >= 0) {
        if (arch_.distance(n, near) < arch_.distance(*best, near)) best = n;
      } else if (arch_.degree(n) > arch_.degree(*best)) {
        best = n;
      }
    }
    if (!best) throw Error(ErrorCode::TooManyQubits, "routing: no free node");
    return *best;
  }

  void put(unsigned q, unsigned n) {
    pos_[q] = static_cast<int>(n);
    occ_[n] = q;
    init_[q] = origin_.at(n);
    for (unsigned g : pending_[q]) emit(gates_[g].op, {n}, {});
    pending_[q].clear();
  }

  void emit(const Op& op, std::vector<unsigned> nodes, const std::vector<unsigned>& bits) {
    for (unsigned n : nodes) used_.insert(n);
    out_.push_back({op, std::move(nodes), bits});
  }

  RoutingResult finish() {
    for (int p : pos_) used_.insert(static_cast<unsigned>(p));
    for (unsigned q = 0; q < init_.size(); ++q) used_.insert(init_[q]);
    std::vector<unsigned> nodes(used_.begin(), used_.end());
    std::map<unsigned, unsigned> index;
    for (unsigned i = 0; i < nodes.size(); ++i) index[nodes[i]] = i;

    RoutingResult r;
    for (unsigned n : nodes) r.circuit.add_qubit(Architecture::node_unit(n));
    for (const UnitID& b : c_.bits()) r.circuit.add_bit(b);
    for (const OutGate& g : out_) {
      std::vector<unsigned> qs;
      for (unsigned n : g.nodes) qs.push_back(index.at(n));
      r.circuit.add_op(g.op, qs, g.bits);
    }
    r.circuit.set_phase(c_.global_phase());
    r.swaps = swaps_;
    r.bridges = bridges_;

    std::map<UnitID, UnitID> implicit = c_.implicit_permutation();
    std::map<UnitID, unsigned> in_index;
    for (unsigned q = 0; q < c_.n_qubits(); ++q) in_index[c_.qubits()[q]] = q;

    // Where the content that started on each node ends up.
    std::map<unsigned, unsigned> dest;
    for (const auto& [n, o] : origin_) dest[o] = n;
    r.permutation.resize(nodes.size());
    for (unsigned i = 0; i < nodes.size(); ++i) r.permutation[i] = index.at(dest.at(nodes[i]));
    for (unsigned q = 0; q < c_.n_qubits(); ++q) {
      const UnitID& in = c_.qubits()[q];
      auto it = implicit.find(in);
      const UnitID& out = it == implicit.end() ? in : it->second;
      unsigned q_out = in_index.at(out);
      r.initial_map[in] = init_[q];
      r.final_map[out] = node(q);
      r.permutation[index.at(init_[q_out])] = index.at(node(q));
    }
    return r;
  }

  const Circuit& c_;
  const Architecture& arch_;
  unsigned lookahead_;
  std::vector<Gate> gates_;
  std::vector<bool> done_;
  std::vector<std::vector<unsigned>> qwire_, bwire_;
  std::vector<unsigned> qhead_, bhead_;
  std::vector<int> pos_;
  std::vector<unsigned> init_;
  std::vector<std::vector<unsigned>> pending_;
  std::map<unsigned, unsigned> occ_;
  std::map<unsigned, unsigned> origin_;  // node -> node whose initial content is here
  std::set<unsigned> used_;
  std::vector<OutGate> out_;
  unsigned swaps_ = 0, bridges_ = 0;
};

}  // namespace

RoutingResult route(const Circuit& c, const Architecture& arch, const PlacementMap& initial,
                    unsigned lookahead) {
  if (c.has_boxes()) throw Error(ErrorCode::BoxesPresent, "routing: decompose boxes first");
  if (c.n_qubits() > arch.n_nodes())
    throw Error(ErrorCode::TooManyQubits, "circuit has " + std::to_string(c.n_qubits()) +
                                              " qubits, device has " +
                                              std::to_string(arch.n_nodes()));
  Router router(c, arch, lookahead);
  return router.run(initial);
}

Circuit routing_reference(const Circuit& source, const RoutingResult& r) {
  std::map<UnitID, UnitID> rename;
  for (const auto& [unit, n] : r.initial_map) rename[unit] = Architecture::node_unit(n);
  Circuit out;
  for (const UnitID& q : r.circuit.qubits()) out.add_qubit(q);
  for (const UnitID& b : source.bits()) out.add_bit(b);
  for (const Command& cmd : source.commands()) {
    std::vector<UnitID> qs;
    for (const UnitID& q : cmd.qubits) qs.push_back(rename.at(q));
    out.add_op(cmd.op, qs, cmd.bits);
  }
  if (source.has_implicit_permutation()) {
    std::map<UnitID, UnitID> perm;
    for (const auto& [a, b] : source.implicit_permutation()) perm[rename.at(a)] = rename.at(b);
    out.permute_outputs(perm);
  }
  out.set_phase(source.global_phase());
  return out;
}

bool decompose_routing_ops(Circuit& c) {
  std::vector<Gate> gates = gate_list(c);
  std::vector<Gate> out;
  bool changed = false;
  auto cx = [&](unsigned a, unsigned b) { out.push_back({Op(OpType::CX), {a, b}, {}}); };
  for (const Gate& g : gates) {
    if (g.op.type() == OpType::SWAP) {
      unsigned a = g.qubits[0], b = g.qubits[1];
      cx(a, b);
      cx(b, a);
      cx(a, b);
      changed = true;
    } else if (g.op.type() == OpType::Bridge) {
      unsigned a = g.qubits[0], m = g.qubits[1], t = g.qubits[2];
      cx(m, t);
      cx(a, m);
      cx(m, t);
      cx(a, m);
      changed = true;
    } else {
      out.push_back(g);
    }
  }
  if (changed) c = rebuild(c, out);
  return changed;
}

}  // namespace qcc

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

#include "gadget/PhaseGadget.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace qcc {

namespace {

const Rational kHalf(1, 2);

void push(std::vector<Gate>& out, OpType t, std::vector<unsigned> qs, std::vector<Angle> ps = {}) {
  out.push_back(Gate{Op(t, std::move(ps)), std::move(qs), {}, true});
}

// CX network leaving the parity of `qs` on the returned root.
unsigned parity_tree(std::vector<Gate>& out, const std::vector<unsigned>& qs, std::size_t lo,
                     std::size_t hi, bool balanced) {
  if (hi - lo == 1) return qs[lo];
  if (!balanced) {
    for (std::size_t i = lo; i + 1 < hi; ++i) push(out, OpType::CX, {qs[i], qs[i + 1]});
    return qs[hi - 1];
  }
  std::size_t mid = lo + (hi - lo) / 2;
  unsigned a = parity_tree(out, qs, lo, mid, true);
  unsigned b = parity_tree(out, qs, mid, hi, true);
  push(out, OpType::CX, {a, b});
  return b;
}

// Basis change taking the letter to Z: H for X, Rx(1/2) for Y.
void to_z(std::vector<Gate>& out, unsigned q, Pauli l) {
  if (l == Pauli::X) push(out, OpType::H, {q});
  if (l == Pauli::Y) push(out, OpType::Rx, {q}, {Angle(kHalf)});
}

void from_z(std::vector<Gate>& out, unsigned q, Pauli l) {
  if (l == Pauli::X) push(out, OpType::H, {q});
  if (l == Pauli::Y) push(out, OpType::Rx, {q}, {Angle(-kHalf)});
}

}  // namespace

void append_phase_gadget(std::vector<Gate>& out, const std::vector<unsigned>& qubits,
                         const Angle& a, bool balanced) {
  if (qubits.empty()) return;
  std::size_t start = out.size();
  unsigned root = parity_tree(out, qubits, 0, qubits.size(), balanced);
  std::size_t tree_end = out.size();
  push(out, OpType::Rz, {root}, {a});
  std::vector<Gate> tree(out.begin() + static_cast<long>(start), out.begin() + static_cast<long>(tree_end));
  for (auto it = tree.rbegin(); it != tree.rend(); ++it) out.push_back(*it);
}

Circuit phase_gadget_circuit(unsigned n_qubits, const std::vector<unsigned>& qubits,
                             const Angle& a, bool balanced) {
  std::vector<Gate> gates;
  append_phase_gadget(gates, qubits, a, balanced);
  Circuit c(n_qubits);
  for (const Gate& g : gates) c.add_op(g.op, g.qubits);
  return c;
}

void append_pauli_gadget(std::vector<Gate>& out, const PauliString& p, const Angle& a) {
  std::vector<unsigned> supp = p.support();
  if (supp.empty()) return;
  Angle angle = p.negative ? -a : a;
  for (unsigned q : supp) to_z(out, q, p.letter(q));
  append_phase_gadget(out, supp, angle);
  for (unsigned q : supp) from_z(out, q, p.letter(q));
}

std::vector<unsigned> common_letters(const PauliString& p1, const PauliString& p2) {
  std::vector<unsigned> out;
  for (unsigned q = 0; q < p1.size(); ++q) {
    Pauli l = p1.letter(q);
    if (l != Pauli::I && l == p2.letter(q)) out.push_back(q);
  }
  return out;
}

void append_pauli_gadget_pair(std::vector<Gate>& out, const PauliString& p1, const Angle& a1,
                              const PauliString& p2, const Angle& a2) {
  std::vector<unsigned> common = common_letters(p1, p2);
  for (unsigned q : common) to_z(out, q, p1.letter(q));
  std::size_t tc_start = out.size();
  unsigned c = parity_tree(out, common, 0, common.size(), true);
  std::vector<Gate> tc(out.begin() + static_cast<long>(tc_start), out.end());

  for (auto [p, a] : {std::pair{&p1, &a1}, std::pair{&p2, &a2}}) {
    std::vector<unsigned> rest;
    for (unsigned q : p->support())
      if (!std::binary_search(common.begin(), common.end(), q)) rest.push_back(q);
    Angle angle = p->negative ? -*a : *a;
    for (unsigned q : rest) to_z(out, q, p->letter(q));
    if (rest.empty()) {
      push(out, OpType::Rz, {c}, {angle});
    } else {
      std::size_t tr_start = out.size();
      unsigned r = parity_tree(out, rest, 0, rest.size(), true);
      push(out, OpType::CX, {r, c});
      std::size_t mid = out.size();
      push(out, OpType::Rz, {c}, {angle});
      std::vector<Gate> tr(out.begin() + static_cast<long>(tr_start), out.begin() + static_cast<long>(mid));
      for (auto it = tr.rbegin(); it != tr.rend(); ++it) out.push_back(*it);
    }
    for (unsigned q : rest) from_z(out, q, p->letter(q));
  }
  for (auto it = tc.rbegin(); it != tc.rend(); ++it) out.push_back(*it);
  for (unsigned q : common) from_z(out, q, p1.letter(q));
}

namespace {

// Rz-equivalent angle and global phase of a diagonal single-qubit gate.
bool diagonal_rotation(const Op& op, Angle& angle, Angle& phase) {
  switch (op.type()) {
    case OpType::Z: angle = Angle(1); phase = Angle(kHalf); return true;
    case OpType::S: angle = Angle(kHalf); phase = Angle(Rational(1, 4)); return true;
    case OpType::Sdg: angle = Angle(-kHalf); phase = Angle(Rational(-1, 4)); return true;
    case OpType::T: angle = Angle(Rational(1, 4)); phase = Angle(Rational(1, 8)); return true;
    case OpType::Tdg: angle = Angle(Rational(-1, 4)); phase = Angle(Rational(-1, 8)); return true;
    case OpType::Rz: angle = op.param(0); phase = Angle(); return true;
    case OpType::U1: angle = op.param(0); phase = op.param(0) * kHalf; return true;
    default: return false;
  }
}

bool region_gate(const Gate& g) {
  if (!g.bits.empty()) return false;
  if (g.op.type() == OpType::CX) return true;
  Angle a, p;
  return g.qubits.size() == 1 && diagonal_rotation(g.op, a, p);
}

struct Region {
  std::vector<std::size_t> gates;
  std::set<unsigned> wires;
};

unsigned region_depth(const std::vector<Gate>& gates, const std::vector<std::size_t>& idx,
                      unsigned n) {
  std::vector<unsigned> d(n, 0);
  unsigned best = 0;
  for (std::size_t i : idx) {
    unsigned m = 0;
    for (unsigned q : gates[i].qubits) m = std::max(m, d[q]);
    for (unsigned q : gates[i].qubits) d[q] = m + 1;
    best = std::max(best, m + 1);
  }
  return best;
}

unsigned count_cx(const std::vector<Gate>& gates) {
  unsigned n = 0;
  for (const Gate& g : gates) n += g.op.type() == OpType::CX;
  return n;
}

// Resynthesis of a region over local wires; returns gates on global wires.
std::vector<Gate> resynthesise(const std::vector<Gate>& gates, const Region& r, Angle& phase) {
  std::vector<unsigned> wires(r.wires.begin(), r.wires.end());
  std::map<unsigned, unsigned> local;
  for (unsigned i = 0; i < wires.size(); ++i) local[wires[i]] = i;
  std::size_t k = wires.size();
  using Row = std::vector<std::uint8_t>;
  std::vector<Row> parity(k, Row(k, 0));
  for (std::size_t i = 0; i < k; ++i) parity[i][i] = 1;
  std::map<Row, Angle> terms;
  std::vector<Row> order;
  for (std::size_t i : r.gates) {
    const Gate& g = gates[i];
    if (g.op.type() == OpType::CX) {
      unsigned a = local[g.qubits[0]], b = local[g.qubits[1]];
      for (std::size_t j = 0; j < k; ++j) parity[b][j] ^= parity[a][j];
      continue;
    }
    Angle angle, ph;
    diagonal_rotation(g.op, angle, ph);
    phase += ph;
    const Row& p = parity[local[g.qubits[0]]];
    if (!terms.count(p)) order.push_back(p);
    terms[p] = terms[p] + angle;
  }
  std::vector<Gate> out;
  for (const Row& p : order) {
    Angle a = terms[p];
    if (a.is_zero_mod(4)) continue;
    if (a.is_zero_mod(2)) {
      phase += Angle(1);  // exp(-i pi Z...Z) = -1
      continue;
    }
    std::vector<unsigned> qs;
    for (std::size_t j = 0; j < k; ++j)
      if (p[j]) qs.push_back(wires[j]);
    append_phase_gadget(out, qs, a);
  }
  // Gaussian elimination of the final parity map; the CX list is reversed.
  std::vector<std::pair<unsigned, unsigned>> ops;
  std::vector<Row> m = parity;
  auto add_row = [&](std::size_t src, std::size_t dst) {
    for (std::size_t j = 0; j < k; ++j) m[dst][j] ^= m[src][j];
    ops.emplace_back(static_cast<unsigned>(src), static_cast<unsigned>(dst));
  };
  for (std::size_t c = 0; c < k; ++c) {
    if (!m[c][c]) {
      for (std::size_t r2 = c + 1; r2 < k; ++r2)
        if (m[r2][c]) {
          add_row(r2, c);
          break;
        }
    }
    for (std::size_t r2 = 0; r2 < k; ++r2)
      if (r2 != c && m[r2][c]) add_row(c, r2);
  }
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) push(out, OpType::CX, {wires[it->first], wires[it->second]});
  return out;
}

}  // namespace

bool optimise_phase_gadgets(Circuit& c) {
  std::vector<Gate> gates = gate_list(c);
  unsigned n = c.n_qubits();
  std::vector<int> parent;
  std::vector<Region> regions;
  std::vector<bool> closed;
  std::vector<int> open(n, -1);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto close_region = [&](int rid) {
    rid = find(rid);
    closed[rid] = true;
    for (unsigned w : regions[rid].wires)
      if (open[w] >= 0 && find(open[w]) == rid) open[w] = -1;
  };

  for (std::size_t i = 0; i < gates.size(); ++i) {
    const Gate& g = gates[i];
    if (!region_gate(g)) {
      for (unsigned w : g.qubits)
        if (open[w] >= 0) close_region(open[w]);
      continue;
    }
    int rid = -1;
    for (unsigned w : g.qubits) {
      if (open[w] < 0) continue;
      int r = find(open[w]);
      if (rid < 0) {
        rid = r;
      } else if (r != rid) {
        parent[r] = rid;
        Region& dst = regions[rid];
        dst.gates.insert(dst.gates.end(), regions[r].gates.begin(), regions[r].gates.end());
        dst.wires.insert(regions[r].wires.begin(), regions[r].wires.end());
        regions[r].gates.clear();
      }
    }
    if (rid < 0) {
      rid = static_cast<int>(regions.size());
      regions.emplace_back();
      parent.push_back(rid);
      closed.push_back(false);
    }
    regions[rid].gates.push_back(i);
    for (unsigned w : g.qubits) {
      regions[rid].wires.insert(w);
      open[w] = rid;
    }
  }

  std::vector<std::vector<Gate>> insert_at(gates.size());
  Angle phase;
  bool changed = false;
  for (std::size_t rid = 0; rid < regions.size(); ++rid) {
    Region& r = regions[rid];
    if (find(static_cast<int>(rid)) != static_cast<int>(rid) || r.gates.empty()) continue;
    std::sort(r.gates.begin(), r.gates.end());
    std::vector<Gate> old;
    for (std::size_t i : r.gates) old.push_back(gates[i]);
    if (count_cx(old) == 0) continue;
    Angle ph;
    std::vector<Gate> fresh = resynthesise(gates, r, ph);
    std::vector<std::size_t> idx(fresh.size());
    std::iota(idx.begin(), idx.end(), 0);
    unsigned new_depth = region_depth(fresh, idx, n);
    unsigned old_depth = region_depth(gates, r.gates, n);
    bool better = count_cx(fresh) <= count_cx(old) &&
                  (fresh.size() < old.size() || new_depth < old_depth);
    if (!better) continue;
    for (std::size_t i : r.gates) gates[i].alive = false;
    insert_at[r.gates.back()] = std::move(fresh);
    phase += ph;
    changed = true;
  }
  if (!changed) return false;
  std::vector<Gate> out;
  for (std::size_t i = 0; i < gates.size(); ++i) {
    if (gates[i].alive) out.push_back(gates[i]);
    for (Gate& g : insert_at[i]) out.push_back(std::move(g));
  }
  c = rebuild(c, out, phase);
  return true;
}

GadgetDetection detect_phase_gadgets(const Circuit& c) {
  std::vector<Gate> gates = gate_list(c);
  // Per gate and port: previous and next gate on that wire.
  const std::size_t none = gates.size();
  std::vector<std::vector<std::size_t>> prev(gates.size()), next(gates.size());
  std::vector<std::size_t> last(c.n_qubits(), none);
  for (std::size_t i = 0; i < gates.size(); ++i) {
    prev[i].assign(gates[i].qubits.size(), none);
    next[i].assign(gates[i].qubits.size(), none);
    for (unsigned k = 0; k < gates[i].qubits.size(); ++k) {
      unsigned w = gates[i].qubits[k];
      if (last[w] != none) {
        prev[i][k] = last[w];
        next[last[w]][port_of(gates[last[w]].qubits, w)] = i;
      }
      last[w] = i;
    }
  }
  auto before = [&](std::size_t g, unsigned w) { return prev[g][port_of(gates[g].qubits, w)]; };
  auto after = [&](std::size_t g, unsigned w) { return next[g][port_of(gates[g].qubits, w)]; };

  std::vector<bool> used(gates.size(), false);
  GadgetDetection out;
  for (std::size_t r = 0; r < gates.size(); ++r) {
    if (used[r] || gates[r].op.type() != OpType::Rz || !gates[r].bits.empty()) continue;
    DetectedGadget d{r, {{gates[r].qubits[0]}, gates[r].op.param(0)}, {r}};
    std::map<unsigned, std::pair<std::size_t, std::size_t>> span{{gates[r].qubits[0], {r, r}}};
    used[r] = true;
    bool grown = true;
    while (grown) {
      grown = false;
      for (unsigned head : d.gadget.qubits) {
        auto [lo, hi] = span.at(head);
        std::size_t p = before(lo, head), s = after(hi, head);
        if (p == none || s == none || used[p] || used[s]) continue;
        const Gate& gp = gates[p];
        const Gate& gs = gates[s];
        if (gp.op.type() != OpType::CX || gs.op.type() != OpType::CX) continue;
        if (gp.qubits != gs.qubits || gp.qubits[1] != head) continue;
        unsigned ctrl = gp.qubits[0];
        if (span.count(ctrl) || after(p, ctrl) != s) continue;
        used[p] = used[s] = true;
        d.gates.push_back(p);
        d.gates.push_back(s);
        span[head] = {p, s};
        span[ctrl] = {p, s};
        d.gadget.qubits.insert(d.gadget.qubits.begin(), ctrl);
        grown = true;
        break;
      }
    }
    std::sort(d.gates.begin(), d.gates.end());
    out.gadgets.push_back(std::move(d));
  }
  for (std::size_t i = 0; i < gates.size(); ++i)
    if (!used[i]) out.residual.push_back(i);
  return out;
}

Circuit reconstruct_phase_gadgets(const Circuit& c, const GadgetDetection& d, bool balanced) {
  std::vector<Gate> gates = gate_list(c);
  std::map<std::size_t, const PhaseGadget*> at;
  std::vector<bool> covered(gates.size(), false);
  for (const DetectedGadget& g : d.gadgets) {
    at[g.position] = &g.gadget;
    for (std::size_t i : g.gates) covered[i] = true;
  }
  std::vector<Gate> out;
  for (std::size_t i = 0; i < gates.size(); ++i) {
    auto it = at.find(i);
    if (it != at.end())
      append_phase_gadget(out, it->second->qubits, it->second->angle, balanced);
    else if (!covered[i])
      out.push_back(gates[i]);
  }
  return rebuild(c, out);
}

}  // namespace qcc

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

#include "gadget/Tableau.hpp"

#include <cmath>

#include "ir/Errors.hpp"

namespace qcc {

namespace {

const Rational kHalf(1, 2);

[[noreturn]] void non_clifford(const Op& op) {
  fail(ErrorCode::NonCliffordGate, "not a Clifford gate: " + op.to_string());
}

int popcount_y(const PauliString& p) {
  int n = 0;
  for (unsigned q = 0; q < p.size(); ++q) n += p.x[q] & p.z[q];
  return n;
}

}  // namespace

int clifford_quarter(const Angle& a) {
  if (a.is_symbolic() || !a.is_multiple_of(kHalf)) return -1;
  long k = std::lround(a.value() * 2);
  return static_cast<int>(((k % 8) + 8) % 8);
}

Tableau::Tableau(unsigned n) : n_(n), rows_(2 * n, PauliString(n)) {
  for (unsigned q = 0; q < n; ++q) {
    rows_[q].x[q] = 1;
    rows_[n + q].z[q] = 1;
  }
}

Tableau Tableau::from_circuit(const Circuit& c) {
  Tableau t(c.n_qubits());
  for (const Command& cmd : c.commands()) {
    if (cmd.op.type() == OpType::Barrier) continue;
    std::vector<unsigned> qs;
    for (const UnitID& u : cmd.qubits) qs.push_back(*c.qubit_index(u));
    t.apply(cmd.op, qs);
  }
  return t;
}

void Tableau::set_images(unsigned q, PauliString x, PauliString z) {
  rows_[q] = std::move(x);
  rows_[n_ + q] = std::move(z);
}

void Tableau::h(unsigned a) {
  for (PauliString& r : rows_) {
    r.negative ^= r.x[a] & r.z[a];
    std::swap(r.x[a], r.z[a]);
  }
}

void Tableau::s(unsigned a) {
  for (PauliString& r : rows_) {
    r.negative ^= r.x[a] & r.z[a];
    r.z[a] ^= r.x[a];
  }
}

void Tableau::cx(unsigned a, unsigned b) {
  for (PauliString& r : rows_) {
    r.negative ^= r.x[a] & r.z[b] & (r.x[b] ^ r.z[a] ^ 1);
    r.x[b] ^= r.x[a];
    r.z[a] ^= r.z[b];
  }
}

void Tableau::pauli_x(unsigned a) {
  for (PauliString& r : rows_) r.negative ^= r.z[a];
}

void Tableau::pauli_z(unsigned a) {
  for (PauliString& r : rows_) r.negative ^= r.x[a];
}

void Tableau::apply(const Op& op, const std::vector<unsigned>& q) {
  auto sk = [&](unsigned a, int k) {
    for (int i = 0; i < (k % 4); ++i) s(a);
  };
  auto rx = [&](unsigned a, int k) {
    h(a);
    sk(a, k);
    h(a);
  };
  auto quarter = [&](const Angle& a) {
    int k = clifford_quarter(a);
    if (k < 0) non_clifford(op);
    return k;
  };
  switch (op.type()) {
    case OpType::X: pauli_x(q[0]); return;
    case OpType::Y: pauli_x(q[0]); pauli_z(q[0]); return;
    case OpType::Z: pauli_z(q[0]); return;
    case OpType::H: h(q[0]); return;
    case OpType::S: s(q[0]); return;
    case OpType::Sdg: sk(q[0], 3); return;
    case OpType::Rz:
    case OpType::U1:
      sk(q[0], quarter(op.param(0)));
      return;
    case OpType::Rx:
      rx(q[0], quarter(op.param(0)));
      return;
    case OpType::Ry:
      sk(q[0], 3);
      rx(q[0], quarter(op.param(0)));
      s(q[0]);
      return;
    case OpType::PhasedX: {
      int th = quarter(op.param(0)), ph = quarter(op.param(1));
      sk(q[0], 8 - ph);
      rx(q[0], th);
      sk(q[0], ph);
      return;
    }
    case OpType::U2:
    case OpType::U3: {
      bool u2 = op.type() == OpType::U2;
      int th = u2 ? 1 : quarter(op.param(0));
      int ph = quarter(op.param(u2 ? 0 : 1)), la = quarter(op.param(u2 ? 1 : 2));
      sk(q[0], la + 7);
      rx(q[0], th);
      sk(q[0], ph + 1);
      return;
    }
    case OpType::CX: cx(q[0], q[1]); return;
    case OpType::CZ:
      h(q[1]);
      cx(q[0], q[1]);
      h(q[1]);
      return;
    case OpType::SWAP:
      cx(q[0], q[1]);
      cx(q[1], q[0]);
      cx(q[0], q[1]);
      return;
    case OpType::Bridge: cx(q[0], q[2]); return;
    case OpType::CRz: {
      int k = quarter(op.param(0));
      if (k % 2) non_clifford(op);
      sk(q[1], k / 2);
      cx(q[0], q[1]);
      sk(q[1], 8 - k / 2);
      cx(q[0], q[1]);
      return;
    }
    default:
      non_clifford(op);
  }
}

void Tableau::prepend(const Op& op, const std::vector<unsigned>& q) {
  unsigned k = static_cast<unsigned>(q.size());
  Tableau local(k);
  std::vector<unsigned> idx(k);
  for (unsigned i = 0; i < k; ++i) idx[i] = i;
  local.apply(op, idx);
  auto lift = [&](const PauliString& p) {
    PauliString out(n_);
    out.negative = p.negative;
    for (unsigned i = 0; i < k; ++i) {
      out.x[q[i]] = p.x[i];
      out.z[q[i]] = p.z[i];
    }
    return out;
  };
  std::vector<std::pair<PauliString, PauliString>> fresh;
  for (unsigned i = 0; i < k; ++i) {
    fresh.emplace_back(conjugate(lift(local.x_image(i))), conjugate(lift(local.z_image(i))));
  }
  for (unsigned i = 0; i < k; ++i) set_images(q[i], fresh[i].first, fresh[i].second);
}

PauliString Tableau::conjugate(const PauliString& p) const {
  // Accumulate i^k prod X^x Z^z.
  int k = (p.negative ? 2 : 0) + popcount_y(p);
  PauliString acc(n_);
  auto mul = [&](const PauliString& r) {
    k += (r.negative ? 2 : 0) + popcount_y(r);
    for (unsigned j = 0; j < n_; ++j) {
      k += 2 * (acc.z[j] & r.x[j]);
      acc.x[j] ^= r.x[j];
      acc.z[j] ^= r.z[j];
    }
  };
  for (unsigned q = 0; q < n_; ++q) {
    if (p.x[q]) mul(rows_[q]);
    if (p.z[q]) mul(rows_[n_ + q]);
  }
  k -= popcount_y(acc);
  k = ((k % 4) + 4) % 4;
  if (k % 2) fail(ErrorCode::Internal, "tableau conjugation lost hermiticity");
  acc.negative = k == 2;
  return acc;
}

Circuit Tableau::synthesise() const {
  Tableau t = *this;
  struct Step {
    OpType type;
    std::vector<unsigned> qubits;
  };
  std::vector<Step> steps;
  auto H = [&](unsigned a) { t.h(a); steps.push_back({OpType::H, {a}}); };
  auto S = [&](unsigned a) { t.s(a); steps.push_back({OpType::S, {a}}); };
  auto V = [&](unsigned a) { t.h(a); t.s(a); t.h(a); steps.push_back({OpType::Rx, {a}}); };
  auto CX = [&](unsigned a, unsigned b) { t.cx(a, b); steps.push_back({OpType::CX, {a, b}}); };

  for (unsigned i = 0; i < n_; ++i) {
    std::vector<unsigned> supp = t.x_image(i).support();
    if (supp.empty() || supp.front() < i) fail(ErrorCode::Internal, "tableau is not symplectic");
    for (unsigned j : supp) {
      Pauli l = t.x_image(i).letter(j);
      if (l == Pauli::Z) H(j);
      if (l == Pauli::Y) S(j);
    }
    if (supp.front() != i) CX(supp.front(), i);
    for (unsigned j : supp)
      if (j != i) CX(i, j);

    if (t.z_image(i).letter(i) == Pauli::Y) V(i);
    for (unsigned j : t.z_image(i).support()) {
      if (j == i) continue;
      Pauli l = t.z_image(i).letter(j);
      if (l == Pauli::X) H(j);
      if (l == Pauli::Y) {
        S(j);
        H(j);
      }
      CX(j, i);
    }
    if (t.x_image(i).negative) {
      t.pauli_z(i);
      steps.push_back({OpType::Z, {i}});
    }
    if (t.z_image(i).negative) {
      t.pauli_x(i);
      steps.push_back({OpType::X, {i}});
    }
  }
  if (!(t == Tableau(n_))) fail(ErrorCode::Internal, "tableau synthesis failed");

  Circuit c(n_);
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    switch (it->type) {
      case OpType::S: c.add_op(OpType::Sdg, it->qubits); break;
      case OpType::Rx: c.add_op(OpType::Rx, it->qubits, {Angle(-kHalf)}); break;
      default: c.add_op(it->type, it->qubits); break;
    }
  }
  return c;
}

}  // namespace qcc

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

#include "sim/Unitary.hpp"

#include <cmath>
#include <numbers>

#include "ir/Errors.hpp"

namespace qcc {

void apply_gate(MatrixX& u, const MatrixX& m, const std::vector<unsigned>& qubits) {
  const std::size_t k = qubits.size();
  const std::size_t dim = static_cast<std::size_t>(u.rows());
  const std::size_t sub = std::size_t{1} << k;
  std::size_t mask = 0;
  for (unsigned q : qubits) mask |= std::size_t{1} << q;
  std::vector<std::size_t> offsets(sub);
  for (std::size_t s = 0; s < sub; ++s) {
    std::size_t off = 0;
    for (std::size_t b = 0; b < k; ++b)
      if (s >> b & 1) off |= std::size_t{1} << qubits[b];
    offsets[s] = off;
  }
  std::vector<Complex> in(sub), out(sub);
  for (Eigen::Index col = 0; col < u.cols(); ++col) {
    for (std::size_t base = 0; base < dim; ++base) {
      if (base & mask) continue;
      for (std::size_t s = 0; s < sub; ++s) in[s] = u(base | offsets[s], col);
      for (std::size_t r = 0; r < sub; ++r) {
        Complex acc = 0;
        for (std::size_t s = 0; s < sub; ++s) acc += m(r, s) * in[s];
        out[r] = acc;
      }
      for (std::size_t s = 0; s < sub; ++s) u(base | offsets[s], col) = out[s];
    }
  }
}

namespace {

void check_simulable(const Circuit& c) {
  if (c.n_qubits() > numeric_config().unitary_qubit_cap) {
    fail(ErrorCode::TooLarge, std::to_string(c.n_qubits()) + " qubits exceeds the simulation cap");
  }
  if (c.has_boxes()) fail(ErrorCode::BoxesPresent, "simulation requires decomposed boxes");
  if (c.is_symbolic()) fail(ErrorCode::SymbolicParams, "simulation requires numeric parameters");
}

MatrixX evolve(const Circuit& c, MatrixX u, bool skip_measure) {
  for (const Command& cmd : c.commands()) {
    if (cmd.op.type() == OpType::Barrier) continue;
    if (cmd.op.type() == OpType::Measure) {
      if (skip_measure) continue;
      fail(ErrorCode::NonUnitaryOps, "measurement in unitary simulation");
    }
    std::vector<unsigned> qs;
    for (const UnitID& q : cmd.qubits) qs.push_back(*c.qubit_index(q));
    apply_gate(u, gate_matrix(cmd.op), qs);
  }
  double ph = c.global_phase().value() * std::numbers::pi;
  return u * Complex(std::cos(ph), std::sin(ph));
}

std::vector<unsigned> implicit_perm_indices(const Circuit& c) {
  std::vector<unsigned> perm(c.n_qubits());
  auto map = c.implicit_permutation();
  for (unsigned i = 0; i < c.n_qubits(); ++i) perm[i] = *c.qubit_index(map.at(c.qubits()[i]));
  return perm;
}

}  // namespace

MatrixX permutation_matrix(const std::vector<unsigned>& perm) {
  std::size_t dim = std::size_t{1} << perm.size();
  MatrixX p = MatrixX::Zero(dim, dim);
  for (std::size_t x = 0; x < dim; ++x) {
    std::size_t y = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      if (x >> i & 1) y |= std::size_t{1} << perm[i];
    p(y, x) = 1;
  }
  return p;
}

MatrixX wire_unitary(const Circuit& c) {
  check_simulable(c);
  std::size_t dim = std::size_t{1} << c.n_qubits();
  return evolve(c, MatrixX::Identity(dim, dim), false);
}

MatrixX circuit_unitary(const Circuit& c) {
  MatrixX w = wire_unitary(c);
  if (!c.has_implicit_permutation()) return w;
  return permutation_matrix(implicit_perm_indices(c)) * w;
}

double equivalence_error(
    const Circuit& a, const Circuit& b, const std::optional<std::vector<unsigned>>& perm) {
  if (a.n_qubits() != b.n_qubits()) return INFINITY;
  MatrixX ua = circuit_unitary(a);
  MatrixX ub = circuit_unitary(b);
  if (perm) {
    if (perm->size() != a.n_qubits()) fail(ErrorCode::LengthMismatch, "permutation length");
    ua = permutation_matrix(*perm) * ua;
  }
  return phase_distance(ua, ub);
}

bool equiv_up_to_phase(
    const Circuit& a, const Circuit& b, const std::optional<std::vector<unsigned>>& perm,
    double tol) {
  return equivalence_error(a, b, perm) <= tol;
}

std::map<std::string, double> output_distribution(const Circuit& c) {
  check_simulable(c);
  std::size_t dim = std::size_t{1} << c.n_qubits();
  MatrixX psi = MatrixX::Zero(dim, 1);
  psi(0, 0) = 1;
  psi = evolve(c, psi, true);
  if (c.has_implicit_permutation()) psi = permutation_matrix(implicit_perm_indices(c)) * psi;
  std::map<std::string, double> dist;
  for (std::size_t x = 0; x < dim; ++x) {
    double p = std::norm(psi(x, 0));
    if (p < 1e-15) continue;
    std::string key(c.n_qubits(), '0');
    for (unsigned i = 0; i < c.n_qubits(); ++i)
      if (x >> i & 1) key[c.n_qubits() - 1 - i] = '1';
    dist[key] = p;
  }
  return dist;
}

}  // namespace qcc

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

#include "gadget/Pauli.hpp"

#include "ir/Errors.hpp"

namespace qcc {

PauliString::PauliString(const std::vector<Pauli>& letters, bool neg)
    : x(letters.size(), 0), z(letters.size(), 0), negative(neg) {
  for (unsigned q = 0; q < letters.size(); ++q) set(q, letters[q]);
}

Pauli PauliString::letter(unsigned q) const {
  if (x[q] && z[q]) return Pauli::Y;
  if (x[q]) return Pauli::X;
  if (z[q]) return Pauli::Z;
  return Pauli::I;
}

void PauliString::set(unsigned q, Pauli p) {
  x[q] = p == Pauli::X || p == Pauli::Y;
  z[q] = p == Pauli::Z || p == Pauli::Y;
}

std::vector<Pauli> PauliString::letters() const {
  std::vector<Pauli> out;
  for (unsigned q = 0; q < size(); ++q) out.push_back(letter(q));
  return out;
}

std::vector<unsigned> PauliString::support() const {
  std::vector<unsigned> out;
  for (unsigned q = 0; q < size(); ++q)
    if (x[q] || z[q]) out.push_back(q);
  return out;
}

bool PauliString::is_identity() const { return support().empty(); }

bool PauliString::commutes_with(const PauliString& o) const {
  unsigned n = 0;
  for (unsigned q = 0; q < size(); ++q) n += (x[q] & o.z[q]) ^ (z[q] & o.x[q]);
  return n % 2 == 0;
}

std::string PauliString::to_string() const {
  return (negative ? "-" : "+") + pauli_string(letters());
}

PauliString PauliString::single(unsigned n, unsigned q, Pauli p) {
  PauliString s(n);
  s.set(q, p);
  return s;
}

PauliString multiply(const PauliString& a, const PauliString& b) {
  // Work in the form i^k prod X^x Z^z; Y = i X Z.
  unsigned n = a.size();
  int k = (a.negative ? 2 : 0) + (b.negative ? 2 : 0);
  PauliString out(n);
  for (unsigned q = 0; q < n; ++q) {
    k += (a.x[q] & a.z[q]) + (b.x[q] & b.z[q]);
    k += 2 * (a.z[q] & b.x[q]);
    out.x[q] = a.x[q] ^ b.x[q];
    out.z[q] = a.z[q] ^ b.z[q];
    k -= out.x[q] & out.z[q];
  }
  k = ((k % 4) + 4) % 4;
  if (k % 2) fail(ErrorCode::Internal, "product of anticommuting Paulis is not Hermitian");
  out.negative = k == 2;
  return out;
}

}  // namespace qcc

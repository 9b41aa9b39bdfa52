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

#include <cstdint>
#include <string>
#include <vector>

#include "ir/Op.hpp"

namespace qcc {

/**
 * Hermitian Pauli string with a sign. Bit encoding per qubit:
 * X = (1,0), Z = (0,1), Y = (1,1).
 */
struct PauliString {
  std::vector<std::uint8_t> x, z;
  bool negative = false;

  PauliString() = default;
  explicit PauliString(unsigned n) : x(n, 0), z(n, 0) {}
  PauliString(const std::vector<Pauli>& letters, bool neg = false);

  unsigned size() const { return static_cast<unsigned>(x.size()); }
  Pauli letter(unsigned q) const;
  void set(unsigned q, Pauli p);
  std::vector<Pauli> letters() const;
  std::vector<unsigned> support() const;
  bool is_identity() const;
  bool commutes_with(const PauliString& o) const;
  /** e.g. "-XIZ", qubit 0 first. */
  std::string to_string() const;

  static PauliString single(unsigned n, unsigned q, Pauli p);

  bool operator==(const PauliString&) const = default;
};

/**
 * Product a*b of Hermitian strings. The result is Hermitian only when the
 * operands commute; otherwise Internal is thrown.
 */
PauliString multiply(const PauliString& a, const PauliString& b);

}  // namespace qcc

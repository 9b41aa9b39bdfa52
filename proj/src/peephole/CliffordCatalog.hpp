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

#include <optional>
#include <string>
#include <vector>

#include "gadget/Tableau.hpp"
#include "ir/Circuit.hpp"

namespace qcc {

/**
 * Minimal-CX representatives of the two-qubit Clifford group modulo local
 * Cliffords applied afterwards.
 */
class CliffordCatalog {
 public:
  struct Rule {
    unsigned cx_count;
    Circuit replacement;
    Circuit inverse;
  };

  /** The builtin catalog. */
  static const CliffordCatalog& builtin();
  static CliffordCatalog from_json(const std::string& text);

  const std::vector<Rule>& rules() const { return rules_; }

  /**
   * Cheapest circuit R_k followed by single-qubit Cliffords equal to the
   * two-qubit Clifford `t`, up to global phase.
   */
  Circuit synthesise(const Tableau& t) const;
  /** Minimal CX count of `t`. */
  unsigned cx_count(const Tableau& t) const;

 private:
  std::optional<std::size_t> match(const Tableau& t, Tableau* local) const;
  std::vector<Rule> rules_;
};

}  // namespace qcc

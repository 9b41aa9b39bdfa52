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

#include "peephole/CliffordCatalog.hpp"

#include <json.hpp>

#include "io/CircuitJson.hpp"
#include "io/Embedded.hpp"
#include "ir/Errors.hpp"

namespace qcc {

namespace {

bool is_local(const Tableau& t) {
  for (unsigned q = 0; q < 2; ++q) {
    for (const PauliString* p : {&t.x_image(q), &t.z_image(q)}) {
      std::vector<unsigned> s = p->support();
      if (s.size() != 1 || s[0] != q) return false;
    }
  }
  return true;
}

// Tableau of the circuit `first` followed by the Clifford `then`.
Tableau compose(const Circuit& first, const Tableau& then) {
  Tableau t = Tableau::from_circuit(first);
  Tableau out(2);
  for (unsigned q = 0; q < 2; ++q)
    out.set_images(q, then.conjugate(t.x_image(q)), then.conjugate(t.z_image(q)));
  return out;
}

}  // namespace

CliffordCatalog CliffordCatalog::from_json(const std::string& text) {
  CliffordCatalog cat;
  try {
    nlohmann::json j = nlohmann::json::parse(text);
    for (const auto& r : j.at("rules")) {
      Circuit c = circuit_from_json(r.at("replacement"));
      if (c.n_qubits() != 2) fail(ErrorCode::InvalidArgument, "catalog rule is not two-qubit");
      cat.rules_.push_back({r.at("cx_count").get<unsigned>(), c, c.dagger()});
    }
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::InvalidArgument, std::string("bad Clifford catalog: ") + e.what());
  }
  std::stable_sort(cat.rules_.begin(), cat.rules_.end(),
                   [](const Rule& a, const Rule& b) { return a.cx_count < b.cx_count; });
  return cat;
}

const CliffordCatalog& CliffordCatalog::builtin() {
  static const CliffordCatalog cat = from_json(embedded::files().at("clifford_rules"));
  return cat;
}

std::optional<std::size_t> CliffordCatalog::match(const Tableau& t, Tableau* local) const {
  for (std::size_t k = 0; k < rules_.size(); ++k) {
    // t R_k^-1: apply R_k^-1 first, then t.
    Tableau l = compose(rules_[k].inverse, t);
    if (is_local(l)) {
      if (local) *local = l;
      return k;
    }
  }
  return std::nullopt;
}

unsigned CliffordCatalog::cx_count(const Tableau& t) const {
  auto k = match(t, nullptr);
  if (!k) fail(ErrorCode::Internal, "Clifford catalog is incomplete");
  return rules_[*k].cx_count;
}

Circuit CliffordCatalog::synthesise(const Tableau& t) const {
  Tableau local(2);
  auto k = match(t, &local);
  if (!k) fail(ErrorCode::Internal, "Clifford catalog is incomplete");
  Circuit out = rules_[*k].replacement;
  for (const Command& cmd : local.synthesise().commands()) {
    out.add_op(cmd.op, std::vector<unsigned>{cmd.qubits[0].index});
  }
  return out;
}

}  // namespace qcc

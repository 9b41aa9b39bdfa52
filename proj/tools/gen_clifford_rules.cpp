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

// Enumerates the two-qubit Clifford group (modulo phase) with Dijkstra over
// H, S on each qubit and CX in both directions, CX weighing 1000 and single
// gates 1. Elements are grouped into cosets L*C of the local Clifford group
// and the cheapest element of each coset becomes a catalog entry.
//
//   gen_clifford_rules [out.json]

#include <fstream>
#include <iostream>
#include <map>
#include <queue>
#include <set>

#include "gadget/Tableau.hpp"
#include "io/CircuitJson.hpp"

using namespace qcc;

namespace {

struct Gen {
  OpType type;
  std::vector<unsigned> qubits;
  int weight;
};

const std::vector<Gen>& generators() {
  static const std::vector<Gen> g = {
      {OpType::H, {0}, 1},        {OpType::H, {1}, 1},        {OpType::S, {0}, 1},
      {OpType::S, {1}, 1},        {OpType::CX, {0, 1}, 1000}, {OpType::CX, {1, 0}, 1000},
  };
  return g;
}

std::string key(const Tableau& t) {
  std::string s;
  for (unsigned q = 0; q < 2; ++q) {
    for (const PauliString* p : {&t.x_image(q), &t.z_image(q)}) {
      s += p->negative ? '-' : '+';
      for (unsigned j = 0; j < 2; ++j) s += static_cast<char>('0' + 2 * p->x[j] + p->z[j]);
    }
  }
  return s;
}

struct Entry {
  Tableau tableau{2};
  int cost = 0;
  std::vector<int> path;
};

std::map<std::string, Entry> explore(const std::vector<int>& allowed) {
  std::map<std::string, Entry> best;
  using Item = std::pair<int, std::string>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  Entry start;
  best[key(start.tableau)] = start;
  pq.push({0, key(start.tableau)});
  std::set<std::string> done;
  while (!pq.empty()) {
    auto [cost, k] = pq.top();
    pq.pop();
    if (!done.insert(k).second) continue;
    Entry cur = best[k];
    for (int gi : allowed) {
      const Gen& g = generators()[gi];
      Entry nxt = cur;
      nxt.tableau.apply(Op(g.type), g.qubits);
      nxt.cost += g.weight;
      nxt.path.push_back(gi);
      std::string nk = key(nxt.tableau);
      auto it = best.find(nk);
      if (it == best.end() || nxt.cost < it->second.cost) {
        best[nk] = nxt;
        pq.push({nxt.cost, nk});
      }
    }
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  std::string out_path = argc > 1 ? argv[1] : "data/clifford_rules.json";
  auto group = explore({0, 1, 2, 3, 4, 5});
  auto locals = explore({0, 1, 2, 3});
  std::cerr << "group " << group.size() << ", local " << locals.size() << "\n";

  std::map<std::string, const Entry*> reps;
  for (const auto& [k, e] : group) {
    std::string coset;
    for (const auto& [lk, l] : locals) {
      Tableau t = e.tableau;
      for (int gi : l.path) t.apply(Op(generators()[gi].type), generators()[gi].qubits);
      std::string s = key(t);
      if (coset.empty() || s < coset) coset = s;
    }
    auto it = reps.find(coset);
    if (it == reps.end() || e.cost < it->second->cost ||
        (e.cost == it->second->cost && e.path < it->second->path))
      reps[coset] = &e;
  }
  std::cerr << "cosets " << reps.size() << "\n";

  nlohmann::json j;
  j["format_version"] = 1;
  j["group_order"] = group.size();
  j["local_order"] = locals.size();
  j["rules"] = nlohmann::json::array();
  std::vector<const Entry*> sorted;
  for (const auto& [k, e] : reps) sorted.push_back(e);
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const Entry* a, const Entry* b) { return a->cost < b->cost; });
  for (const Entry* e : sorted) {
    Circuit c(2);
    for (int gi : e->path) c.add_op(generators()[gi].type, generators()[gi].qubits);
    nlohmann::json r;
    r["cx_count"] = e->cost / 1000;
    r["replacement"] = circuit_to_json(c);
    j["rules"].push_back(r);
  }
  std::ofstream out(out_path);
  out << j.dump(1) << "\n";
  return 0;
}

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

#include "mapping/Placement.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

#include "ir/Errors.hpp"
#include "peephole/Util.hpp"

namespace qcc {

InteractionGraph interaction_graph(const Circuit& c) {
  InteractionGraph g;
  g.n_qubits = c.n_qubits();
  std::vector<unsigned> layer(c.n_qubits(), 0);
  for (const Gate& gate : gate_list(c)) {
    if (gate.qubits.size() != 2 || gate.op.type() == OpType::Barrier) continue;
    unsigned a = gate.qubits[0], b = gate.qubits[1];
    unsigned s = std::max(layer[a], layer[b]);
    layer[a] = layer[b] = s + 1;
    Edge e{std::min(a, b), std::max(a, b)};
    auto it = g.first_slice.find(e);
    if (it == g.first_slice.end()) g.first_slice.emplace(e, s);
    ++g.weight[e];
  }
  return g;
}

namespace {

constexpr std::size_t kStepBudget = 2'000'000;

struct Matcher {
  // Pattern, dense 0..np-1.
  std::vector<std::vector<unsigned>> padj;
  // Target, by node id.
  const Architecture& arch;
  unsigned max_matches;
  std::vector<int> image;
  std::set<unsigned> used;
  std::vector<std::vector<int>> results;
  std::size_t steps = 0;

  Matcher(std::vector<std::vector<unsigned>> a, const Architecture& ar, unsigned m)
      : padj(std::move(a)), arch(ar), max_matches(m), image(padj.size(), -1) {}

  bool exhausted() const { return steps > kStepBudget || results.size() >= max_matches; }

  // Unassigned vertex with most assigned neighbours, then highest degree.
  int pick() const {
    int best = -1;
    std::pair<unsigned, unsigned> key{0, 0};
    for (unsigned v = 0; v < padj.size(); ++v) {
      if (image[v] >= 0) continue;
      unsigned assigned = 0;
      for (unsigned w : padj[v]) assigned += image[w] >= 0;
      std::pair<unsigned, unsigned> k{assigned, static_cast<unsigned>(padj[v].size())};
      if (best < 0 || k > key) {
        best = static_cast<int>(v);
        key = k;
      }
    }
    return best;
  }

  std::vector<unsigned> candidates(unsigned v) const {
    std::vector<unsigned> out;
    const unsigned deg = static_cast<unsigned>(padj[v].size());
    int anchor = -1;
    for (unsigned w : padj[v])
      if (image[w] >= 0) {
        anchor = image[w];
        break;
      }
    const std::vector<unsigned>& pool =
        anchor >= 0 ? arch.neighbours(static_cast<unsigned>(anchor)) : arch.nodes();
    for (unsigned n : pool) {
      if (used.count(n) || arch.degree(n) < deg) continue;
      bool ok = true;
      for (unsigned w : padj[v])
        if (image[w] >= 0 && !arch.adjacent(n, static_cast<unsigned>(image[w]))) {
          ok = false;
          break;
        }
      if (ok) out.push_back(n);
    }
    return out;
  }

  void search() {
    if (exhausted()) return;
    int v = pick();
    if (v < 0) {
      results.push_back(image);
      return;
    }
    for (unsigned n : candidates(static_cast<unsigned>(v))) {
      ++steps;
      image[v] = static_cast<int>(n);
      used.insert(n);
      search();
      used.erase(n);
      image[v] = -1;
      if (exhausted()) return;
    }
  }
};

bool degree_sequence_fits(const std::vector<std::vector<unsigned>>& padj, const Architecture& arch,
                          std::size_t n_edges) {
  if (padj.size() > arch.n_nodes() || n_edges > arch.edges().size()) return false;
  std::vector<unsigned> pd, td;
  for (const auto& a : padj) pd.push_back(static_cast<unsigned>(a.size()));
  for (unsigned n : arch.nodes()) td.push_back(arch.degree(n));
  std::sort(pd.rbegin(), pd.rend());
  std::sort(td.rbegin(), td.rend());
  for (std::size_t i = 0; i < pd.size(); ++i)
    if (pd[i] > td[i]) return false;
  return true;
}

std::vector<PlacementMap> match(const std::map<Edge, unsigned>& edges, const Architecture& arch,
                                unsigned max_matches) {
  std::vector<unsigned> verts;
  for (const auto& [e, s] : edges) {
    verts.push_back(e.first);
    verts.push_back(e.second);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  std::map<unsigned, unsigned> dense;
  for (unsigned i = 0; i < verts.size(); ++i) dense[verts[i]] = i;
  std::vector<std::vector<unsigned>> padj(verts.size());
  for (const auto& [e, s] : edges) {
    padj[dense[e.first]].push_back(dense[e.second]);
    padj[dense[e.second]].push_back(dense[e.first]);
  }
  if (!degree_sequence_fits(padj, arch, edges.size())) return {};
  Matcher m(padj, arch, max_matches);
  m.search();
  std::vector<PlacementMap> out;
  for (const auto& img : m.results) {
    PlacementMap p;
    for (unsigned i = 0; i < verts.size(); ++i) p[verts[i]] = static_cast<unsigned>(img[i]);
    for (const auto& [e, s] : edges)
      if (!arch.adjacent(p[e.first], p[e.second]))
        throw Error(ErrorCode::Internal, "placement: monomorphism check failed");
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

std::vector<PlacementMap> graph_placement(const Circuit& c, const Architecture& arch,
                                          unsigned max_matches) {
  if (c.n_qubits() > arch.n_nodes())
    throw Error(ErrorCode::TooManyQubits, "circuit has " + std::to_string(c.n_qubits()) +
                                              " qubits, device has " +
                                              std::to_string(arch.n_nodes()));
  if (max_matches == 0) max_matches = 1;
  InteractionGraph g = interaction_graph(c);
  std::map<Edge, unsigned> edges = g.first_slice;
  while (!edges.empty()) {
    std::vector<PlacementMap> found = match(edges, arch, max_matches);
    if (!found.empty()) return found;
    // Drop the edge first used in the latest slice; ties go to the smallest pair.
    auto victim = edges.begin();
    for (auto it = edges.begin(); it != edges.end(); ++it)
      if (it->second > victim->second) victim = it;
    edges.erase(victim);
  }
  return {PlacementMap{}};
}

double noise_aware_score(const PlacementMap& p, const InteractionGraph& g,
                         const Architecture& arch) {
  double score = 0.;
  for (const auto& [e, w] : g.weight) {
    auto a = p.find(e.first), b = p.find(e.second);
    if (a == p.end() || b == p.end() || !arch.adjacent(a->second, b->second)) continue;
    score += w * std::log1p(-arch.edge_error(a->second, b->second));
  }
  for (const auto& [q, n] : p) score += std::log1p(-arch.node_error(n).readout);
  return score;
}

PlacementMethod placement_method_from_name(const std::string& name) {
  if (name == "none") return PlacementMethod::None;
  if (name == "graph") return PlacementMethod::Graph;
  if (name == "noise_aware" || name == "noise-aware") return PlacementMethod::NoiseAware;
  throw Error(ErrorCode::InvalidArgument, "unknown placement method '" + name + "'");
}

std::string placement_method_name(PlacementMethod m) {
  switch (m) {
    case PlacementMethod::None: return "none";
    case PlacementMethod::Graph: return "graph";
    case PlacementMethod::NoiseAware: return "noise_aware";
  }
  return "?";
}

PlacementMap place(const Circuit& c, const Architecture& arch, PlacementMethod method) {
  if (c.n_qubits() > arch.n_nodes())
    throw Error(ErrorCode::TooManyQubits, "circuit has " + std::to_string(c.n_qubits()) +
                                              " qubits, device has " +
                                              std::to_string(arch.n_nodes()));
  switch (method) {
    case PlacementMethod::None: return {};
    case PlacementMethod::Graph: return graph_placement(c, arch, 1).front();
    case PlacementMethod::NoiseAware: {
      if (!arch.has_error_data())
        throw Error(ErrorCode::MissingErrorData,
                    "architecture '" + arch.name() + "' has no error rates");
      InteractionGraph g = interaction_graph(c);
      std::vector<PlacementMap> all = graph_placement(c, arch, 64);
      std::size_t best = 0;
      double best_score = noise_aware_score(all[0], g, arch);
      for (std::size_t i = 1; i < all.size(); ++i) {
        double s = noise_aware_score(all[i], g, arch);
        if (s > best_score) {
          best = i;
          best_score = s;
        }
      }
      return all[best];
    }
  }
  return {};
}

}  // namespace qcc

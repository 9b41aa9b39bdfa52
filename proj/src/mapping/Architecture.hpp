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

#include <json.hpp>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ir/Circuit.hpp"

namespace qcc {

struct NodeError {
  double readout = 0.;
  double gate_1q = 0.;
};

using Edge = std::pair<unsigned, unsigned>;

/**
 * Undirected, connected device graph with optional error rates and a
 * precomputed hop-distance matrix. Node ids need not be dense.
 */
class Architecture {
 public:
  Architecture(std::string name, std::vector<unsigned> nodes, std::vector<Edge> edges);

  static Architecture line(unsigned n);
  static Architecture ring(unsigned n);
  static Architecture grid(unsigned rows, unsigned cols);
  static Architecture complete(unsigned n);
  /** rochester, sycamore, aspen, or generators like line:5, ring:8, grid:3x3, complete:6. */
  static Architecture builtin(const std::string& name);
  /** A builtin name, or a path to a JSON file. */
  static Architecture load(const std::string& name_or_path);
  static Architecture from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  const std::string& name() const { return name_; }
  const std::vector<unsigned>& nodes() const { return nodes_; }
  /** Normalised (a < b) and sorted. */
  const std::vector<Edge>& edges() const { return edges_; }
  unsigned n_nodes() const { return static_cast<unsigned>(nodes_.size()); }
  bool has_node(unsigned n) const { return index_.count(n) > 0; }
  bool adjacent(unsigned a, unsigned b) const;
  unsigned distance(unsigned a, unsigned b) const;
  const std::vector<unsigned>& neighbours(unsigned n) const;
  unsigned degree(unsigned n) const { return static_cast<unsigned>(neighbours(n).size()); }
  unsigned max_degree() const;
  /** Nodes on a shortest path from a to b, inclusive, deterministic. */
  std::vector<unsigned> shortest_path(unsigned a, unsigned b) const;

  bool has_error_data() const { return has_errors_; }
  void set_errors(std::map<unsigned, NodeError> node_errors, std::map<Edge, double> edge_errors);
  const NodeError& node_error(unsigned n) const;
  double edge_error(unsigned a, unsigned b) const;

  static UnitID node_unit(unsigned n) { return UnitID("node", n); }

 private:
  unsigned idx(unsigned n) const;

  std::string name_;
  std::vector<unsigned> nodes_;
  std::vector<Edge> edges_;
  std::map<unsigned, unsigned> index_;
  std::vector<std::vector<unsigned>> adj_;  // by index, neighbour node ids ascending
  std::vector<std::vector<unsigned>> dist_;
  bool has_errors_ = false;
  std::map<unsigned, NodeError> node_errors_;
  std::map<Edge, double> edge_errors_;
};

using ArchitecturePtr = std::shared_ptr<const Architecture>;

}  // namespace qcc

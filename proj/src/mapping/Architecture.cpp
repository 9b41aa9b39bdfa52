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

#include "mapping/Architecture.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <limits>
#include <sstream>

#include "io/Embedded.hpp"
#include "ir/Errors.hpp"

namespace qcc {

namespace {

constexpr unsigned kUnreachable = std::numeric_limits<unsigned>::max();

Edge norm(unsigned a, unsigned b) { return a < b ? Edge{a, b} : Edge{b, a}; }

unsigned parse_count(const std::string& s, const std::string& whole) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
    fail(ErrorCode::InvalidArgument, "bad architecture spec '" + whole + "'");
  }
  return static_cast<unsigned>(std::stoul(s));
}

}  // namespace

Architecture::Architecture(std::string name, std::vector<unsigned> nodes, std::vector<Edge> edges)
    : name_(std::move(name)), nodes_(std::move(nodes)) {
  std::sort(nodes_.begin(), nodes_.end());
  if (nodes_.empty()) fail(ErrorCode::InvalidArgument, "architecture has no nodes");
  if (std::adjacent_find(nodes_.begin(), nodes_.end()) != nodes_.end()) {
    fail(ErrorCode::InvalidArgument, "duplicate architecture node");
  }
  for (unsigned i = 0; i < nodes_.size(); ++i) index_[nodes_[i]] = i;
  adj_.assign(nodes_.size(), {});
  for (auto [a, b] : edges) {
    if (a == b) fail(ErrorCode::InvalidArgument, "self-loop in architecture");
    if (!has_node(a) || !has_node(b)) fail(ErrorCode::InvalidArgument, "edge names unknown node");
    edges_.push_back(norm(a, b));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (auto [a, b] : edges_) {
    adj_[idx(a)].push_back(b);
    adj_[idx(b)].push_back(a);
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());

  const unsigned n = n_nodes();
  dist_.assign(n, std::vector<unsigned>(n, kUnreachable));
  for (unsigned s = 0; s < n; ++s) {
    std::deque<unsigned> queue{s};
    dist_[s][s] = 0;
    while (!queue.empty()) {
      unsigned u = queue.front();
      queue.pop_front();
      for (unsigned nb : adj_[u]) {
        unsigned v = idx(nb);
        if (dist_[s][v] == kUnreachable) {
          dist_[s][v] = dist_[s][u] + 1;
          queue.push_back(v);
        }
      }
    }
    for (unsigned t = 0; t < n; ++t) {
      if (dist_[s][t] == kUnreachable) fail(ErrorCode::InvalidArgument, "architecture is not connected");
    }
  }
}

unsigned Architecture::idx(unsigned n) const {
  auto it = index_.find(n);
  if (it == index_.end()) fail(ErrorCode::InvalidArgument, "unknown node " + std::to_string(n));
  return it->second;
}

bool Architecture::adjacent(unsigned a, unsigned b) const {
  const auto& list = adj_[idx(a)];
  return std::binary_search(list.begin(), list.end(), b);
}

unsigned Architecture::distance(unsigned a, unsigned b) const { return dist_[idx(a)][idx(b)]; }

const std::vector<unsigned>& Architecture::neighbours(unsigned n) const { return adj_[idx(n)]; }

unsigned Architecture::max_degree() const {
  std::size_t best = 0;
  for (const auto& list : adj_) best = std::max(best, list.size());
  return static_cast<unsigned>(best);
}

std::vector<unsigned> Architecture::shortest_path(unsigned a, unsigned b) const {
  std::vector<unsigned> path{a};
  unsigned cur = a;
  while (cur != b) {
    // Smallest neighbour one step closer.
    for (unsigned nb : neighbours(cur)) {
      if (distance(nb, b) + 1 == distance(cur, b)) {
        cur = nb;
        break;
      }
    }
    path.push_back(cur);
  }
  return path;
}

void Architecture::set_errors(std::map<unsigned, NodeError> node_errors, std::map<Edge, double> edge_errors) {
  auto check = [](double p) {
    if (!(p >= 0. && p <= 1.)) fail(ErrorCode::InvalidArgument, "error rate outside [0, 1]");
  };
  for (const auto& [n, e] : node_errors) {
    idx(n);
    check(e.readout);
    check(e.gate_1q);
  }
  node_errors_.clear();
  for (const auto& [n, e] : node_errors) node_errors_[n] = e;
  edge_errors_.clear();
  for (const auto& [e, p] : edge_errors) {
    check(p);
    if (!adjacent(e.first, e.second)) fail(ErrorCode::InvalidArgument, "error data for a non-edge");
    edge_errors_[norm(e.first, e.second)] = p;
  }
  has_errors_ = true;
}

const NodeError& Architecture::node_error(unsigned n) const {
  if (!has_errors_) fail(ErrorCode::MissingErrorData, "architecture " + name_ + " has no error data");
  static const NodeError kZero;
  auto it = node_errors_.find(n);
  return it == node_errors_.end() ? kZero : it->second;
}

double Architecture::edge_error(unsigned a, unsigned b) const {
  if (!has_errors_) fail(ErrorCode::MissingErrorData, "architecture " + name_ + " has no error data");
  auto it = edge_errors_.find(norm(a, b));
  return it == edge_errors_.end() ? 0. : it->second;
}

Architecture Architecture::line(unsigned n) {
  std::vector<unsigned> nodes(n);
  std::vector<Edge> edges;
  for (unsigned i = 0; i < n; ++i) nodes[i] = i;
  for (unsigned i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Architecture("line:" + std::to_string(n), nodes, edges);
}

Architecture Architecture::ring(unsigned n) {
  std::vector<unsigned> nodes(n);
  std::vector<Edge> edges;
  for (unsigned i = 0; i < n; ++i) nodes[i] = i;
  if (n >= 2) {
    for (unsigned i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    if (n >= 3) edges.push_back({n - 1, 0});
  }
  return Architecture("ring:" + std::to_string(n), nodes, edges);
}

Architecture Architecture::grid(unsigned rows, unsigned cols) {
  std::vector<unsigned> nodes;
  std::vector<Edge> edges;
  for (unsigned r = 0; r < rows; ++r) {
    for (unsigned c = 0; c < cols; ++c) {
      unsigned id = r * cols + c;
      nodes.push_back(id);
      if (c + 1 < cols) edges.push_back({id, id + 1});
      if (r + 1 < rows) edges.push_back({id, id + cols});
    }
  }
  return Architecture("grid:" + std::to_string(rows) + "x" + std::to_string(cols), nodes, edges);
}

Architecture Architecture::complete(unsigned n) {
  std::vector<unsigned> nodes(n);
  std::vector<Edge> edges;
  for (unsigned i = 0; i < n; ++i) {
    nodes[i] = i;
    for (unsigned j = i + 1; j < n; ++j) edges.push_back({i, j});
  }
  return Architecture("complete:" + std::to_string(n), nodes, edges);
}

Architecture Architecture::builtin(const std::string& name) {
  const auto& files = embedded::files();
  auto it = files.find(name);
  if (it != files.end() && name != "clifford_rules") {
    return from_json(nlohmann::json::parse(it->second));
  }
  auto colon = name.find(':');
  if (colon != std::string::npos) {
    std::string kind = name.substr(0, colon);
    std::string arg = name.substr(colon + 1);
    if (kind == "line") return line(parse_count(arg, name));
    if (kind == "ring") return ring(parse_count(arg, name));
    if (kind == "complete") return complete(parse_count(arg, name));
    if (kind == "grid") {
      auto x = arg.find('x');
      if (x == std::string::npos) fail(ErrorCode::InvalidArgument, "bad architecture spec '" + name + "'");
      return grid(parse_count(arg.substr(0, x), name), parse_count(arg.substr(x + 1), name));
    }
  }
  fail(ErrorCode::InvalidArgument, "unknown architecture '" + name + "'");
}

Architecture Architecture::load(const std::string& name_or_path) {
  if (name_or_path.size() > 5 && name_or_path.substr(name_or_path.size() - 5) == ".json") {
    std::ifstream in(name_or_path);
    if (!in) fail(ErrorCode::Io, "cannot open " + name_or_path);
    try {
      return from_json(nlohmann::json::parse(in));
    } catch (const nlohmann::json::exception& e) {
      fail(ErrorCode::InvalidArgument, std::string("malformed architecture JSON: ") + e.what());
    }
  }
  return builtin(name_or_path);
}

Architecture Architecture::from_json(const nlohmann::json& j) {
  try {
    std::vector<unsigned> nodes = j.at("nodes").get<std::vector<unsigned>>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) edges.push_back({e.at(0).get<unsigned>(), e.at(1).get<unsigned>()});
    Architecture arch(j.value("name", std::string("custom")), nodes, edges);
    if (j.contains("node_errors") || j.contains("edge_errors")) {
      std::map<unsigned, NodeError> ne;
      std::map<Edge, double> ee;
      if (j.contains("node_errors")) {
        for (const auto& [key, val] : j.at("node_errors").items()) {
          NodeError e;
          e.readout = val.value("readout", 0.);
          e.gate_1q = val.value("gate_1q", 0.);
          ne[static_cast<unsigned>(std::stoul(key))] = e;
        }
      }
      if (j.contains("edge_errors")) {
        for (const auto& [key, val] : j.at("edge_errors").items()) {
          auto dash = key.find('-');
          if (dash == std::string::npos) fail(ErrorCode::InvalidArgument, "bad edge key '" + key + "'");
          ee[{static_cast<unsigned>(std::stoul(key.substr(0, dash))),
              static_cast<unsigned>(std::stoul(key.substr(dash + 1)))}] = val.get<double>();
        }
      }
      arch.set_errors(std::move(ne), std::move(ee));
    }
    return arch;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::InvalidArgument, std::string("malformed architecture JSON: ") + e.what());
  } catch (const std::logic_error& e) {
    fail(ErrorCode::InvalidArgument, std::string("malformed architecture JSON: ") + e.what());
  }
}

nlohmann::json Architecture::to_json() const {
  nlohmann::json j;
  j["name"] = name_;
  j["nodes"] = nodes_;
  j["edges"] = nlohmann::json::array();
  for (auto [a, b] : edges_) j["edges"].push_back({a, b});
  if (has_errors_) {
    j["node_errors"] = nlohmann::json::object();
    for (const auto& [n, e] : node_errors_) {
      j["node_errors"][std::to_string(n)] = {{"readout", e.readout}, {"gate_1q", e.gate_1q}};
    }
    j["edge_errors"] = nlohmann::json::object();
    for (const auto& [e, p] : edge_errors_) {
      j["edge_errors"][std::to_string(e.first) + "-" + std::to_string(e.second)] = p;
    }
  }
  return j;
}

}  // namespace qcc

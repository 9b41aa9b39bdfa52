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

#include <cctype>

#include "ir/Errors.hpp"
#include "passes/Library.hpp"

namespace qcc::passes {

namespace {

struct Node {
  std::string name;
  bool has_args = false;
  std::vector<Node> args;
  std::size_t pos = 0;
};

class SpecParser {
 public:
  explicit SpecParser(const std::string& s) : s_(s) {}

  std::vector<Node> parse() {
    std::vector<Node> items = list();
    skip_space();
    if (i_ != s_.size()) error("unexpected '" + std::string(1, s_[i_]) + "'");
    return items;
  }

 private:
  std::vector<Node> list() {
    std::vector<Node> out{item()};
    while (peek(',')) {
      ++i_;
      out.push_back(item());
    }
    return out;
  }

  Node item() {
    skip_space();
    Node n;
    n.pos = i_;
    while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) ||
                              s_[i_] == '_' || s_[i_] == '-' || s_[i_] == ':' || s_[i_] == '.'))
      n.name += s_[i_++];
    if (n.name.empty()) error("expected a pass name");
    if (peek('(')) {
      ++i_;
      n.has_args = true;
      if (!peek(')')) n.args = list();
      if (!peek(')')) error("expected ')'");
      ++i_;
    }
    return n;
  }

  bool peek(char ch) {
    skip_space();
    return i_ < s_.size() && s_[i_] == ch;
  }

  void skip_space() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorCode::InvalidArgument,
         "pass spec, column " + std::to_string(i_ + 1) + ": " + msg);
  }

  const std::string& s_;
  std::size_t i_ = 0;
};

class Builder {
 public:
  Builder(ArchitecturePtr arch, std::shared_ptr<RoutingRecord> sink)
      : arch_(std::move(arch)), sink_(std::move(sink)) {}

  Pass sequence(const std::vector<Node>& items) {
    if (items.size() == 1) return build(items[0]);
    std::vector<Pass> passes;
    for (const Node& n : items) passes.push_back(build(n));
    return Pass::sequence(passes);
  }

  Pass build(const Node& n) {
    const std::string& name = n.name;
    if (name == "repeat") {
      need_args(n, 1);
      return Pass::repeat(sequence(n.args));
    }
    if (name == "repeat_metric") {
      need_args(n, 2);
      std::optional<Metric> m = metric_from_name(word(n.args[0]));
      if (!m) error(n.args[0], "unknown metric '" + n.args[0].name + "'");
      return Pass::repeat_with_metric(
          sequence(std::vector<Node>(n.args.begin() + 1, n.args.end())), *m);
    }
    if (name == "rebase") {
      need_args(n, 1);
      std::vector<std::string> words;
      for (const Node& a : n.args) words.push_back(word(a));
      if (words.size() == 1) {
        if (auto t = target_from_name(words[0])) return rebase(*t);
      }
      return rebase(target_from_gates(words));
    }
    if (name == "finalise") {
      need_args(n, 1);
      auto t = target_from_name(word(n.args[0]));
      if (!t) error(n.args[0], "unknown target '" + n.args[0].name + "'");
      return finalise(*t);
    }
    if (name == "squash") {
      no_more_than(n, 1);
      if (n.args.empty()) return squash(EulerBasis::ZXZ);
      auto basis = euler_basis_from_name(word(n.args[0]));
      if (!basis) error(n.args[0], "unknown basis '" + n.args[0].name + "'");
      return squash(*basis);
    }
    if (name == "clifford_simp") return clifford_simp(flag(n));
    if (name == "full_peephole") return full_peephole(flag(n));
    if (name == "route") {
      no_more_than(n, 1);
      if (!arch_) error(n, "route needs an architecture other than full connectivity");
      PlacementMethod m = n.args.empty() ? PlacementMethod::Graph
                                         : placement_method_from_name(word(n.args[0]));
      return route(arch_, m, sink_);
    }
    no_more_than(n, 0);
    if (name == "decompose_boxes") return decompose_boxes();
    if (name == "remove_redundancies") return remove_redundancies();
    if (name == "commute_through_multis") return commute_through_multis();
    if (name == "kak" || name == "kak_resynthesis") return kak();
    if (name == "optimise_phase_gadgets") return optimise_phase_gadgets();
    if (name == "pauli_simp") return pauli_simp();
    if (name == "decompose_routing_ops") return decompose_routing_ops();
    if (name == "synthesise") return synthesise();
    error(n, "unknown pass '" + name + "'");
  }

 private:
  bool flag(const Node& n) {
    no_more_than(n, 1);
    if (n.args.empty()) return false;
    const std::string& w = word(n.args[0]);
    if (w == "allow_swaps" || w == "true") return true;
    if (w == "no_swaps" || w == "false") return false;
    error(n.args[0], "expected allow_swaps or no_swaps");
  }

  const std::string& word(const Node& n) {
    if (n.has_args) error(n, "'" + n.name + "' takes no arguments here");
    return n.name;
  }

  void need_args(const Node& n, std::size_t k) {
    if (n.args.size() < k) error(n, n.name + " needs at least " + std::to_string(k) + " argument(s)");
  }

  void no_more_than(const Node& n, std::size_t k) {
    if (n.args.size() > k) error(n, n.name + " takes at most " + std::to_string(k) + " argument(s)");
  }

  [[noreturn]] void error(const Node& n, const std::string& msg) {
    fail(ErrorCode::InvalidArgument, "pass spec, column " + std::to_string(n.pos + 1) + ": " + msg);
  }

  ArchitecturePtr arch_;
  std::shared_ptr<RoutingRecord> sink_;
};

}  // namespace

std::vector<std::string> pass_names() {
  return {"decompose_boxes",     "rebase",        "remove_redundancies",
          "commute_through_multis", "squash",     "kak",
          "clifford_simp",       "optimise_phase_gadgets", "pauli_simp",
          "route",               "decompose_routing_ops",  "full_peephole",
          "synthesise",          "finalise",      "repeat",
          "repeat_metric"};
}

Pass parse_pass_spec(const std::string& spec, ArchitecturePtr arch,
                     std::shared_ptr<RoutingRecord> sink) {
  SpecParser parser(spec);
  std::vector<Node> items = parser.parse();
  return Builder(std::move(arch), std::move(sink)).sequence(items);
}

}  // namespace qcc::passes

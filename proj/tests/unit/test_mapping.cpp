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

#include <doctest.h>

#include "ir/Errors.hpp"
#include "mapping/Architecture.hpp"
#include "mapping/Placement.hpp"
#include "mapping/Routing.hpp"
#include "passes/Predicate.hpp"
#include "sim/Unitary.hpp"
#include "support/Helpers.hpp"

using namespace qcc;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

/** Six-cycle with one chord: embeds in a 2x3 grid without swaps. */
Circuit hexagon_with_chord() {
  Circuit c(6);
  for (unsigned i = 0; i < 6; ++i) {
    c.add_op(OpType::H, {i});
    c.add_op(OpType::CX, {i, (i + 1) % 6});
  }
  c.add_op(OpType::CX, {1, 4});
  c.add_op(OpType::T, {4});
  return c;
}

Circuit two_qubit_random(unsigned n, unsigned gates, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<unsigned> qd(0, n - 1);
  std::uniform_int_distribution<int> pick(0, 5);
  Circuit c(n);
  for (unsigned k = 0; k < gates; ++k) {
    unsigned a = qd(rng), b = qd(rng);
    while (b == a) b = qd(rng);
    switch (pick(rng)) {
      case 0:
      case 1: c.add_op(OpType::CX, {a, b}); break;
      case 2: c.add_op(OpType::T, {a}); break;
      case 3: c.add_op(OpType::H, {a}); break;
      case 4: c.add_op(OpType::Ry, {a}, {Angle::real(0.3)}); break;
      default: c.add_op(OpType::CZ, {a, b}); break;
    }
  }
  return c;
}

void check_routed(const Circuit& source, const ArchitecturePtr& arch, const PlacementMap& pm) {
  RoutingResult r = route(source, *arch, pm);
  CHECK(Predicate::connectivity(arch).check(r.circuit));
  Circuit ref = routing_reference(source, r);
  CHECK(equiv_up_to_phase(ref, r.circuit, r.permutation));
  Circuit d = r.circuit;
  decompose_routing_ops(d);
  CHECK(Predicate::connectivity(arch).check(d));
  CHECK(d.count([](const Op& op) {
          return op.type() == OpType::SWAP || op.type() == OpType::Bridge;
        }) == 0);
  CHECK(equiv_up_to_phase(ref, d, r.permutation));
}

}  // namespace

TEST_CASE("generated architectures") {
  Architecture line = Architecture::line(5);
  CHECK(line.n_nodes() == 5);
  CHECK(line.edges().size() == 4);
  CHECK(line.distance(0, 4) == 4);
  CHECK(line.shortest_path(0, 3) == std::vector<unsigned>{0, 1, 2, 3});
  Architecture ring = Architecture::ring(6);
  CHECK(ring.distance(0, 5) == 1);
  CHECK(ring.distance(0, 3) == 3);
  Architecture grid = Architecture::grid(3, 3);
  CHECK(grid.n_nodes() == 9);
  CHECK(grid.edges().size() == 12);
  CHECK(grid.max_degree() == 4);
  CHECK(grid.distance(0, 8) == 4);
  CHECK(Architecture::complete(4).edges().size() == 6);
}

TEST_CASE("named devices") {
  CHECK(Architecture::builtin("rochester").n_nodes() == 53);
  CHECK(Architecture::builtin("sycamore").n_nodes() == 53);
  CHECK(Architecture::builtin("aspen").n_nodes() == 16);
  CHECK(Architecture::builtin("grid:2x4").n_nodes() == 8);
  CHECK(Architecture::builtin("line:3").edges().size() == 2);
  CHECK(code_of([] { Architecture::builtin("nowhere"); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("architecture validation and json") {
  CHECK(code_of([] { Architecture("x", {0, 1}, {{0, 0}}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { Architecture("x", {0, 1, 2}, {{0, 1}}); }) == ErrorCode::InvalidArgument);
  Architecture a = Architecture::ring(5);
  a.set_errors({{0, {0.01, 0.001}}}, {{{0, 1}, 0.02}});
  Architecture b = Architecture::from_json(a.to_json());
  CHECK(b.edges() == a.edges());
  CHECK(b.has_error_data());
  CHECK(b.edge_error(1, 0) == doctest::Approx(0.02));
  CHECK(code_of([] { Architecture::line(3).edge_error(0, 1); }) == ErrorCode::MissingErrorData);
}

TEST_CASE("interaction graph") {
  Circuit c(3);
  c.add_op(OpType::CX, {0, 1});
  c.add_op(OpType::CX, {1, 2});
  c.add_op(OpType::CX, {0, 1});
  InteractionGraph g = interaction_graph(c);
  CHECK(g.weight.at({0, 1}) == 2);
  CHECK(g.first_slice.at({0, 1}) == 0);
  CHECK(g.first_slice.at({1, 2}) == 1);
}

TEST_CASE("graph placement embeds a six-cycle with chord on a 3x3 grid") {
  auto grid = std::make_shared<const Architecture>(Architecture::grid(3, 3));
  Circuit c = hexagon_with_chord();
  PlacementMap pm = place(c, *grid, PlacementMethod::Graph);
  REQUIRE(pm.size() == 6);
  for (auto [e, w] : interaction_graph(c).weight) CHECK(grid->adjacent(pm.at(e.first), pm.at(e.second)));
  RoutingResult r = route(c, *grid, pm);
  CHECK(r.swaps == 0);
  CHECK(r.bridges == 0);
  CHECK(Predicate::connectivity(grid).check(r.circuit));
}

TEST_CASE("placement drops late edges when no embedding exists") {
  // A triangle cannot embed in a line; one edge is given up.
  Circuit c(3);
  c.add_op(OpType::CX, {0, 1});
  c.add_op(OpType::CX, {1, 2});
  c.add_op(OpType::CX, {0, 2});
  Architecture line = Architecture::line(4);
  auto maps = graph_placement(c, line);
  REQUIRE_FALSE(maps.empty());
  const PlacementMap& pm = maps.front();
  CHECK(line.adjacent(pm.at(0), pm.at(1)));
  CHECK(line.adjacent(pm.at(1), pm.at(2)));
}

TEST_CASE("placement errors") {
  Circuit big(10);
  big.add_op(OpType::CX, {0, 9});
  CHECK(code_of([&] { place(big, Architecture::line(4), PlacementMethod::Graph); }) ==
        ErrorCode::TooManyQubits);
  Circuit c(2);
  c.add_op(OpType::CX, {0, 1});
  CHECK(code_of([&] { place(c, Architecture::line(4), PlacementMethod::NoiseAware); }) ==
        ErrorCode::MissingErrorData);
  CHECK(placement_method_from_name("noise-aware") == PlacementMethod::NoiseAware);
  CHECK(placement_method_from_name("graph") == PlacementMethod::Graph);
  CHECK(code_of([] { placement_method_from_name("magic"); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("noise-aware placement prefers reliable links") {
  Architecture a = Architecture::line(4);
  a.set_errors({}, {{{0, 1}, 0.2}, {{1, 2}, 0.2}, {{2, 3}, 0.001}});
  Circuit c(2);
  c.add_op(OpType::CX, {0, 1});
  PlacementMap pm = place(c, a, PlacementMethod::NoiseAware);
  std::set<unsigned> used{pm.at(0), pm.at(1)};
  CHECK(used == std::set<unsigned>{2, 3});
}

TEST_CASE("routing on a line inserts swaps or bridges and stays equivalent") {
  auto line = std::make_shared<const Architecture>(Architecture::line(4));
  Circuit c(4);
  c.add_op(OpType::CX, {0, 3});
  c.add_op(OpType::CX, {1, 3});
  c.add_op(OpType::CX, {0, 2});
  RoutingResult r = route(c, *line, {{0, 0}, {1, 1}, {2, 2}, {3, 3}});
  CHECK(r.swaps + r.bridges > 0);
  check_routed(c, line, {{0, 0}, {1, 1}, {2, 2}, {3, 3}});
}

TEST_CASE("a distance-two CX becomes a bridge") {
  auto line = std::make_shared<const Architecture>(Architecture::line(3));
  Circuit c(3);
  c.add_op(OpType::CX, {0, 2});
  RoutingResult r = route(c, *line, {{0, 0}, {1, 1}, {2, 2}});
  CHECK(r.bridges == 1);
  CHECK(r.swaps == 0);
  check_routed(c, line, {{0, 0}, {1, 1}, {2, 2}});
}

TEST_CASE("bridge and swap decompositions are exact") {
  Circuit b(3);
  b.add_op(OpType::Bridge, {0, 1, 2});
  Circuit cx(3);
  cx.add_op(OpType::CX, {0, 2});
  CHECK(phase_distance(circuit_unitary(b), circuit_unitary(cx)) < 1e-12);
  Circuit bd = b;
  decompose_routing_ops(bd);
  CHECK(bd.two_qubit_gate_count() == 4);
  CHECK(phase_distance(circuit_unitary(bd), circuit_unitary(cx)) < 1e-12);
  Circuit s(2);
  s.add_op(OpType::SWAP, {0, 1});
  Circuit sd = s;
  decompose_routing_ops(sd);
  CHECK(sd.count([](const Op& op) { return op.type() == OpType::CX; }) == 3);
  CHECK(phase_distance(circuit_unitary(s), circuit_unitary(sd)) < 1e-12);
}

TEST_CASE("routing random circuits on several devices") {
  for (const char* name : {"grid:3x3", "line:7", "ring:7", "aspen", "rochester", "sycamore"}) {
    auto arch = std::make_shared<const Architecture>(Architecture::builtin(name));
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
      Circuit c = two_qubit_random(3 + seed % 5, 40, seed);
      PlacementMap pm = seed % 2 ? place(c, *arch, PlacementMethod::Graph) : PlacementMap{};
      check_routed(c, arch, pm);
    }
  }
}

TEST_CASE("routing honours an existing implicit permutation") {
  auto ring = std::make_shared<const Architecture>(Architecture::ring(5));
  Circuit c = two_qubit_random(5, 30, 99);
  c.permute_outputs({{{"q", 0}, {"q", 1}}, {{"q", 1}, {"q", 0}}});
  check_routed(c, ring, place(c, *ring, PlacementMethod::Graph));
}

TEST_CASE("routing rejects wide gates and boxes") {
  Architecture line = Architecture::line(4);
  Circuit c(3);
  c.add_op(OpType::CCX, {0, 1, 2});
  CHECK(code_of([&] { route(c, line, {}); }) == ErrorCode::UnsupportedGate);
  Circuit b(2);
  b.add_op(Op::pauli_exp_box(parse_pauli_string("XX"), Angle::exact(1, 2)),
           std::vector<unsigned>{0, 1});
  CHECK(code_of([&] { route(b, line, {}); }) == ErrorCode::BoxesPresent);
}

TEST_CASE("routing output uses device node names") {
  Architecture grid = Architecture::grid(3, 3);
  Circuit c = hexagon_with_chord();
  RoutingResult r = route(c, grid, place(c, grid, PlacementMethod::Graph));
  for (const UnitID& q : r.circuit.qubits()) {
    CHECK(q.reg == "node");
    CHECK(grid.has_node(q.index));
  }
  CHECK(r.initial_map.size() == 6);
}

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
#include "passes/Library.hpp"
#include "passes/Pass.hpp"
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

Pass emitter(const std::string& name, GateSet gates) {
  Contract k;
  k.post = {Predicate::gate_set(gates)};
  k.introduced = gates;
  return Pass(name, [](Circuit&) { return false; }, k);
}

Pass requirer(const std::string& name, std::vector<Predicate> pre,
              std::set<PredicateKind> preserves = {}) {
  Contract k;
  k.pre = std::move(pre);
  k.preserves = std::move(preserves);
  return Pass(name, [](Circuit&) { return false; }, k);
}

const GateSet kCxRzRx{OpType::CX, OpType::Rz, OpType::Rx};

}  // namespace

TEST_CASE("gate set predicate") {
  Circuit c(2);
  c.add_op(OpType::CX, {0, 1});
  c.add_op(OpType::Rz, {0}, {Angle::exact(1, 3)});
  CHECK(Predicate::gate_set(kCxRzRx).check(c));
  c.add_op(OpType::H, {1});
  CHECK_FALSE(Predicate::gate_set(kCxRzRx).check(c));
}

TEST_CASE("no symbols, no boxes, mid-circuit measure predicates") {
  Circuit c(2, 1);
  c.add_op(OpType::H, {0});
  CHECK(Predicate::no_symbols().check(c));
  CHECK(Predicate::no_boxes().check(c));
  c.add_op(Op(OpType::Measure), std::vector<unsigned>{0}, std::vector<unsigned>{0});
  CHECK(Predicate::no_mid_circuit_measure().check(c));
  c.add_op(OpType::X, {0});
  CHECK_FALSE(Predicate::no_mid_circuit_measure().check(c));
  Circuit s(1);
  s.add_op(OpType::Rz, {0}, {Angle::symbol("a")});
  CHECK_FALSE(Predicate::no_symbols().check(s));
}

TEST_CASE("connectivity requires placed units on adjacent nodes") {
  auto line = std::make_shared<const Architecture>(Architecture::line(3));
  Predicate conn = Predicate::connectivity(line);
  Circuit unplaced(2);
  unplaced.add_op(OpType::CX, {0, 1});
  CHECK_FALSE(conn.check(unplaced));
  Circuit placed;
  for (unsigned n : {0u, 1u, 2u}) placed.add_qubit(Architecture::node_unit(n));
  placed.add_op(OpType::CX, {0, 1});
  CHECK(conn.check(placed));
  placed.add_op(OpType::CX, {0, 2});
  CHECK_FALSE(conn.check(placed));
}

TEST_CASE("gate set entailment is subset reasoning") {
  Predicate small = Predicate::gate_set({OpType::CX, OpType::Rz});
  Predicate big = Predicate::gate_set(kCxRzRx);
  CHECK(small.entails(big));
  CHECK_FALSE(big.entails(small));
  Predicate cz = Predicate::gate_set({OpType::CZ, OpType::Rz, OpType::Rx});
  CHECK(cz.conflicts(big));
  CHECK_FALSE(small.conflicts(big));
}

TEST_CASE("strict apply checks preconditions") {
  Pass p = requirer("needs_cx_rz_rx", {Predicate::gate_set(kCxRzRx)});
  Circuit c(3);
  c.add_op(OpType::CCX, {0, 1, 2});
  CHECK(code_of([&] { p.apply(c, true); }) == ErrorCode::PreconditionFailed);
  CHECK_NOTHROW(p.apply(c, false));
}

TEST_CASE("strict apply asserts postconditions") {
  Contract k;
  k.post = {Predicate::gate_set(kCxRzRx)};
  Pass liar("liar", [](Circuit& c) {
    c.add_op(OpType::H, {0});
    return true;
  }, k);
  Circuit c(1);
  CHECK(code_of([&] { liar.apply(c, true); }) == ErrorCode::PostconditionFailed);
}

TEST_CASE("sequence composes contracts") {
  Pass seq = Pass::sequence({passes::rebase(*target_from_name("cx-rzrx")), passes::clifford_simp()});
  bool has_gate_set = false;
  for (const Predicate& p : seq.contract().post)
    if (p.kind() == PredicateKind::GateSet) has_gate_set = true;
  CHECK(has_gate_set);
}

TEST_CASE("sequence propagates uncovered preconditions") {
  Pass seq = Pass::sequence({passes::kak(), requirer("needs_symbols_free", {Predicate::no_symbols()})});
  bool found = false;
  for (const Predicate& p : seq.contract().pre)
    if (p.kind() == PredicateKind::NoSymbols) found = true;
  CHECK(found);
}

TEST_CASE("conflicting gate sets are an incompatible composition") {
  Pass cz = emitter("emit_cz", {OpType::CZ, OpType::Rz, OpType::Rx});
  Pass cx = requirer("needs_cx", {Predicate::gate_set(kCxRzRx)}, {PredicateKind::GateSet});
  CHECK(code_of([&] { Pass::sequence({cz, cx}); }) == ErrorCode::IncompatibleComposition);
  CHECK(code_of([] {
          Pass::sequence({passes::rebase(*target_from_name("cz-rxrz")),
                          passes::optimise_phase_gadgets()});
        }) == ErrorCode::IncompatibleComposition);
}

TEST_CASE("precondition not maintained by the prefix") {
  Contract k;
  k.introduced = {OpType::H};
  Pass breaks("breaks", [](Circuit&) { return false; }, k);
  Pass needs = requirer("needs_boxes_free", {Predicate::no_boxes()});
  CHECK(code_of([&] { Pass::sequence({breaks, needs}); }) == ErrorCode::IncompatibleComposition);
}

TEST_CASE("remove redundancies on X X empties the circuit") {
  Circuit c(1);
  c.add_op(OpType::X, {0});
  c.add_op(OpType::X, {0});
  CHECK(passes::remove_redundancies().apply(c, true).changed);
  CHECK(c.gate_count() == 0);
}

TEST_CASE("repeat reaches a fixed point") {
  Circuit c(1);
  for (int i = 0; i < 4; ++i) c.add_op(OpType::X, {0});
  PassOutcome o = Pass::repeat(passes::remove_redundancies()).apply(c, true);
  CHECK(c.gate_count() == 0);
  CHECK(o.fixpoint);
  CHECK(o.iterations <= 2);

  Circuit m(1);
  m.add_op(OpType::H, {0});
  PassOutcome o2 = Pass::repeat(passes::remove_redundancies()).apply(m, true);
  CHECK(o2.iterations == 1);
  CHECK(o2.fixpoint);
  CHECK_FALSE(o2.changed);
}

TEST_CASE("repeat cap is reported, not an error") {
  Pass always("always", [](Circuit&) { return true; }, Contract{});
  Circuit c(1);
  PassOutcome o = Pass::repeat(always, 5).apply(c);
  CHECK(o.iterations == 5);
  CHECK_FALSE(o.fixpoint);
  CHECK(code_of([&] { Pass::repeat(always, 0); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("repeat_with_metric keeps one non-improving application") {
  int calls = 0;
  Pass grow("grow", [&calls](Circuit& c) {
    ++calls;
    c.add_op(OpType::H, {0});
    return true;
  }, Contract{});
  Circuit c(1);
  PassOutcome o = Pass::repeat_with_metric(grow, Metric::GateCount).apply(c);
  CHECK(c.gate_count() == 1);
  CHECK(calls == 2);
  CHECK(o.iterations == 2);
}

TEST_CASE("repeat_with_metric terminates and does not increase the metric") {
  Pass body = Pass::sequence({passes::clifford_simp(), passes::remove_redundancies()});
  Pass loop = Pass::repeat_with_metric(body, Metric::GateCount);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Circuit c = test::rich_random_circuit(4, 40, seed);
    passes::rebase(internal_target()).apply(c);
    Circuit before = c;
    std::size_t g = c.gate_count();
    body.apply(before);
    PassOutcome o = loop.apply(c, true);
    CHECK(o.iterations <= g + 1);
    CHECK(c.gate_count() == std::min(before.gate_count(), c.gate_count()));
    CHECK(equiv_up_to_phase(before, c));
  }
}

TEST_CASE("metric names") {
  CHECK(metric_from_name("gate_count") == Metric::GateCount);
  CHECK(metric_from_name("two_qubit_gate_count") == Metric::TwoQubitGateCount);
  CHECK(metric_from_name("depth") == Metric::Depth);
  CHECK_FALSE(metric_from_name("cost").has_value());
}

TEST_CASE("pass spec mini-language") {
  Pass p = passes::parse_pass_spec(
      "rebase(cx,rz,rx),repeat_metric(gate_count, clifford_simp, remove_redundancies)");
  Circuit c = test::rich_random_circuit(3, 30, 11);
  Circuit ref = c;
  p.apply(c, true);
  CHECK(Predicate::gate_set(kCxRzRx).check(c));
  CHECK(equiv_up_to_phase(ref, c));
  CHECK_NOTHROW(passes::parse_pass_spec("repeat(remove_redundancies, squash(zxz)), kak"));
}

TEST_CASE("pass spec errors carry a column") {
  try {
    passes::parse_pass_spec("rebase(cx,rz,rx),,kak");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidArgument);
    CHECK(std::string(e.what()).find("column") != std::string::npos);
  }
  CHECK(code_of([] { passes::parse_pass_spec("no_such_pass"); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { passes::parse_pass_spec("route"); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { passes::parse_pass_spec("rebase(cx,foo)"); }) == ErrorCode::UnsupportedTarget);
}

TEST_CASE("every shipped pass preserves the unitary") {
  std::vector<Pass> list = {passes::decompose_boxes(),       passes::remove_redundancies(),
                            passes::commute_through_multis(), passes::squash(EulerBasis::ZXZ),
                            passes::kak(),                   passes::clifford_simp(),
                            passes::pauli_simp(),            passes::synthesise(),
                            passes::full_peephole(false),    passes::full_peephole(true)};
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Circuit base = test::rich_random_circuit(4, 40, seed);
    passes::rebase(internal_target()).apply(base);
    for (const Pass& p : list) {
      Circuit c = base;
      p.apply(c);
      CHECK_MESSAGE(equiv_up_to_phase(base, c), p.name() << " seed " << seed);
    }
  }
}

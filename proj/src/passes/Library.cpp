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

#include "passes/Library.hpp"

#include <algorithm>
#include <cctype>

#include "gadget/PauliSimp.hpp"
#include "gadget/PhaseGadget.hpp"
#include "ir/Boxes.hpp"
#include "ir/Errors.hpp"
#include "peephole/CliffordSimp.hpp"
#include "peephole/Transforms.hpp"

namespace qcc::passes {

namespace {

using K = PredicateKind;

const std::set<K> kAll = {K::GateSet,   K::Connectivity,        K::NoBoxes,
                          K::NoSymbols, K::NoMidCircuitMeasure, K::MaxTwoQubitGates};

Contract local_rewrite(GateSet introduced) {
  Contract k;
  k.pre = {Predicate::no_boxes()};
  k.preserves = kAll;
  k.introduced = std::move(introduced);
  return k;
}

const GateSet kInternal = {OpType::CX, OpType::Rz, OpType::Rx};

}  // namespace

const GateSet& clifford_rotation_gates() {
  static const GateSet gates = {OpType::CX,  OpType::CZ,  OpType::SWAP, OpType::H,  OpType::S,
                                OpType::Sdg, OpType::X,   OpType::Y,    OpType::Z,  OpType::T,
                                OpType::Tdg, OpType::Rz,  OpType::Rx,   OpType::Ry, OpType::U1,
                                OpType::U2,  OpType::U3,  OpType::PhasedX};
  return gates;
}

Pass decompose_boxes() {
  Contract k;
  k.post = {Predicate::no_boxes()};
  k.preserves = {K::NoSymbols, K::NoMidCircuitMeasure};
  return Pass("decompose_boxes", decompose_boxes_inplace, k);
}

Pass rebase(const Target& target) {
  Contract k;
  k.pre = {Predicate::no_boxes()};
  k.post = {Predicate::gate_set(target.gates)};
  k.preserves = {K::Connectivity, K::NoBoxes, K::NoSymbols, K::NoMidCircuitMeasure};
  k.introduced = target.gates;
  return Pass("rebase(" + target.name + ")", [target](Circuit& c) { return qcc::rebase(c, target); },
              k);
}

Pass remove_redundancies() {
  return Pass("remove_redundancies", qcc::remove_redundancies, local_rewrite({}));
}

Pass commute_through_multis() {
  return Pass("commute_through_multis", qcc::commute_through_multis, local_rewrite({}));
}

Pass squash(EulerBasis basis) {
  GateSet gates = euler_basis_gates(basis);
  return Pass("squash(" + euler_basis_name(basis) + ")",
              [basis](Circuit& c) { return squash_1q(c, basis); }, local_rewrite(gates));
}

Pass kak() { return Pass("kak", kak_resynthesise, local_rewrite(kInternal)); }

Pass clifford_simp(bool allow_swaps) {
  Contract k = local_rewrite(kInternal);
  k.pre.push_back(Predicate::gate_set(clifford_rotation_gates()));
  if (allow_swaps) k.preserves.erase(K::Connectivity);
  return Pass(allow_swaps ? "clifford_simp(allow_swaps)" : "clifford_simp",
              [allow_swaps](Circuit& c) { return qcc::clifford_simp(c, allow_swaps); }, k);
}

Pass optimise_phase_gadgets() {
  Contract k = local_rewrite({OpType::CX, OpType::Rz});
  k.pre.push_back(Predicate::gate_set({OpType::CX, OpType::Rz, OpType::Rx, OpType::H, OpType::S,
                                       OpType::Sdg, OpType::X, OpType::Y, OpType::Z, OpType::T,
                                       OpType::Tdg}));
  k.preserves.erase(K::Connectivity);
  return Pass("optimise_phase_gadgets", qcc::optimise_phase_gadgets, k);
}

Pass pauli_simp() {
  Contract k = local_rewrite({OpType::CX, OpType::H, OpType::S, OpType::Sdg, OpType::X, OpType::Z,
                              OpType::Rx, OpType::Rz});
  k.pre.push_back(Predicate::gate_set(clifford_rotation_gates()));
  k.preserves.erase(K::Connectivity);
  k.preserves.erase(K::MaxTwoQubitGates);
  return Pass("pauli_simp", qcc::pauli_simp, k);
}

Pass route(ArchitecturePtr arch, PlacementMethod placement, std::shared_ptr<RoutingRecord> sink,
           unsigned lookahead) {
  if (!arch) fail(ErrorCode::InvalidArgument, "route needs an architecture");
  Contract k;
  k.pre = {Predicate::no_boxes()};
  k.post = {Predicate::connectivity(arch)};
  k.preserves = {K::GateSet, K::NoBoxes, K::NoSymbols};
  k.introduced = {OpType::SWAP, OpType::Bridge};
  return Pass(
      "route(" + arch->name() + ")",
      [arch, placement, sink, lookahead](Circuit& c) {
        PlacementMap initial = place(c, *arch, placement);
        RoutingResult r = qcc::route(c, *arch, initial, lookahead);
        c = r.circuit;
        if (sink) {
          sink->valid = true;
          sink->result = std::move(r);
        }
        return true;
      },
      k);
}

Pass decompose_routing_ops() {
  Contract k;
  k.preserves = kAll;
  k.preserves.erase(K::MaxTwoQubitGates);
  k.introduced = {OpType::CX};
  return Pass("decompose_routing_ops", qcc::decompose_routing_ops, k);
}

Pass full_peephole(bool allow_swaps) {
  Pass body = Pass::sequence({squash(EulerBasis::ZXZ), commute_through_multis(),
                              remove_redundancies(), kak(), clifford_simp(allow_swaps),
                              remove_redundancies()});
  return Pass::repeat_with_metric(body, Metric::GateCount);
}

Pass synthesise() {
  Target cxu = *target_from_name("cx-u");
  Pass body = Pass::sequence(
      {commute_through_multis(), remove_redundancies(), squash(EulerBasis::U)});
  return Pass::sequence({rebase(cxu), Pass::repeat_with_metric(body, Metric::GateCount)});
}

Pass finalise(const Target& target) {
  return Pass::sequence({rebase(target), squash(target.basis), remove_redundancies()});
}

Target target_from_gates(const std::vector<std::string>& gate_names) {
  GateSet wanted;
  std::string joined;
  for (const std::string& g : gate_names) {
    auto lower_case = [](std::string_view in) {
      std::string out(in);
      std::transform(out.begin(), out.end(), out.begin(),
                     [](unsigned char ch) { return std::tolower(ch); });
      return out;
    };
    std::string lower = lower_case(g);
    std::optional<OpType> t;
    for (int i = 0; i <= static_cast<int>(OpType::Bridge); ++i)
      if (lower_case(op_info(static_cast<OpType>(i)).name) == lower) t = static_cast<OpType>(i);
    if (!t) fail(ErrorCode::UnsupportedTarget, "unknown gate '" + g + "' in rebase target");
    wanted.insert(*t);
    joined += (joined.empty() ? "" : ",") + lower;
  }
  for (const std::string& name : target_names()) {
    Target t = *target_from_name(name);
    if (t.gates == wanted) return t;
  }
  if (internal_target().gates == wanted) return internal_target();
  fail(ErrorCode::UnsupportedTarget, "no rebase target for gate set {" + joined + "}");
}

}  // namespace qcc::passes

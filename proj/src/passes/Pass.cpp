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

#include "passes/Pass.hpp"

#include <algorithm>

#include "harness/Deadline.hpp"
#include "ir/Errors.hpp"

namespace qcc {

std::size_t metric_value(Metric m, const Circuit& c) {
  switch (m) {
    case Metric::GateCount: return c.gate_count();
    case Metric::TwoQubitGateCount: return c.two_qubit_gate_count();
    case Metric::Depth: return c.depth();
  }
  return 0;
}

std::string metric_name(Metric m) {
  switch (m) {
    case Metric::GateCount: return "gate_count";
    case Metric::TwoQubitGateCount: return "two_qubit_gate_count";
    case Metric::Depth: return "depth";
  }
  return "?";
}

std::optional<Metric> metric_from_name(const std::string& name) {
  if (name == "gate_count") return Metric::GateCount;
  if (name == "two_qubit_gate_count" || name == "cx_count") return Metric::TwoQubitGateCount;
  if (name == "depth") return Metric::Depth;
  return std::nullopt;
}

Pass::Pass(std::string name, Transform transform, Contract contract)
    : Pass(
          name,
          [transform](Circuit& c, bool) {
            PassOutcome out;
            out.changed = transform(c);
            return out;
          },
          std::move(contract), 0) {}

Pass::Pass(std::string name, Runner run, Contract contract, int)
    : impl_(std::make_shared<const Impl>(Impl{std::move(name), std::move(run), std::move(contract)})) {}

PassOutcome Pass::apply(Circuit& c, bool strict) const {
  check_deadline();
  if (strict) {
    for (const Predicate& p : contract().pre) {
      if (!p.check(c)) {
        fail(ErrorCode::PreconditionFailed, name() + ": precondition " + p.name() + " does not hold");
      }
    }
  }
  PassOutcome out = impl_->run(c, strict);
  if (strict) {
    for (const Predicate& p : contract().post) {
      if (!p.check(c)) {
        fail(ErrorCode::PostconditionFailed, name() + ": postcondition " + p.name() + " violated");
      }
    }
  }
  return out;
}

bool Pass::preserves(const Predicate& p) const {
  const Contract& k = contract();
  if (!k.preserves.count(p.kind())) return false;
  if (p.kind() == PredicateKind::GateSet) {
    return std::includes(p.gates().begin(), p.gates().end(), k.introduced.begin(), k.introduced.end());
  }
  return true;
}

namespace {

void add_unique(std::vector<Predicate>& list, const Predicate& p) {
  for (const Predicate& q : list)
    if (q.entails(p)) return;
  list.push_back(p);
}

}  // namespace

Pass Pass::sequence(const std::vector<Pass>& passes) {
  if (passes.empty()) {
    Contract k;
    k.preserves = {PredicateKind::GateSet, PredicateKind::Connectivity, PredicateKind::NoBoxes,
                   PredicateKind::NoSymbols, PredicateKind::NoMidCircuitMeasure,
                   PredicateKind::MaxTwoQubitGates};
    return Pass("identity", [](Circuit&) { return false; }, k);
  }
  Contract k;
  k.pre = passes[0].contract().pre;
  std::vector<Predicate> guaranteed;
  for (std::size_t i = 0; i < passes.size(); ++i) {
    const Pass& p = passes[i];
    if (i > 0) {
      for (const Predicate& need : p.contract().pre) {
        bool covered = std::any_of(guaranteed.begin(), guaranteed.end(),
                                   [&](const Predicate& g) { return g.entails(need); });
        if (covered) continue;
        for (const Predicate& g : guaranteed) {
          if (g.conflicts(need)) {
            fail(ErrorCode::IncompatibleComposition,
                 "pass " + std::to_string(i) + " (" + p.name() + ") requires " + need.name() +
                     " but an earlier pass guarantees " + g.name());
          }
        }
        bool carried = true;
        for (std::size_t j = 0; j < i; ++j) carried = carried && passes[j].preserves(need);
        if (!carried) {
          fail(ErrorCode::IncompatibleComposition,
               "pass " + std::to_string(i) + " (" + p.name() + ") requires " + need.name() +
                   ", which is not maintained by the passes before it");
        }
        add_unique(k.pre, need);
      }
    }
    std::vector<Predicate> next;
    for (const Predicate& g : guaranteed)
      if (p.preserves(g)) add_unique(next, g);
    for (const Predicate& g : p.contract().pre)
      if (p.preserves(g)) add_unique(next, g);
    for (const Predicate& g : p.contract().post) add_unique(next, g);
    guaranteed = std::move(next);
  }
  k.post = guaranteed;
  k.preserves = passes[0].contract().preserves;
  for (const Pass& p : passes) {
    std::set<PredicateKind> both;
    for (PredicateKind kind : k.preserves)
      if (p.contract().preserves.count(kind)) both.insert(kind);
    k.preserves = both;
    k.introduced.insert(p.contract().introduced.begin(), p.contract().introduced.end());
  }
  std::string name = "sequence(";
  for (std::size_t i = 0; i < passes.size(); ++i) name += (i ? ", " : "") + passes[i].name();
  name += ")";
  std::vector<Pass> list = passes;
  return Pass(
      name,
      [list](Circuit& c, bool strict) {
        PassOutcome out;
        for (const Pass& p : list) out.changed = p.apply(c, strict).changed || out.changed;
        return out;
      },
      k, 0);
}

Pass Pass::repeat(const Pass& p, unsigned max_iterations) {
  if (max_iterations == 0) fail(ErrorCode::InvalidArgument, "repeat needs at least one iteration");
  return Pass(
      "repeat(" + p.name() + ")",
      [p, max_iterations](Circuit& c, bool strict) {
        PassOutcome out;
        out.iterations = 0;
        out.fixpoint = false;
        while (out.iterations < max_iterations) {
          ++out.iterations;
          if (!p.apply(c, strict).changed) {
            out.fixpoint = true;
            break;
          }
          out.changed = true;
        }
        return out;
      },
      p.contract(), 0);
}

Pass Pass::repeat_with_metric(const Pass& p, Metric metric) {
  return Pass(
      "repeat_metric(" + metric_name(metric) + ", " + p.name() + ")",
      [p, metric](Circuit& c, bool strict) {
        PassOutcome out;
        out.iterations = 1;
        out.changed = p.apply(c, strict).changed;
        std::size_t current = metric_value(metric, c);
        while (true) {
          Circuit trial = c;
          ++out.iterations;
          bool changed = p.apply(trial, strict).changed;
          std::size_t value = metric_value(metric, trial);
          if (!changed || value >= current) break;
          c = std::move(trial);
          current = value;
          out.changed = true;
        }
        return out;
      },
      p.contract(), 0);
}

}  // namespace qcc

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

#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "passes/Predicate.hpp"

namespace qcc {

enum class Metric { GateCount, TwoQubitGateCount, Depth };

std::size_t metric_value(Metric m, const Circuit& c);
std::string metric_name(Metric m);
std::optional<Metric> metric_from_name(const std::string& name);

/**
 * Hoare-style contract. `preserves` lists predicate kinds that stay true if
 * they held before; for GateSet this additionally requires `introduced` (the
 * gates the pass may create) to fit inside the set.
 */
struct Contract {
  std::vector<Predicate> pre;
  std::vector<Predicate> post;
  std::set<PredicateKind> preserves;
  GateSet introduced;
};

struct PassOutcome {
  bool changed = false;
  /** Applications performed, including discarded ones. */
  unsigned iterations = 1;
  /** False when a repeat hit its iteration cap. */
  bool fixpoint = true;
};

/** An immutable, shareable circuit transform with a contract. */
class Pass {
 public:
  /** Mutates the circuit and returns whether anything changed. */
  using Transform = std::function<bool(Circuit&)>;

  Pass(std::string name, Transform transform, Contract contract);

  const std::string& name() const { return impl_->name; }
  const Contract& contract() const { return impl_->contract; }

  /**
   * Runs the transform. In strict mode preconditions are checked first and
   * postconditions afterwards; a failing postcondition always throws.
   */
  PassOutcome apply(Circuit& c, bool strict = false) const;

  /** Whether `p`, if true before, is guaranteed true after. */
  bool preserves(const Predicate& p) const;

  /** Throws IncompatibleComposition when adjacent contracts clash. */
  static Pass sequence(const std::vector<Pass>& passes);
  static Pass repeat(const Pass& p, unsigned max_iterations = 100);
  /**
   * Applies p once, then again while the metric strictly decreases; a
   * non-improving application is discarded.
   */
  static Pass repeat_with_metric(const Pass& p, Metric metric);

 private:
  using Runner = std::function<PassOutcome(Circuit&, bool)>;
  struct Impl {
    std::string name;
    Runner run;
    Contract contract;
  };
  Pass(std::string name, Runner run, Contract contract, int);

  std::shared_ptr<const Impl> impl_;
};

}  // namespace qcc

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

#include <map>
#include <string>

namespace qcc {

/** Bitstring -> probability. */
using Distribution = std::map<std::string, double>;

/** Throws InvalidArgument on negative entries or a sum off by more than 1e-9. */
void check_distribution(const Distribution& p);

/** Base-2 Kullback-Leibler divergence; +inf when supp(p) is not inside supp(q). */
double kl_divergence(const Distribution& p, const Distribution& q);

/** Base-2 Jensen-Shannon divergence, in [0, 1]. */
double js_divergence(const Distribution& p, const Distribution& q);

}  // namespace qcc

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

#include "sim/Divergence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ir/Errors.hpp"

namespace qcc {

void check_distribution(const Distribution& p) {
  double total = 0;
  for (const auto& [k, v] : p) {
    if (!(v >= 0)) fail(ErrorCode::InvalidArgument, "negative probability for " + k);
    total += v;
  }
  if (std::fabs(total - 1.) > 1e-9) fail(ErrorCode::InvalidArgument, "probabilities do not sum to 1");
}

double kl_divergence(const Distribution& p, const Distribution& q) {
  double d = 0;
  for (const auto& [x, px] : p) {
    if (px <= 0) continue;
    auto it = q.find(x);
    if (it == q.end() || it->second <= 0) return std::numeric_limits<double>::infinity();
    d += px * std::log2(px / it->second);
  }
  return d;
}

double js_divergence(const Distribution& p, const Distribution& q) {
  Distribution m;
  for (const auto& [x, v] : p) m[x] += v / 2;
  for (const auto& [x, v] : q) m[x] += v / 2;
  double d = 0.5 * kl_divergence(p, m) + 0.5 * kl_divergence(q, m);
  return std::clamp(d, 0., 1.);
}

}  // namespace qcc

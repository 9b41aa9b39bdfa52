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

#include "harness/Deadline.hpp"

#include "ir/Errors.hpp"

namespace qcc {

namespace {
thread_local std::optional<std::chrono::steady_clock::time_point> g_deadline;
}

DeadlineScope::DeadlineScope(double seconds) : saved_(g_deadline) {
  auto limit = std::chrono::steady_clock::now() +
               std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                   std::chrono::duration<double>(seconds));
  if (!g_deadline || limit < *g_deadline) g_deadline = limit;
}

DeadlineScope::~DeadlineScope() { g_deadline = saved_; }

void check_deadline() {
  if (g_deadline && std::chrono::steady_clock::now() > *g_deadline) {
    fail(ErrorCode::Timeout, "time limit exceeded");
  }
}

}  // namespace qcc

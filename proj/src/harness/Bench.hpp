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

#include <string>
#include <vector>

#include "harness/Pipelines.hpp"

namespace qcc {

struct BenchRecord {
  std::string circuit;
  std::string pipeline;
  std::string arch;
  /** ok, failed or timeout. */
  std::string status = "ok";
  std::string error;
  std::size_t in_2q = 0, out_2q = 0;
  std::size_t in_depth2q = 0, out_depth2q = 0;
  double ratio_2q = 0., ratio_depth = 0.;
  double seconds = 0.;
};

struct BenchOptions {
  std::string corpus;
  std::vector<std::string> pipelines{"full"};
  std::vector<std::string> archs{"full"};
  std::string target = "cx-u";
  std::string passes;
  PlacementMethod placement = PlacementMethod::Graph;
  unsigned jobs = 1;
  double timeout = 300.;
};

/** .qasm files of a directory, sorted by name. */
std::vector<std::string> corpus_files(const std::string& dir);

/** One record per (file, pipeline, arch); failures become marked rows. */
std::vector<BenchRecord> run_benchmarks(const BenchOptions& opts);

/** Fixed columns; with reproducible the wall time is written as 0. */
std::string bench_csv(const std::vector<BenchRecord>& records, bool reproducible = false);

struct BenchSummary {
  std::string pipeline;
  std::string arch;
  std::size_t n = 0;
  double mean_ratio_2q = 0., sem_ratio_2q = 0.;
  double mean_ratio_depth = 0., sem_ratio_depth = 0.;
};

/** Mean and standard error per (pipeline, arch) over successful rows with nonzero input. */
std::vector<BenchSummary> summarise(const std::vector<BenchRecord>& records);

}  // namespace qcc

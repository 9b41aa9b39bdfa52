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

#include "harness/Bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <map>
#include <thread>

#include "harness/Deadline.hpp"
#include "harness/Log.hpp"
#include "io/Qasm.hpp"
#include "ir/Errors.hpp"

namespace qcc {

std::vector<std::string> corpus_files(const std::string& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) fail(ErrorCode::Io, "corpus '" + dir + "' is not a directory");
  std::vector<std::string> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".qasm")
      files.push_back(entry.path().string());
  std::sort(files.begin(), files.end());
  return files;
}

namespace {

struct Job {
  std::string file;
  std::string pipeline;
  std::string arch;
  ArchitecturePtr device;
};

BenchRecord run_one(const Job& job, const BenchOptions& opts) {
  BenchRecord rec;
  rec.circuit = std::filesystem::path(job.file).stem().string();
  rec.pipeline = job.pipeline;
  rec.arch = job.arch;
  auto start = std::chrono::steady_clock::now();
  try {
    Circuit c = load_qasm_file(job.file);
    PipelineSpec spec;
    spec.name = job.pipeline;
    auto target = target_from_name(opts.target);
    if (!target) fail(ErrorCode::UnsupportedTarget, "unknown target '" + opts.target + "'");
    spec.target = *target;
    spec.arch_name = job.arch;
    spec.arch = job.device;
    spec.passes = opts.passes;
    spec.placement = opts.placement;
    CompileResult r;
    {
      DeadlineScope deadline(opts.timeout);
      r = compile(c, spec);
    }
    rec.in_2q = r.input.two_qubit_gates;
    rec.out_2q = r.output.two_qubit_gates;
    rec.in_depth2q = r.input.two_qubit_depth;
    rec.out_depth2q = r.output.two_qubit_depth;
    rec.ratio_2q = rec.in_2q ? double(rec.out_2q) / double(rec.in_2q) : 0.;
    rec.ratio_depth = rec.in_depth2q ? double(rec.out_depth2q) / double(rec.in_depth2q) : 0.;
  } catch (const Error& e) {
    rec.status = e.code() == ErrorCode::Timeout ? "timeout" : "failed";
    rec.error = e.what();
    log().warn("{} ({}, {}): {}", job.file, job.pipeline, job.arch, e.what());
  } catch (const std::exception& e) {
    rec.status = "failed";
    rec.error = e.what();
    log().warn("{} ({}, {}): {}", job.file, job.pipeline, job.arch, e.what());
  }
  rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

}  // namespace

std::vector<BenchRecord> run_benchmarks(const BenchOptions& opts) {
  std::vector<std::string> files = corpus_files(opts.corpus);
  if (files.empty()) log().warn("corpus '{}' has no .qasm files", opts.corpus);
  std::vector<Job> jobs;
  for (const std::string& arch : opts.archs) {
    ArchitecturePtr device = load_architecture(arch);
    for (const std::string& pipeline : opts.pipelines)
      for (const std::string& f : files) jobs.push_back({f, pipeline, arch, device});
  }
  std::vector<BenchRecord> out(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      out[i] = run_one(jobs[i], opts);
      log().info("{} {} {}: {}", out[i].circuit, out[i].pipeline, out[i].arch, out[i].status);
    }
  };
  unsigned n_threads = std::max(1u, std::min<unsigned>(opts.jobs, jobs.size()));
  std::vector<std::thread> threads;
  for (unsigned t = 1; t < n_threads; ++t) threads.emplace_back(worker);
  worker();
  for (std::thread& t : threads) t.join();
  return out;
}

std::string bench_csv(const std::vector<BenchRecord>& records, bool reproducible) {
  std::string csv = "circuit,pipeline,arch,in_2q,out_2q,in_depth2q,out_depth2q,ratio_2q,ratio_depth,seconds\n";
  char buf[64];
  auto fixed = [&](double x, int digits) {
    std::snprintf(buf, sizeof buf, "%.*f", digits, x);
    return std::string(buf);
  };
  for (const BenchRecord& r : records) {
    csv += r.circuit + "," + r.pipeline + "," + r.arch + ",";
    if (r.status == "ok") {
      csv += std::to_string(r.in_2q) + "," + std::to_string(r.out_2q) + "," +
             std::to_string(r.in_depth2q) + "," + std::to_string(r.out_depth2q) + "," +
             fixed(r.ratio_2q, 6) + "," + fixed(r.ratio_depth, 6) + ",";
    } else {
      csv += ",,,," + r.status + "," + r.status + ",";
    }
    csv += fixed(reproducible ? 0. : r.seconds, 3) + "\n";
  }
  return csv;
}

std::vector<BenchSummary> summarise(const std::vector<BenchRecord>& records) {
  std::map<std::pair<std::string, std::string>, std::vector<const BenchRecord*>> groups;
  std::vector<std::pair<std::string, std::string>> order;
  for (const BenchRecord& r : records) {
    auto key = std::make_pair(r.pipeline, r.arch);
    if (!groups.count(key)) order.push_back(key);
    auto& g = groups[key];
    if (r.status == "ok" && r.in_2q > 0 && r.in_depth2q > 0) g.push_back(&r);
  }
  auto mean_sem = [](const std::vector<double>& xs) -> std::pair<double, double> {
    if (xs.empty()) return {0., 0.};
    double m = 0.;
    for (double x : xs) m += x;
    m /= double(xs.size());
    if (xs.size() < 2) return {m, 0.};
    double v = 0.;
    for (double x : xs) v += (x - m) * (x - m);
    v /= double(xs.size() - 1);
    return {m, std::sqrt(v / double(xs.size()))};
  };
  std::vector<BenchSummary> out;
  for (const auto& key : order) {
    BenchSummary s;
    s.pipeline = key.first;
    s.arch = key.second;
    std::vector<double> r2, rd;
    for (const BenchRecord* r : groups[key]) {
      r2.push_back(r->ratio_2q);
      rd.push_back(r->ratio_depth);
    }
    s.n = r2.size();
    std::tie(s.mean_ratio_2q, s.sem_ratio_2q) = mean_sem(r2);
    std::tie(s.mean_ratio_depth, s.sem_ratio_depth) = mean_sem(rd);
    out.push_back(s);
  }
  return out;
}

}  // namespace qcc

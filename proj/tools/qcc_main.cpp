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

// Command-line driver. Links only the C interface.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "qcc/qcc.h"

namespace {

enum Exit {
  kOk = 0,
  kParse = 1,
  kContract = 2,
  kTooManyQubits = 3,
  kOther = 4,
  kNotEquivalent = 5,
};

int exit_code(qcc_status s) {
  switch (s) {
    case QCC_OK: return kOk;
    case QCC_PARSE_ERROR:
    case QCC_UNSUPPORTED_CONSTRUCT:
    case QCC_UNKNOWN_UNIT:
    case QCC_ARITY_MISMATCH:
      return kParse;
    case QCC_PRECONDITION_FAILED:
    case QCC_POSTCONDITION_FAILED:
    case QCC_INCOMPATIBLE_COMPOSITION:
    case QCC_UNSUPPORTED_TARGET:
    case QCC_UNSUPPORTED_GATE:
    case QCC_INVALID_ARGUMENT:
    case QCC_MISSING_ERROR_DATA:
    case QCC_NON_UNITARY_OPS:
      return kContract;
    case QCC_TOO_MANY_QUBITS: return kTooManyQubits;
    default: return kOther;
  }
}

struct Failure {
  qcc_status status;
};

void check(qcc_status s) {
  if (s != QCC_OK) throw Failure{s};
}

struct CircuitPtr {
  qcc_circuit* p = nullptr;
  ~CircuitPtr() { qcc_circuit_free(p); }
};

struct StringPtr {
  char* p = nullptr;
  ~StringPtr() { qcc_string_free(p); }
  std::string str() const { return p ? std::string(p) : std::string(); }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::fprintf(stderr, "error: cannot read %s\n", path.c_str());
    throw Failure{QCC_IO};
  }
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::fprintf(stderr, "error: cannot write %s\n", path.c_str());
    throw Failure{QCC_IO};
  }
  out << text;
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string serialise(const qcc_circuit* c, const std::string& path) {
  StringPtr text;
  check(ends_with(path, ".json") ? qcc_circuit_to_json(c, &text.p) : qcc_circuit_to_qasm(c, &text.p));
  return text.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qcc: retargetable quantum circuit compiler"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(qcc_version()));

  std::string input, output = "-", arch = "full", pipeline = "full", passes, target = "cx-u",
              report, placement = "graph";
  unsigned seed = 0;
  bool strict = false, reproducible = false;
  double timeout = 0.;
  auto* compile = app.add_subcommand("compile", "Compile a circuit for a device");
  compile->add_option("-i,--input", input, "Input .qasm or .json")->required();
  compile->add_option("-o,--output", output, "Output path (.qasm or .json), - for stdout");
  compile->add_option("--arch", arch, "full, rochester, sycamore, aspen, line:N, ring:N, grid:RxC, complete:N or a JSON file");
  compile->add_option("--pipeline", pipeline, "full, chem, synthesise or custom")
      ->check(CLI::IsMember({"full", "chem", "synthesise", "custom"}));
  compile->add_option("--passes", passes, "Pass spec for the custom pipeline");
  compile->add_option("--target-gates", target, "cx-u, cz-rxrz, cx-rzrx or cz-phasedx");
  compile->add_option("--placement", placement, "graph, noise_aware or none");
  compile->add_option("--report", report, "Write a JSON report");
  compile->add_option("--seed", seed, "Accepted for reproducibility; compilation is deterministic");
  compile->add_option("--timeout", timeout, "Wall-clock limit in seconds");
  compile->add_flag("--strict", strict, "Check pass contracts while running");
  compile->add_flag("--reproducible", reproducible, "Leave wall time out of the report");

  std::string corpus, out_csv = "-", summary, bench_arch = "full", bench_pipeline = "full";
  unsigned jobs = 1;
  double bench_timeout = 300.;
  auto* bench = app.add_subcommand("bench", "Compile a corpus and tabulate overheads");
  bench->add_option("--corpus", corpus, "Directory of .qasm files")->required();
  bench->add_option("--arch", bench_arch, "Comma-separated architectures");
  bench->add_option("--pipeline", bench_pipeline, "Comma-separated pipelines");
  bench->add_option("--passes", passes, "Pass spec for the custom pipeline");
  bench->add_option("--target-gates", target, "Target gate set");
  bench->add_option("--placement", placement, "graph, noise_aware or none");
  bench->add_option("--out", out_csv, "CSV output, - for stdout");
  bench->add_option("--summary", summary, "Write per-(pipeline, arch) means as JSON");
  bench->add_option("--jobs", jobs, "Parallel workers")->check(CLI::PositiveNumber);
  bench->add_option("--timeout", bench_timeout, "Per-circuit limit in seconds");
  bench->add_flag("--reproducible", reproducible, "Write wall times as 0");

  std::string file_a, file_b, perm_report;
  double tol = 1e-8;
  auto* verify = app.add_subcommand("verify", "Check two circuits are equivalent up to global phase");
  verify->add_option("-a", file_a, "Reference circuit")->required();
  verify->add_option("-b", file_b, "Circuit to check")->required();
  verify->add_option("--perm", perm_report, "Compile report giving placement and permutation");
  verify->add_option("--tol", tol, "Tolerance");

  unsigned n_qubits = 0, n_gates = 0;
  std::uint64_t rseed = 0;
  std::string rout = "-";
  auto* random = app.add_subcommand("random", "Generate a random Clifford+T circuit");
  random->add_option("-q", n_qubits, "Qubits")->required();
  random->add_option("-g", n_gates, "Gates")->required();
  random->add_option("--seed", rseed, "Seed");
  random->add_option("-o", rout, "Output path, - for stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (compile->parsed()) {
      CircuitPtr in, out;
      check(qcc_circuit_load(input.c_str(), &in.p));
      qcc_compile_options o{};
      o.pipeline = pipeline.c_str();
      o.arch = arch.c_str();
      o.target = target.c_str();
      o.passes = passes.c_str();
      o.placement = placement.c_str();
      o.strict = strict;
      o.timeout = timeout;
      o.reproducible = reproducible;
      StringPtr rep;
      check(qcc_compile(in.p, &o, &out.p, &rep.p));
      write_output(output, serialise(out.p, output));
      if (!report.empty()) write_output(report, rep.str() + "\n");
    } else if (bench->parsed()) {
      qcc_bench_options o{};
      o.corpus = corpus.c_str();
      o.pipelines = bench_pipeline.c_str();
      o.archs = bench_arch.c_str();
      o.target = target.c_str();
      o.passes = passes.c_str();
      o.placement = placement.c_str();
      o.jobs = jobs;
      o.timeout = bench_timeout;
      o.reproducible = reproducible;
      StringPtr csv, sum;
      check(qcc_bench(&o, &csv.p, &sum.p));
      write_output(out_csv, csv.str());
      if (!summary.empty()) write_output(summary, sum.str() + "\n");
    } else if (verify->parsed()) {
      CircuitPtr a, b;
      check(qcc_circuit_load(file_a.c_str(), &a.p));
      check(qcc_circuit_load(file_b.c_str(), &b.p));
      std::string rep = perm_report.empty() ? std::string() : read_file(perm_report);
      int eq = 0;
      double err = 0.;
      check(qcc_verify(a.p, b.p, rep.empty() ? nullptr : rep.c_str(), tol, &eq, &err));
      std::printf("%s (error %.3e)\n", eq ? "equivalent" : "not equivalent", err);
      return eq ? kOk : kNotEquivalent;
    } else if (random->parsed()) {
      CircuitPtr c;
      check(qcc_random_circuit(n_qubits, n_gates, rseed, &c.p));
      write_output(rout, serialise(c.p, rout));
    }
  } catch (const Failure& f) {
    const char* msg = qcc_last_error();
    std::fprintf(stderr, "error: %s%s%s\n", qcc_status_name(f.status), *msg ? ": " : "", msg);
    return exit_code(f.status);
  }
  return kOk;
}

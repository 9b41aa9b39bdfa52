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

#include "qcc/qcc.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include "harness/Bench.hpp"
#include "harness/Deadline.hpp"
#include "harness/Pipelines.hpp"
#include "harness/RandomCircuit.hpp"
#include "io/CircuitJson.hpp"
#include "io/Qasm.hpp"
#include "ir/Boxes.hpp"
#include "ir/Errors.hpp"
#include "sim/Unitary.hpp"

struct qcc_circuit {
  qcc::Circuit circuit;
};

namespace {

thread_local std::string g_last_error;

template <class F>
qcc_status guarded(F&& f) {
  try {
    f();
    g_last_error.clear();
    return QCC_OK;
  } catch (const qcc::Error& e) {
    g_last_error = e.what();
    return static_cast<qcc_status>(e.code());
  } catch (const nlohmann::json::exception& e) {
    g_last_error = e.what();
    return QCC_PARSE_ERROR;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return QCC_TOO_LARGE;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return QCC_INTERNAL;
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void need(const void* p, const char* what) {
  if (!p) qcc::fail(qcc::ErrorCode::InvalidArgument, std::string(what) + " is null");
}

std::string or_default(const char* s, const char* fallback) {
  return s && *s ? std::string(s) : std::string(fallback);
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

qcc::Target target_named(const std::string& name) {
  auto t = qcc::target_from_name(name);
  if (!t) qcc::fail(qcc::ErrorCode::UnsupportedTarget, "unknown target '" + name + "'");
  return *t;
}

}  // namespace

extern "C" {

const char* qcc_version(void) { return "0.1.0"; }

const char* qcc_last_error(void) { return g_last_error.c_str(); }

const char* qcc_status_name(qcc_status s) {
  switch (s) {
    case QCC_OK: return "Ok";
    case QCC_INVALID_ARGUMENT: return "InvalidArgument";
    case QCC_PARSE_ERROR: return "ParseError";
    case QCC_UNSUPPORTED_CONSTRUCT: return "UnsupportedConstruct";
    case QCC_UNSUPPORTED_GATE: return "UnsupportedGate";
    case QCC_UNKNOWN_UNIT: return "UnknownUnit";
    case QCC_ARITY_MISMATCH: return "ArityMismatch";
    case QCC_SIGNATURE_MISMATCH: return "SignatureMismatch";
    case QCC_BOXES_PRESENT: return "BoxesPresent";
    case QCC_PRECONDITION_FAILED: return "PreconditionFailed";
    case QCC_POSTCONDITION_FAILED: return "PostconditionFailed";
    case QCC_INCOMPATIBLE_COMPOSITION: return "IncompatibleComposition";
    case QCC_NON_CLIFFORD_GATE: return "NonCliffordGate";
    case QCC_LENGTH_MISMATCH: return "LengthMismatch";
    case QCC_NON_UNITARY_BLOCK: return "NonUnitaryBlock";
    case QCC_UNSUPPORTED_TARGET: return "UnsupportedTarget";
    case QCC_MISSING_ERROR_DATA: return "MissingErrorData";
    case QCC_TOO_MANY_QUBITS: return "TooManyQubits";
    case QCC_TOO_LARGE: return "TooLarge";
    case QCC_SYMBOLIC_PARAMS: return "SymbolicParams";
    case QCC_NON_UNITARY_OPS: return "NonUnitaryOps";
    case QCC_INVALID_SIZE: return "InvalidSize";
    case QCC_TIMEOUT: return "Timeout";
    case QCC_IO: return "Io";
    case QCC_INTERNAL: return "Internal";
  }
  return "Unknown";
}

void qcc_string_free(char* s) { std::free(s); }

void qcc_circuit_free(qcc_circuit* c) { delete c; }

qcc_status qcc_circuit_from_qasm(const char* text, qcc_circuit** out) {
  return guarded([&] {
    need(text, "text");
    need(out, "out");
    *out = new qcc_circuit{qcc::parse_qasm(text)};
  });
}

qcc_status qcc_circuit_load(const char* path, qcc_circuit** out) {
  return guarded([&] {
    need(path, "path");
    need(out, "out");
    *out = new qcc_circuit{qcc::load_circuit_file(path)};
  });
}

qcc_status qcc_circuit_to_qasm(const qcc_circuit* c, char** out) {
  return guarded([&] {
    need(c, "circuit");
    need(out, "out");
    *out = dup(qcc::emit_qasm(c->circuit));
  });
}

qcc_status qcc_circuit_to_json(const qcc_circuit* c, char** out) {
  return guarded([&] {
    need(c, "circuit");
    need(out, "out");
    *out = dup(qcc::emit_circuit_json(c->circuit));
  });
}

qcc_status qcc_circuit_stats(const qcc_circuit* c, qcc_stats* out) {
  return guarded([&] {
    need(c, "circuit");
    need(out, "out");
    qcc::CircuitMetrics m = qcc::metrics(qcc::decompose_boxes(c->circuit));
    *out = {m.qubits, m.gates, m.two_qubit_gates, m.depth, m.two_qubit_depth};
  });
}

qcc_status qcc_random_circuit(unsigned n_qubits, unsigned n_gates, uint64_t seed,
                              qcc_circuit** out) {
  return guarded([&] {
    need(out, "out");
    *out = new qcc_circuit{qcc::random_circuit(n_qubits, n_gates, seed)};
  });
}

qcc_status qcc_apply_passes(qcc_circuit* c, const char* spec, const char* arch, int strict,
                            int* changed) {
  return guarded([&] {
    need(c, "circuit");
    need(spec, "spec");
    qcc::Pass p = qcc::passes::parse_pass_spec(spec, qcc::load_architecture(or_default(arch, "full")));
    qcc::PassOutcome o = p.apply(c->circuit, strict != 0);
    if (changed) *changed = o.changed ? 1 : 0;
  });
}

qcc_status qcc_compile(const qcc_circuit* in, const qcc_compile_options* opts, qcc_circuit** out,
                       char** report_json) {
  return guarded([&] {
    need(in, "circuit");
    need(out, "out");
    qcc_compile_options defaults{};
    const qcc_compile_options& o = opts ? *opts : defaults;
    qcc::PipelineSpec spec;
    spec.name = or_default(o.pipeline, "full");
    spec.target = target_named(or_default(o.target, "cx-u"));
    spec.arch_name = or_default(o.arch, "full");
    spec.arch = qcc::load_architecture(spec.arch_name);
    spec.passes = or_default(o.passes, "");
    spec.placement = qcc::placement_method_from_name(or_default(o.placement, "graph"));
    spec.strict = o.strict != 0;
    qcc::CompileResult r;
    {
      std::optional<qcc::DeadlineScope> deadline;
      if (o.timeout > 0) deadline.emplace(o.timeout);
      r = qcc::compile(in->circuit, spec);
    }
    std::string report = qcc::compile_report(r, spec, o.reproducible != 0).dump(2);
    *out = new qcc_circuit{std::move(r.circuit)};
    if (report_json) *report_json = dup(report);
  });
}

qcc_status qcc_verify(const qcc_circuit* a, const qcc_circuit* b, const char* report_json,
                      double tol, int* equivalent, double* error) {
  return guarded([&] {
    need(a, "a");
    need(b, "b");
    qcc::Circuit ref = qcc::decompose_boxes(a->circuit);
    qcc::Circuit other = qcc::decompose_boxes(b->circuit);
    std::optional<std::vector<unsigned>> perm;
    if (report_json && *report_json) {
      qcc::ReportLayout layout = qcc::layout_from_report(nlohmann::json::parse(report_json));
      if (layout.qubits) other = qcc::restrict_qubits(other, *layout.qubits);
      ref = qcc::embed_reference(ref, other.qubits(), layout.initial_map);
      perm = layout.permutation;
    }
    if (ref.n_qubits() != other.n_qubits())
      qcc::fail(qcc::ErrorCode::SignatureMismatch, "circuits have different qubit counts");
    double err = qcc::equivalence_error(ref, other, perm);
    if (error) *error = err;
    if (equivalent) *equivalent = err <= tol ? 1 : 0;
  });
}

qcc_status qcc_bench(const qcc_bench_options* opts, char** csv, char** summary_json) {
  return guarded([&] {
    need(opts, "options");
    need(opts->corpus, "corpus");
    qcc::BenchOptions b;
    b.corpus = opts->corpus;
    b.pipelines = split(or_default(opts->pipelines, "full"));
    b.archs = split(or_default(opts->archs, "full"));
    b.target = or_default(opts->target, "cx-u");
    target_named(b.target);
    b.passes = or_default(opts->passes, "");
    b.placement = qcc::placement_method_from_name(or_default(opts->placement, "graph"));
    b.jobs = opts->jobs ? opts->jobs : 1;
    b.timeout = opts->timeout > 0 ? opts->timeout : 300.;
    std::vector<qcc::BenchRecord> records = qcc::run_benchmarks(b);
    if (csv) *csv = dup(qcc::bench_csv(records, opts->reproducible != 0));
    if (summary_json) {
      nlohmann::json j = nlohmann::json::array();
      for (const qcc::BenchSummary& s : qcc::summarise(records)) {
        std::size_t failed = 0;
        for (const qcc::BenchRecord& r : records)
          if (r.pipeline == s.pipeline && r.arch == s.arch && r.status != "ok") ++failed;
        j.push_back({{"pipeline", s.pipeline},
                     {"arch", s.arch},
                     {"n", s.n},
                     {"failed", failed},
                     {"mean_ratio_2q", s.mean_ratio_2q},
                     {"sem_ratio_2q", s.sem_ratio_2q},
                     {"mean_ratio_depth", s.mean_ratio_depth},
                     {"sem_ratio_depth", s.sem_ratio_depth}});
      }
      *summary_json = dup(j.dump(2));
    }
  });
}

}  // extern "C"

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

#ifndef QCC_QCC_H_
#define QCC_QCC_H_

/*
 * C interface to the qcc compiler. Objects are opaque handles owned by the
 * caller and released with the matching *_free function. Every call returns
 * a qcc_status; on failure qcc_last_error() describes the problem for the
 * calling thread.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(QCC_BUILDING_LIBRARY)
#define QCC_API __attribute__((visibility("default")))
#else
#define QCC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qcc_status {
  QCC_OK = 0,
  QCC_INVALID_ARGUMENT = 1,
  QCC_PARSE_ERROR = 2,
  QCC_UNSUPPORTED_CONSTRUCT = 3,
  QCC_UNSUPPORTED_GATE = 4,
  QCC_UNKNOWN_UNIT = 5,
  QCC_ARITY_MISMATCH = 6,
  QCC_SIGNATURE_MISMATCH = 7,
  QCC_BOXES_PRESENT = 8,
  QCC_PRECONDITION_FAILED = 9,
  QCC_POSTCONDITION_FAILED = 10,
  QCC_INCOMPATIBLE_COMPOSITION = 11,
  QCC_NON_CLIFFORD_GATE = 12,
  QCC_LENGTH_MISMATCH = 13,
  QCC_NON_UNITARY_BLOCK = 14,
  QCC_UNSUPPORTED_TARGET = 15,
  QCC_MISSING_ERROR_DATA = 16,
  QCC_TOO_MANY_QUBITS = 17,
  QCC_TOO_LARGE = 18,
  QCC_SYMBOLIC_PARAMS = 19,
  QCC_NON_UNITARY_OPS = 20,
  QCC_INVALID_SIZE = 21,
  QCC_TIMEOUT = 22,
  QCC_IO = 23,
  QCC_INTERNAL = 99
} qcc_status;

typedef struct qcc_circuit qcc_circuit;

typedef struct qcc_stats {
  size_t qubits;
  size_t gates;
  size_t two_qubit_gates;
  size_t depth;
  size_t two_qubit_depth;
} qcc_stats;

typedef struct qcc_compile_options {
  const char* pipeline;  /* full, chem, synthesise, custom; NULL = full */
  const char* arch;      /* builtin name or JSON path; NULL or "full" = all-to-all */
  const char* target;    /* cx-u, cz-rxrz, cx-rzrx, cz-phasedx; NULL = cx-u */
  const char* passes;    /* pass spec for the custom pipeline */
  const char* placement; /* graph, noise_aware, none; NULL = graph */
  int strict;            /* check pass contracts while running */
  double timeout;        /* seconds, <= 0 for none */
  int reproducible;      /* leave wall time out of the report */
} qcc_compile_options;

typedef struct qcc_bench_options {
  const char* corpus;    /* directory of .qasm files */
  const char* pipelines; /* comma separated; NULL = full */
  const char* archs;     /* comma separated; NULL = full */
  const char* target;
  const char* passes;
  const char* placement;
  unsigned jobs;
  double timeout; /* per circuit, seconds */
  int reproducible;
} qcc_bench_options;

QCC_API const char* qcc_version(void);
QCC_API const char* qcc_last_error(void);
QCC_API const char* qcc_status_name(qcc_status s);

QCC_API void qcc_string_free(char* s);
QCC_API void qcc_circuit_free(qcc_circuit* c);

/* Parses OpenQASM 2.0 text. */
QCC_API qcc_status qcc_circuit_from_qasm(const char* text, qcc_circuit** out);
/* Loads a .qasm or .json circuit file. */
QCC_API qcc_status qcc_circuit_load(const char* path, qcc_circuit** out);
QCC_API qcc_status qcc_circuit_to_qasm(const qcc_circuit* c, char** out);
QCC_API qcc_status qcc_circuit_to_json(const qcc_circuit* c, char** out);
QCC_API qcc_status qcc_circuit_stats(const qcc_circuit* c, qcc_stats* out);

QCC_API qcc_status qcc_random_circuit(unsigned n_qubits, unsigned n_gates, uint64_t seed,
                                      qcc_circuit** out);

/* Applies a pass spec in place. arch may be NULL. */
QCC_API qcc_status qcc_apply_passes(qcc_circuit* c, const char* spec, const char* arch, int strict,
                                    int* changed);

/* Compiles `in`; report_json (optional) receives the compile report. */
QCC_API qcc_status qcc_compile(const qcc_circuit* in, const qcc_compile_options* opts,
                               qcc_circuit** out, char** report_json);

/*
 * Unitary equivalence of a and b up to global phase. With a compile report,
 * a is laid out on b's qubits by its initial map and b is compared under the
 * recorded permutation.
 */
QCC_API qcc_status qcc_verify(const qcc_circuit* a, const qcc_circuit* b, const char* report_json,
                              double tol, int* equivalent, double* error);

/* Runs a benchmark; csv and summary_json (both optional) receive the results. */
QCC_API qcc_status qcc_bench(const qcc_bench_options* opts, char** csv, char** summary_json);

#ifdef __cplusplus
}
#endif

#endif /* QCC_QCC_H_ */

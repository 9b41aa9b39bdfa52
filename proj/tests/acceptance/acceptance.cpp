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

// Acceptance checks: one PASS/FAIL line per criterion.

#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <Eigen/QR>

#include "harness/Bench.hpp"
#include "harness/Pipelines.hpp"
#include "harness/RandomCircuit.hpp"
#include "harness/Uccsd.hpp"
#include "io/Qasm.hpp"
#include "ir/Boxes.hpp"
#include "ir/Errors.hpp"
#include "mapping/Placement.hpp"
#include "mapping/Routing.hpp"
#include "passes/Library.hpp"
#include "passes/Predicate.hpp"
#include "peephole/Euler.hpp"
#include "peephole/Kak.hpp"
#include "peephole/Transforms.hpp"
#include "sim/Divergence.hpp"
#include "sim/Unitary.hpp"

using namespace qcc;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

int g_failed = 0;

void criterion(int id, const std::string& name, const std::function<Outcome()>& body) {
  auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!o.pass) ++g_failed;
  std::printf("%s %2d. %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", id, name.c_str(), o.detail.c_str(), s);
  std::fflush(stdout);
}

std::string fmt(double x, int prec = 3) {
  std::ostringstream os;
  os.precision(prec);
  os << std::fixed << x;
  return os.str();
}

std::string sci(double x) {
  std::ostringstream os;
  os.precision(2);
  os << std::scientific << x;
  return os.str();
}

MatrixX haar(unsigned dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  MatrixX z(dim, dim);
  for (unsigned i = 0; i < dim; ++i)
    for (unsigned j = 0; j < dim; ++j) z(i, j) = {g(rng), g(rng)};
  Eigen::HouseholderQR<MatrixX> qr(z);
  MatrixX q = qr.householderQ();
  MatrixX r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (unsigned j = 0; j < dim; ++j) q.col(j) *= r(j, j) / std::abs(r(j, j));
  return q;
}

PipelineSpec make_spec(const std::string& pipeline, const std::string& arch) {
  PipelineSpec s;
  s.name = pipeline;
  s.arch_name = arch;
  s.arch = load_architecture(arch);
  return s;
}

// 1 --------------------------------------------------------------------------

Outcome oracle_suite() {
  std::vector<std::pair<std::string, Pass>> single = {
      {"decompose_boxes", passes::decompose_boxes()},
      {"rebase(cx-u)", passes::rebase(*target_from_name("cx-u"))},
      {"rebase(cz-rxrz)", passes::rebase(*target_from_name("cz-rxrz"))},
      {"rebase(cz-phasedx)", passes::rebase(*target_from_name("cz-phasedx"))},
      {"remove_redundancies", passes::remove_redundancies()},
      {"commute_through_multis", passes::commute_through_multis()},
      {"squash(zxz)", passes::squash(EulerBasis::ZXZ)},
      {"squash(u)", passes::squash(EulerBasis::U)},
      {"kak", passes::kak()},
      {"clifford_simp", passes::clifford_simp(false)},
      {"clifford_simp(allow_swaps)", passes::clifford_simp(true)},
      {"optimise_phase_gadgets", passes::optimise_phase_gadgets()},
      {"pauli_simp", passes::pauli_simp()},
      {"full_peephole", passes::full_peephole(true)},
      {"synthesise", passes::synthesise()},
  };
  std::vector<PipelineSpec> pipelines;
  for (const char* p : {"full", "chem", "synthesise"})
    for (const char* a : {"full", "grid:3x3", "line:6"}) pipelines.push_back(make_spec(p, a));
  auto line = std::make_shared<const Architecture>(Architecture::line(6));
  auto routing_sink = std::make_shared<passes::RoutingRecord>();
  Pass route_line = passes::route(line, PlacementMethod::Graph, routing_sink);

  std::size_t checks = 0, bad = 0;
  double worst = 0;
  std::string first_bad;
  auto record = [&](bool ok, double err, const std::string& what) {
    ++checks;
    worst = std::max(worst, err);
    if (!ok) {
      if (bad == 0) first_bad = what;
      ++bad;
    }
  };
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    std::mt19937_64 rng(seed);
    unsigned n = 3 + static_cast<unsigned>(rng() % 4);
    unsigned g = 10 + static_cast<unsigned>(rng() % 51);
    Circuit c = random_circuit(n, g, seed);
    Circuit internal = c;
    passes::rebase(internal_target()).apply(internal);
    for (const auto& [name, p] : single) {
      Circuit x = name.rfind("rebase", 0) == 0 || name == "decompose_boxes" ? c : internal;
      p.apply(x);
      double err = equivalence_error(c, x);
      record(err <= 1e-8, err, name + " seed " + std::to_string(seed));
    }
    {
      Circuit x = internal;
      route_line.apply(x);
      const RoutingResult& r = routing_sink->result;
      Circuit ref = routing_reference(internal, r);
      double err = equivalence_error(ref, x, r.permutation);
      record(err <= 1e-8, err, "route seed " + std::to_string(seed));
      decompose_routing_ops(x);
      err = equivalence_error(ref, x, r.permutation);
      record(err <= 1e-8, err, "decompose_routing_ops seed " + std::to_string(seed));
    }
    for (const PipelineSpec& s : pipelines) {
      CompileResult r = compile(c, s);
      double err = equivalence_error(r.reference, r.circuit, r.permutation);
      record(err <= 1e-8, err, s.name + "/" + s.arch_name + " seed " + std::to_string(seed));
    }
  }
  Outcome o;
  o.pass = bad == 0;
  o.detail = std::to_string(checks) + " checks, " + std::to_string(bad) + " inequivalent, max error " + sci(worst);
  if (bad) o.detail += ", first: " + first_bad;
  return o;
}

// 2 --------------------------------------------------------------------------

Outcome kak_suite() {
  std::mt19937_64 rng(2024);
  unsigned max_cx = 0;
  double worst = 0;
  for (int i = 0; i < 1000; ++i) {
    Matrix4 u = haar(4, rng);
    Circuit c = kak_circuit(u);
    max_cx = std::max<unsigned>(max_cx, c.two_qubit_gate_count());
    worst = std::max(worst, phase_distance(circuit_unitary(c), u));
  }
  auto count = [](OpType t) {
    Circuit g(2);
    g.add_op(t, {0, 1});
    return kak_circuit(circuit_unitary(g)).two_qubit_gate_count();
  };
  std::size_t cx = count(OpType::CX), swap = count(OpType::SWAP);
  Outcome o;
  o.pass = max_cx <= 3 && worst < 1e-8 && cx == 1 && swap == 3;
  o.detail = "1000 Haar unitaries, max CX " + std::to_string(max_cx) + ", max error " + sci(worst) +
             "; CX -> " + std::to_string(cx) + ", SWAP -> " + std::to_string(swap);
  return o;
}

// 3 --------------------------------------------------------------------------

Outcome euler_suite() {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> len(2, 20), pick(0, 8);
  std::uniform_real_distribution<double> ang(-2, 2);
  std::size_t max_len = 0;
  double worst = 0;
  for (int i = 0; i < 1000; ++i) {
    Circuit c(1);
    int k = len(rng);
    for (int j = 0; j < k; ++j) {
      switch (pick(rng)) {
        case 0: c.add_op(OpType::H, {0}); break;
        case 1: c.add_op(OpType::T, {0}); break;
        case 2: c.add_op(OpType::S, {0}); break;
        case 3: c.add_op(OpType::X, {0}); break;
        case 4: c.add_op(OpType::Rx, {0}, {Angle::real(ang(rng))}); break;
        case 5: c.add_op(OpType::Ry, {0}, {Angle::real(ang(rng))}); break;
        case 6: c.add_op(OpType::Rz, {0}, {Angle::real(ang(rng))}); break;
        case 7:
          c.add_op(OpType::U3, {0}, {Angle::real(ang(rng)), Angle::real(ang(rng)), Angle::real(ang(rng))});
          break;
        default: c.add_op(OpType::Y, {0}); break;
      }
    }
    EulerBasis basis = static_cast<EulerBasis>(i % 4);
    Circuit s = c;
    squash_1q(s, basis);
    max_len = std::max(max_len, s.gate_count());
    worst = std::max(worst, equivalence_error(c, s));
  }
  Outcome o;
  o.pass = max_len <= 3 && worst < 1e-10;
  o.detail = "1000 runs of 2-20 gates, max length " + std::to_string(max_len) + ", max error " + sci(worst);
  return o;
}

// 4 --------------------------------------------------------------------------

Outcome routing_validity() {
  auto files = corpus_files(QCC_CORPUS_DIR);
  std::size_t total = 0, bad = 0;
  for (const char* arch : {"rochester", "sycamore", "aspen"}) {
    PipelineSpec s = make_spec("full", arch);
    for (const std::string& f : files) {
      Circuit c = load_qasm_file(f);
      if (c.n_qubits() > s.arch->n_nodes()) continue;
      CompileResult r = compile(c, s);
      ++total;
      if (!Predicate::connectivity(s.arch).check(r.circuit)) ++bad;
    }
  }
  Circuit hex(6);
  for (unsigned i = 0; i < 6; ++i) hex.add_op(OpType::CX, {i, (i + 1) % 6});
  hex.add_op(OpType::CX, {1, 4});
  auto grid = std::make_shared<const Architecture>(Architecture::grid(3, 3));
  RoutingResult r = route(hex, *grid, place(hex, *grid, PlacementMethod::Graph));
  bool placed = Predicate::connectivity(grid).check(r.circuit);
  Outcome o;
  o.pass = bad == 0 && total > 0 && r.swaps == 0 && r.bridges == 0 && placed;
  o.detail = std::to_string(total - bad) + "/" + std::to_string(total) +
             " corpus compilations satisfy connectivity; six-cycle with chord on grid 3x3: " +
             std::to_string(r.swaps) + " swaps, " + std::to_string(r.bridges) + " bridges";
  return o;
}

// 5 --------------------------------------------------------------------------

Outcome bridge_swap_identities() {
  Circuit b(3);
  b.add_op(OpType::Bridge, {0, 1, 2});
  decompose_routing_ops(b);
  Circuit cx(3);
  cx.add_op(OpType::CX, {0, 2});
  double eb = phase_distance(circuit_unitary(b), circuit_unitary(cx));
  std::size_t bcx = b.count([](const Op& op) { return op.type() == OpType::CX; });
  Circuit s(2);
  s.add_op(OpType::SWAP, {0, 1});
  Circuit sd = s;
  decompose_routing_ops(sd);
  double es = phase_distance(circuit_unitary(sd), circuit_unitary(s));
  std::size_t scx = sd.count([](const Op& op) { return op.type() == OpType::CX; });
  Outcome o;
  o.pass = eb <= 1e-12 && es <= 1e-12 && bcx == 4 && scx == 3 && b.gate_count() == 4 &&
           sd.gate_count() == 3;
  o.detail = "bridge: " + std::to_string(bcx) + " CX, error " + sci(eb) + "; swap: " +
             std::to_string(scx) + " CX, error " + sci(es);
  return o;
}

// 6 --------------------------------------------------------------------------

Outcome overheads() {
  BenchOptions opts;
  opts.corpus = QCC_CORPUS_DIR;
  opts.archs = {"full", "rochester", "sycamore", "aspen"};
  opts.jobs = std::max(1u, std::thread::hardware_concurrency());
  auto records = run_benchmarks(opts);
  std::size_t failed = 0;
  for (const auto& r : records) failed += r.status != "ok";
  auto summary = summarise(records);
  const std::map<std::string, std::string> reference = {
      {"full", "0.939 +/- 0.011"},
      {"rochester", "1.975 +/- 0.042"},
      {"sycamore", "1.773 +/- 0.034"},
      {"aspen", "1.864 +/- 0.039"},
  };
  Outcome o;
  o.pass = failed == 0 && !summary.empty();
  std::string detail;
  for (const auto& s : summary) {
    double limit = s.arch == "full" ? 1.05 : 2.5;
    bool ok = s.mean_ratio_2q <= limit && s.n >= 25;
    o.pass = o.pass && ok;
    detail += (detail.empty() ? "" : "; ") + s.arch + " " + fmt(s.mean_ratio_2q) + " +/- " +
              fmt(s.sem_ratio_2q) + " (n=" + std::to_string(s.n) + ", limit " + fmt(limit, 2) +
              ", reference " + reference.at(s.arch) + ")";
  }
  o.detail = detail + "; " + std::to_string(failed) + " failed";
  return o;
}

// 7 --------------------------------------------------------------------------

Outcome chem_depth() {
  PipelineSpec s = make_spec("chem", "full");
  std::mt19937_64 rng(7);
  double sum = 0;
  std::size_t n_oracle = 0, oracle_bad = 0;
  for (int i = 0; i < 20; ++i) {
    unsigned n = 4 + static_cast<unsigned>(rng() % 5);
    unsigned boxes = 5 + static_cast<unsigned>(rng() % 26);
    Circuit c = uccsd_circuit(n, boxes, 1000 + i);
    Circuit naive = decompose_boxes(c);
    CompileResult r = compile(c, s);
    double base = naive.two_qubit_depth();
    sum += 1.0 - r.output.two_qubit_depth / base;
    if (n <= 6) {
      ++n_oracle;
      if (!equiv_up_to_phase(r.reference, r.circuit, r.permutation)) ++oracle_bad;
    }
  }
  double mean = sum / 20;
  Outcome o;
  o.pass = mean >= 0.25 && oracle_bad == 0;
  o.detail = "mean two-qubit depth reduction " + fmt(100 * mean, 1) + "% over 20 circuits (limit 25%); " +
             std::to_string(n_oracle - oracle_bad) + "/" + std::to_string(n_oracle) +
             " oracle-equivalent";
  return o;
}

// 8 --------------------------------------------------------------------------

Outcome contracts() {
  bool raised = false;
  try {
    Pass::sequence({passes::rebase(*target_from_name("cz-rxrz")), passes::optimise_phase_gadgets()});
  } catch (const Error& e) {
    raised = e.code() == ErrorCode::IncompatibleComposition;
  }
  Pass body = Pass::sequence({passes::clifford_simp(), passes::remove_redundancies()});
  Pass loop = Pass::repeat_with_metric(body, Metric::GateCount);
  std::size_t within = 0;
  unsigned max_iter = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Circuit c = random_circuit(3 + seed % 4, 10 + seed % 51, seed);
    passes::rebase(internal_target()).apply(c);
    std::size_t g = c.gate_count();
    PassOutcome out = loop.apply(c, true);
    max_iter = std::max(max_iter, out.iterations);
    if (out.iterations <= g) ++within;
  }
  Outcome o;
  o.pass = raised && within == 100;
  o.detail = std::string("CZ-emitting then CX-requiring: ") +
             (raised ? "IncompatibleComposition" : "not raised") + "; repeat_with_metric within gate_count on " +
             std::to_string(within) + "/100 (max " + std::to_string(max_iter) + " applications)";
  return o;
}

// 9 --------------------------------------------------------------------------

Outcome divergences() {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0, 1);
  std::uniform_int_distribution<int> size(1, 8);
  bool ok = true;
  double max_self = 0, max_asym = 0, lo = 1, hi = 0;
  auto random_dist = [&](int k, bool sparse) {
    Distribution d;
    double total = 0;
    std::vector<double> w(k);
    for (int i = 0; i < k; ++i) total += w[i] = (sparse && u(rng) < 0.3) ? 0. : u(rng) + 1e-3;
    if (total == 0) {
      w[0] = 1;
      total = 1;
    }
    for (int i = 0; i < k; ++i) d[std::to_string(i)] = w[i] / total;
    return d;
  };
  for (int i = 0; i < 10000; ++i) {
    int k = size(rng);
    Distribution p = random_dist(k, i % 2), q = random_dist(k, i % 3 == 0);
    double pq = js_divergence(p, q), qp = js_divergence(q, p);
    max_self = std::max(max_self, std::abs(js_divergence(p, p)));
    max_asym = std::max(max_asym, std::abs(pq - qp));
    lo = std::min(lo, pq);
    hi = std::max(hi, pq);
  }
  ok = max_self <= 1e-12 && max_asym <= 1e-12 && lo >= 0 && hi <= 1;
  double disjoint = js_divergence({{"00", 0.5}, {"01", 0.5}}, {{"10", 0.25}, {"11", 0.75}});
  double kl = kl_divergence({{"0", 0.5}, {"1", 0.5}}, {{"0", 1.0}});
  ok = ok && disjoint == 1.0 && std::isinf(kl) && kl > 0;
  Outcome o;
  o.pass = ok;
  o.detail = "10000 pairs: max JS(P,P) " + sci(max_self) + ", max asymmetry " + sci(max_asym) +
             ", range [" + fmt(lo, 4) + ", " + fmt(hi, 4) + "]; disjoint JS = " + fmt(disjoint, 12) +
             "; KL with missing support = " + (std::isinf(kl) ? "inf" : fmt(kl));
  return o;
}

// 10 -------------------------------------------------------------------------

Outcome determinism() {
  bool same = true;
  for (const char* arch : {"full", "sycamore", "aspen"}) {
    PipelineSpec s = make_spec("full", arch);
    Circuit c = load_qasm_file(std::string(QCC_CORPUS_DIR) + "/random_10_150.qasm");
    CompileResult a = compile(c, s), b = compile(c, s);
    same = same && emit_qasm(a.circuit) == emit_qasm(b.circuit) &&
           compile_report(a, s, true).dump() == compile_report(b, s, true).dump();
  }
  bool rand_same = emit_qasm(random_circuit(6, 80, 3)) == emit_qasm(random_circuit(6, 80, 3));
  BenchOptions opts;
  opts.corpus = QCC_CORPUS_DIR;
  opts.archs = {"full", "aspen"};
  opts.jobs = 4;
  std::string csv1 = bench_csv(run_benchmarks(opts), true);
  opts.jobs = 2;
  std::string csv2 = bench_csv(run_benchmarks(opts), true);
  Outcome o;
  o.pass = same && rand_same && csv1 == csv2;
  o.detail = std::string("compile ") + (same ? "identical" : "differs") + ", random " +
             (rand_same ? "identical" : "differs") + ", bench CSV " + (csv1 == csv2 ? "identical" : "differs");
  return o;
}

}  // namespace

int main() {
  criterion(1, "oracle equivalence of passes and pipelines", oracle_suite);
  criterion(2, "two-qubit resynthesis", kak_suite);
  criterion(3, "single-qubit squash", euler_suite);
  criterion(4, "routing validity", routing_validity);
  criterion(5, "bridge and swap identities", bridge_swap_identities);
  criterion(6, "two-qubit overhead", overheads);
  criterion(7, "gadget depth reduction", chem_depth);
  criterion(8, "pass contracts", contracts);
  criterion(9, "divergences", divergences);
  criterion(10, "determinism", determinism);
  std::printf("%d criteria failed\n", g_failed);
  return g_failed == 0 ? 0 : 1;
}

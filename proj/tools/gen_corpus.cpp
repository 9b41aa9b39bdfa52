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

// Writes the benchmark corpus: standard circuit families as OpenQASM 2.0.
// Usage: gen_corpus <output dir>

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>

#include "harness/RandomCircuit.hpp"
#include "harness/Uccsd.hpp"
#include "io/Qasm.hpp"
#include "ir/Boxes.hpp"

using namespace qcc;

namespace {

Angle frac(long p, long q) { return Angle(Rational(p, q)); }

// Controlled phase exp(i pi t |11><11|) from CX and U1.
void cphase(Circuit& c, unsigned a, unsigned b, const Angle& t) {
  c.add_op(OpType::U1, {a}, {t * Rational(1, 2)});
  c.add_op(OpType::CX, {a, b});
  c.add_op(OpType::U1, {b}, {-(t * Rational(1, 2))});
  c.add_op(OpType::CX, {a, b});
  c.add_op(OpType::U1, {b}, {t * Rational(1, 2)});
}

Circuit qft(unsigned n) {
  Circuit c(n);
  for (unsigned i = 0; i < n; ++i) {
    c.add_op(OpType::H, {i});
    for (unsigned j = i + 1; j < n; ++j) cphase(c, j, i, frac(1, 1L << (j - i)));
  }
  for (unsigned i = 0; i < n / 2; ++i) c.add_op(OpType::SWAP, {i, n - 1 - i});
  return c;
}

Circuit ghz(unsigned n) {
  Circuit c(n);
  c.add_op(OpType::H, {0});
  for (unsigned i = 0; i + 1 < n; ++i) c.add_op(OpType::CX, {i, i + 1});
  return c;
}

Circuit bernstein_vazirani(unsigned n, unsigned secret) {
  Circuit c(n);
  unsigned anc = n - 1;
  c.add_op(OpType::X, {anc});
  for (unsigned i = 0; i < n; ++i) c.add_op(OpType::H, {i});
  for (unsigned i = 0; i < anc; ++i)
    if (secret >> i & 1) c.add_op(OpType::CX, {i, anc});
  for (unsigned i = 0; i < anc; ++i) c.add_op(OpType::H, {i});
  return c;
}

// Cuccaro ripple-carry adder on two n-bit registers plus carry in/out.
Circuit adder(unsigned n) {
  Circuit c(2 * n + 2);
  auto a = [&](unsigned i) { return 1 + 2 * i; };
  auto b = [&](unsigned i) { return 2 + 2 * i; };
  auto maj = [&](unsigned x, unsigned y, unsigned z) {
    c.add_op(OpType::CX, {z, y});
    c.add_op(OpType::CX, {z, x});
    c.add_op(OpType::CCX, {x, y, z});
  };
  auto uma = [&](unsigned x, unsigned y, unsigned z) {
    c.add_op(OpType::CCX, {x, y, z});
    c.add_op(OpType::CX, {z, x});
    c.add_op(OpType::CX, {x, y});
  };
  for (unsigned i = 0; i < n; ++i) c.add_op(OpType::X, {a(i)});
  maj(0, b(0), a(0));
  for (unsigned i = 1; i < n; ++i) maj(a(i - 1), b(i), a(i));
  c.add_op(OpType::CX, {a(n - 1), 2 * n + 1});
  for (unsigned i = n - 1; i >= 1; --i) uma(a(i - 1), b(i), a(i));
  uma(0, b(0), a(0));
  return c;
}

// Grover iterations marking |1..1> on 3 or 4 qubits; 4 qubits use one ancilla.
Circuit grover(unsigned n, unsigned iterations) {
  Circuit c(n == 4 ? 5 : 3);
  auto mcz = [&] {
    unsigned t = n - 1;
    c.add_op(OpType::H, {t});
    if (n == 4) {
      c.add_op(OpType::CCX, {0, 1, 4});
      c.add_op(OpType::CCX, {2, 4, t});
      c.add_op(OpType::CCX, {0, 1, 4});
    } else {
      c.add_op(OpType::CCX, {0, 1, t});
    }
    c.add_op(OpType::H, {t});
  };
  for (unsigned i = 0; i < n; ++i) c.add_op(OpType::H, {i});
  for (unsigned it = 0; it < iterations; ++it) {
    mcz();
    for (unsigned i = 0; i < n; ++i) {
      c.add_op(OpType::H, {i});
      c.add_op(OpType::X, {i});
    }
    mcz();
    for (unsigned i = 0; i < n; ++i) {
      c.add_op(OpType::X, {i});
      c.add_op(OpType::H, {i});
    }
  }
  return c;
}

Circuit qaoa_ring(unsigned n, unsigned layers, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ang(0.05, 0.95);
  Circuit c(n);
  for (unsigned i = 0; i < n; ++i) c.add_op(OpType::H, {i});
  for (unsigned l = 0; l < layers; ++l) {
    Angle g = Angle::real(ang(rng)), b = Angle::real(ang(rng));
    for (unsigned i = 0; i < n; ++i) {
      unsigned j = (i + 1) % n;
      c.add_op(OpType::CX, {i, j});
      c.add_op(OpType::Rz, {j}, {g});
      c.add_op(OpType::CX, {i, j});
    }
    for (unsigned i = 0; i < n; ++i) c.add_op(OpType::Rx, {i}, {b});
  }
  return c;
}

Circuit hidden_shift(unsigned n, unsigned shift) {
  Circuit c(n);
  auto oracle = [&] {
    for (unsigned i = 0; i + 1 < n; i += 2) c.add_op(OpType::CZ, {i, i + 1});
  };
  for (unsigned i = 0; i < n; ++i) c.add_op(OpType::H, {i});
  for (unsigned i = 0; i < n; ++i)
    if (shift >> i & 1) c.add_op(OpType::X, {i});
  oracle();
  for (unsigned i = 0; i < n; ++i)
    if (shift >> i & 1) c.add_op(OpType::X, {i});
  for (unsigned i = 0; i < n; ++i) c.add_op(OpType::H, {i});
  oracle();
  for (unsigned i = 0; i < n; ++i) c.add_op(OpType::H, {i});
  return c;
}

// Toffoli-heavy reversible logic: a random CCX/CX/X network.
Circuit reversible(unsigned n, unsigned gates, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<unsigned> q(0, n - 1), kind(0, 5);
  Circuit c(n);
  for (unsigned k = 0; k < gates; ++k) {
    unsigned a = q(rng), b = q(rng), t = q(rng);
    while (b == a) b = q(rng);
    while (t == a || t == b) t = q(rng);
    unsigned s = kind(rng);
    if (s < 3) c.add_op(OpType::CCX, {a, b, t});
    else if (s < 5) c.add_op(OpType::CX, {a, b});
    else c.add_op(OpType::X, {a});
  }
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: gen_corpus <output dir>\n";
    return 2;
  }
  std::filesystem::path dir = argv[1];
  std::filesystem::create_directories(dir);
  std::vector<std::pair<std::string, Circuit>> corpus;
  for (unsigned n : {4u, 5u, 6u, 8u}) corpus.push_back({"qft_" + std::to_string(n), qft(n)});
  for (unsigned n : {5u, 12u}) corpus.push_back({"ghz_" + std::to_string(n), ghz(n)});
  corpus.push_back({"bv_6", bernstein_vazirani(6, 0b10110)});
  corpus.push_back({"bv_10", bernstein_vazirani(10, 0b101101011)});
  for (unsigned n : {2u, 3u, 4u}) corpus.push_back({"adder_" + std::to_string(n), adder(n)});
  corpus.push_back({"grover_3", grover(3, 2)});
  corpus.push_back({"grover_4", grover(4, 2)});
  corpus.push_back({"qaoa_ring_6", qaoa_ring(6, 2, 11)});
  corpus.push_back({"qaoa_ring_8", qaoa_ring(8, 3, 12)});
  corpus.push_back({"hidden_shift_6", hidden_shift(6, 0b101001)});
  corpus.push_back({"hidden_shift_10", hidden_shift(10, 0b1100101101)});
  corpus.push_back({"reversible_5", reversible(5, 20, 21)});
  corpus.push_back({"reversible_7", reversible(7, 30, 22)});
  corpus.push_back({"reversible_9", reversible(9, 40, 23)});
  for (unsigned n : {4u, 6u, 8u})
    corpus.push_back({"uccsd_" + std::to_string(n), decompose_boxes(uccsd_circuit(n, 12, 30 + n))});
  const std::vector<std::tuple<unsigned, unsigned, unsigned>> randoms = {
      {4, 40, 1}, {5, 60, 2}, {6, 80, 3}, {8, 100, 4}, {10, 150, 5}, {12, 200, 6}, {16, 250, 7}};
  for (auto [n, g, s] : randoms)
    corpus.push_back({"random_" + std::to_string(n) + "_" + std::to_string(g), random_circuit(n, g, s)});
  for (const auto& [name, c] : corpus) {
    std::ofstream out(dir / (name + ".qasm"));
    out << emit_qasm(c);
  }
  std::cout << "wrote " << corpus.size() << " circuits to " << dir.string() << "\n";
  return 0;
}

// Copyright 2026 The itc Authors
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

#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "itc/assembly.hpp"
#include "itc/benchmarks.hpp"
#include "itc/circuit.hpp"
#include "itc/simulator.hpp"
#include "test_support.hpp"

using namespace itc;

TEST_CASE("gate construction validates arity", "[circuit]") {
  CHECK_THROWS_AS(make_gate(GateKind::CNOT, {0}), CircuitError);
  CHECK_THROWS_AS(make_gate(GateKind::CNOT, {1, 1}), CircuitError);
  CHECK_THROWS_AS(make_gate(GateKind::RX, {0}), CircuitError);
  CHECK(gates::rx(0.5, 2).params.size() == 1);
  CHECK(gates::measure(0).kind == GateKind::MEASURE);
  CHECK_FALSE(gates::measure(0).is_single_qubit());
}

TEST_CASE("circuit append checks range and measurement", "[circuit]") {
  Circuit c(2);
  CHECK_THROWS_AS(c.append(gates::h(2)), CircuitError);
  c.append(gates::h(0));
  c.append(gates::measure(0));
  CHECK(c.is_measured(0));
  CHECK_FALSE(c.is_measured(1));
  CHECK_THROWS_AS(c.append(gates::x(0)), CircuitError);
  CHECK_THROWS_AS(c.append(gates::cnot(1, 0)), CircuitError);
  c.append(gates::measure(1));
  CHECK(c.measured_qubits() == std::vector<Qubit>{0, 1});
  CHECK(c.count(GateKind::MEASURE) == 2);
}

TEST_CASE("mnemonics round-trip", "[circuit]") {
  for (auto k : {GateKind::H, GateKind::RPHI, GateKind::SWAP, GateKind::XX, GateKind::MEASURE}) {
    CHECK(gate_kind_from_mnemonic(mnemonic(k)) == k);
  }
  CHECK_FALSE(gate_kind_from_mnemonic("ccx").has_value());
}

TEST_CASE("parse simple programs", "[asm]") {
  const Circuit bell = parse_asm("qreg 2\nh 0\ncnot 0 1\n");
  CHECK(bell == Circuit(2, {gates::h(0), gates::cnot(0, 1)}));
  CHECK(parse_asm("qreg 1\n").empty());
  const Circuit r = parse_asm("qreg 1\nrz 1.5707963 0\n");
  REQUIRE(r.size() == 1);
  CHECK(r.gates()[0].params[0] == 1.5707963);
  CHECK(parse_asm("# header comment\n\nqreg 3  # three\n  xx +0.5 0 2 # pair\n").size() == 1);
}

TEST_CASE("parse errors carry line numbers", "[asm]") {
  auto line_of = [](const char* text) {
    try {
      parse_asm(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  CHECK(line_of("h 0\n") == 1);
  CHECK(line_of("qreg 2\nh 0\nfoo 1\n") == 3);
  CHECK(line_of("qreg 2\ncnot 0\n") == 2);
  CHECK(line_of("qreg 2\nrx abc 0\n") == 2);
  CHECK(line_of("qreg 2\nh 5\n") == 2);
  CHECK(line_of("qreg 2\nmeasure 0\nh 0\n") == 3);
  CHECK(line_of("qreg 2\nqreg 3\n") == 2);
  CHECK(line_of("qreg 0\n") == 1);
  CHECK(line_of("") == 1);
}

TEST_CASE("print_asm output and round trip", "[asm]") {
  CHECK(print_asm(Circuit(2, {gates::h(0), gates::cnot(0, 1)})) == "qreg 2\nh 0\ncnot 0 1\n");
  CHECK(print_asm(Circuit(3)) == "qreg 3\n");
  std::mt19937_64 rng(7);
  for (int k = 0; k < 20; ++k) {
    const Circuit c = test::random_circuit(rng, 3, 15);
    CHECK(parse_asm(print_asm(c)) == c);
  }
}

TEST_CASE("benchmarks build with expected shape", "[benchmarks]") {
  CHECK(benchmark_names().size() == 5);
  for (auto name : benchmark_names()) {
    const Circuit c = build_benchmark(name);
    CHECK(c.n_qubits() == 3);
    CHECK_FALSE(c.measured_qubits().empty());
  }
  CHECK(build_benchmark("ghz").count(GateKind::CNOT) == 2);
  CHECK(build_benchmark("bv").measured_qubits() == std::vector<Qubit>{0, 1});
  CHECK_THROWS_AS(build_benchmark("shor"), CircuitError);
}

TEST_CASE("benchmark outputs", "[benchmarks]") {
  auto dist = [](std::string_view name) {
    const Circuit c = build_benchmark(name);
    return marginal(simulate(c), c.measured_qubits());
  };
  const auto ghz = dist("ghz");
  CHECK(tvd(ghz, {{"000", 0.5}, {"111", 0.5}}) < 1e-12);
  // Hidden string 11 on the two data qubits.
  CHECK(tvd(dist("bv"), {{"11", 1.0}}) < 1e-12);
  CHECK(tvd(dist("grover"), {{"101", 0.5}, {"110", 0.5}}) < 1e-12);
  // QFT of |000> is uniform.
  const auto qft = dist("qft");
  CHECK(qft.size() == 8);
  for (const auto& [k, p] : qft) CHECK(p == Catch::Approx(0.125));
  double total = 0;
  for (const auto& [k, p] : dist("vqe_ansatz")) total += p;
  CHECK(total == Catch::Approx(1.0));
}

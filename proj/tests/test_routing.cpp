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

#include "itc/benchmarks.hpp"
#include "itc/routing.hpp"
#include "itc/simulator.hpp"
#include "test_support.hpp"

using namespace itc;

TEST_CASE("coupling maps", "[routing]") {
  const auto lin = CouplingMap::linear(4);
  CHECK(lin.edges().size() == 3);
  CHECK(lin.connected(1, 2));
  CHECK(lin.connected(2, 1));
  CHECK_FALSE(lin.connected(0, 2));
  CHECK(lin.is_linear_chain());
  const auto full = CouplingMap::full(4);
  CHECK(full.edges().size() == 6);
  CHECK_FALSE(full.is_linear_chain());
  CHECK_THROWS_AS(CouplingMap(3, {{0, 1}}), CircuitError);
  CHECK_THROWS_AS(CouplingMap(2, {{0, 5}}), CircuitError);
}

TEST_CASE("placement bookkeeping", "[routing]") {
  Placement p = Placement::identity(3);
  p.swap_ions(0, 1);
  CHECK(p.physical(0) == 1);
  CHECK(p.logical(0) == 1);
  p.swap_ions(1, 2);
  CHECK(p.physical(0) == 2);
  CHECK(p.logical_to_physical() == std::vector<Ion>{2, 0, 1});
  CHECK_THROWS(Placement({0, 0}));
}

TEST_CASE("adjacent gates need no swaps", "[routing]") {
  const Circuit c(3, {gates::cnot(0, 1), gates::cnot(2, 1), gates::measure(0)});
  const auto r = route(c, CouplingMap::linear(3));
  CHECK(r.swaps_inserted == 0);
  CHECK(r.circuit == c);
  CHECK(r.final_placement == Placement::identity(3));
}

TEST_CASE("distant pair swaps the lesser ion forward", "[routing]") {
  const Circuit c(3, {gates::cnot(0, 2)});
  const auto r = route(c, CouplingMap::linear(3));
  CHECK(r.swaps_inserted == 1);
  REQUIRE(r.circuit.size() == 2);
  CHECK(r.circuit.gates()[0] == gates::swap(0, 1));
  CHECK(r.circuit.gates()[1] == gates::cnot(1, 2));
  CHECK(r.final_placement.physical(0) == 1);
  CHECK(r.final_placement.physical(1) == 0);
}

TEST_CASE("full connectivity inserts nothing", "[routing]") {
  for (auto name : benchmark_names()) {
    const Circuit c = build_benchmark(name);
    const auto r = route(c, CouplingMap::full(3));
    CHECK(r.swaps_inserted == 0);
    CHECK(r.circuit == c);
  }
}

TEST_CASE("measurement is deferred past later swaps", "[routing]") {
  const Circuit c(3, {gates::measure(1), gates::cnot(0, 2)});
  const auto r = route(c, CouplingMap::linear(3));
  REQUIRE(r.swaps_inserted == 1);
  CHECK(r.circuit.gates().back() == gates::measure(r.final_placement.physical(1)));
  for (std::size_t k = 0; k + 1 < r.circuit.size(); ++k) {
    CHECK(r.circuit.gates()[k].kind != GateKind::MEASURE);
  }
}

TEST_CASE("non-chain maps route along shortest paths", "[routing]") {
  // Star centred on ion 0.
  const CouplingMap star(4, {{0, 1}, {0, 2}, {0, 3}});
  const Circuit c(4, {gates::cnot(1, 3), gates::cz(2, 1)});
  const auto r = route(c, star);
  for (const auto& g : r.circuit.gates()) {
    if (g.is_two_qubit()) CHECK(star.connected(g.qubits[0], g.qubits[1]));
  }
  const CMat u = test::circuit_unitary(c);
  const CMat v = test::circuit_unitary(r.circuit);
  std::vector<std::size_t> ions;
  for (Qubit q = 0; q < 4; ++q) ions.push_back(r.final_placement.physical(q));
  CHECK(tvd(test::oracle_marginal(u, 4, {0, 1, 2, 3}), test::oracle_marginal(v, 4, ions)) <
        1e-12);
}

TEST_CASE("routing preserves the state up to relabelling", "[routing]") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 50; ++k) {
    const Circuit c = test::random_circuit(rng, 4, 20);
    const auto r = route(c, CouplingMap::linear(4));
    for (const auto& g : r.circuit.gates()) {
      if (g.is_two_qubit()) CHECK(std::abs(long(g.qubits[0]) - long(g.qubits[1])) == 1);
    }
    // Compare amplitudes after permuting routed ions back to logical order.
    const Eigen::VectorXcd a = test::circuit_unitary(c).col(0);
    const Eigen::VectorXcd b = test::circuit_unitary(r.circuit).col(0);
    double worst = 0;
    for (Eigen::Index idx = 0; idx < 16; ++idx) {
      Eigen::Index mapped = 0;
      for (Qubit q = 0; q < 4; ++q) {
        if ((idx >> (3 - q)) & 1) mapped |= Eigen::Index{1} << (3 - r.final_placement.physical(q));
      }
      worst = std::max(worst, std::abs(a(idx) - b(mapped)));
    }
    CHECK(worst < 1e-10);
  }
}

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
#include "itc/two_qubit_pass.hpp"
#include "test_support.hpp"

using namespace itc;

TEST_CASE("CNOT lowering reproduces CNOT with phase e^{-i pi/4}", "[pass-xx]") {
  const Circuit lowered = lower_two_qubit(Circuit(2, {gates::cnot(0, 1)}));
  CHECK(lowered.count(GateKind::XX) == 1);
  CHECK(lowered.size() == 5);
  const CMat u = test::circuit_unitary(lowered);
  const CMat expected = std::polar(1.0, -kPi / 4) * standard_gate_matrix(GateKind::CNOT, {});
  CHECK(test::max_abs_diff(u, expected) < 1e-10);
}

TEST_CASE("reversed and distant CNOTs lower correctly", "[pass-xx]") {
  for (auto [c, t] : {std::pair<Qubit, Qubit>{1, 0}, {0, 2}, {2, 0}}) {
    const Circuit in(3, {gates::cnot(c, t)});
    CHECK(phase_distance(test::circuit_unitary(lower_two_qubit(in)), test::circuit_unitary(in)) <
          1e-10);
  }
}

TEST_CASE("CZ and SWAP lower up to global phase", "[pass-xx]") {
  const Circuit cz(2, {gates::cz(0, 1)});
  const Circuit sw(2, {gates::swap(0, 1)});
  CHECK(lower_two_qubit(cz).count(GateKind::XX) == 1);
  CHECK(lower_two_qubit(sw).count(GateKind::XX) == 3);
  CHECK(phase_distance(test::circuit_unitary(lower_two_qubit(cz)), test::circuit_unitary(cz)) <
        1e-10);
  CHECK(phase_distance(test::circuit_unitary(lower_two_qubit(sw)), test::circuit_unitary(sw)) <
        1e-10);
}

TEST_CASE("native XX passes through, others are rejected", "[pass-xx]") {
  const Circuit ok(2, {gates::xx(kPi / 4, 0, 1)});
  CHECK(lower_two_qubit(ok) == ok);
  CHECK_THROWS_AS(lower_two_qubit(Circuit(2, {gates::xx(0.3, 0, 1)})), CircuitError);
}

TEST_CASE("XX count equals CNOT + CZ + 3 SWAP", "[pass-xx]") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 100; ++k) {
    const Circuit c = test::random_circuit(rng, 3, 20);
    const auto r = route(c, CouplingMap::linear(3));
    const auto& rc = r.circuit;
    const Circuit lowered = lower_two_qubit(rc);
    CHECK(lowered.count(GateKind::XX) ==
          rc.count(GateKind::CNOT) + rc.count(GateKind::CZ) + 3 * rc.count(GateKind::SWAP));
    CHECK(lowered.two_qubit_count() == lowered.count(GateKind::XX));
    CHECK(phase_distance(test::circuit_unitary(lowered), test::circuit_unitary(rc)) < 1e-9);
  }
}

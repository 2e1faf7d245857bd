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

#include "itc/simulator.hpp"
#include "test_support.hpp"

using namespace itc;

TEST_CASE("qubit 0 is the leftmost bit", "[sim]") {
  StateVector s(3);
  s.apply(gates::x(0));
  CHECK(std::abs(s.amplitude("100") - 1.0) < 1e-15);
  s.apply(gates::cnot(0, 2));
  CHECK(std::abs(s.amplitude("101") - 1.0) < 1e-15);
  const auto d = marginal(s, std::vector<Qubit>{2, 1});
  CHECK(d.at("10") == Catch::Approx(1.0));
}

TEST_CASE("state vector agrees with the Kronecker oracle", "[sim]") {
  std::mt19937_64 rng(2);
  for (int k = 0; k < 40; ++k) {
    const Circuit c = test::random_circuit(rng, 4, 25);
    const Eigen::VectorXcd want = test::circuit_unitary(c).col(0);
    const StateVector got = simulate(c);
    CHECK((got.amplitudes() - want).norm() < 1e-12);
  }
}

TEST_CASE("native table simulation agrees with the oracle", "[sim]") {
  const Circuit n(3, {gates::rphi(0.4, kPi / 2, 2), gates::xx(kPi / 4, 2, 0),
                      gates::rphi(-1.0, kPi / 2, 1), gates::xx(kPi / 4, 1, 2),
                      gates::measure(0)});
  const NativeTable t = to_table(n, true);
  const Eigen::VectorXcd want = test::circuit_unitary(n).col(0);
  CHECK((simulate_table(t, 3).amplitudes() - want).norm() < 1e-12);
}

TEST_CASE("norm is preserved over long circuits", "[sim]") {
  std::mt19937_64 rng(9);
  Circuit c = test::random_circuit(rng, 5, 1000);
  CHECK(std::abs(simulate(c).norm() - 1.0) < 1e-10);
}

TEST_CASE("marginal through a placement", "[sim]") {
  StateVector s(3);
  s.apply(gates::x(2));
  // Logical qubit 0 lives on ion 2.
  const Placement p({2, 0, 1});
  const auto d = marginal(s, std::vector<Qubit>{0}, p);
  CHECK(d.at("1") == Catch::Approx(1.0));
  CHECK_THROWS_AS(marginal(s, std::vector<Qubit>{}), DimensionError);
}

TEST_CASE("distribution sums to one and is non-negative", "[sim]") {
  std::mt19937_64 rng(4);
  const Circuit c = test::random_circuit(rng, 3, 20);
  double total = 0;
  for (const auto& [k, p] : marginal(simulate(c), c.measured_qubits())) {
    CHECK(p >= 0);
    total += p;
  }
  CHECK(total == Catch::Approx(1.0).margin(1e-10));
}

TEST_CASE("total variation distance", "[sim]") {
  CHECK(tvd({{"0", 1.0}}, {{"1", 1.0}}) == Catch::Approx(1.0));
  CHECK(tvd({{"00", 0.5}, {"11", 0.5}}, {{"00", 0.5}, {"11", 0.5}}) == 0.0);
  CHECK(tvd({{"0", 0.75}, {"1", 0.25}}, {{"0", 0.25}, {"1", 0.75}}) == Catch::Approx(0.5));
}

TEST_CASE("distribution JSON uses twelve significant digits", "[sim]") {
  const std::string j = distribution_json({{"00", 0.5}, {"11", 1.0 / 3.0}});
  CHECK(j == R"({"00":0.5,"11":0.333333333333})");
}

TEST_CASE("seeded sampling is reproducible", "[sim]") {
  const MeasDistribution d{{"0", 0.3}, {"1", 0.7}};
  const auto a = sample(d, 2000, 42);
  CHECK(a == sample(d, 2000, 42));
  std::size_t total = 0;
  for (const auto& [k, n] : a) total += n;
  CHECK(total == 2000);
  CHECK(a.at("1") > a.at("0"));
}

TEST_CASE("simulator size limits", "[sim]") {
  CHECK_THROWS_AS(StateVector(0), CircuitError);
  CHECK_THROWS_AS(StateVector(kMaxSimulatedQubits + 1), CircuitError);
}

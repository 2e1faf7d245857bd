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

#include "itc/benchmarks.hpp"

#include <array>
#include <string>

#include "itc/matrix.hpp"

namespace itc {

namespace {

using namespace gates;

void measure_all(Circuit& c, std::size_t count) {
  for (Qubit q = 0; q < count; ++q) c.append(measure(q));
}

Circuit ghz(std::size_t n) {
  Circuit c(n);
  c.append(h(0));
  for (Qubit q = 0; q + 1 < n; ++q) c.append(cnot(q, q + 1));
  measure_all(c, n);
  return c;
}

// Secret s = "11": ancilla is the last qubit, only the data register is
// measured.
Circuit bernstein_vazirani() {
  constexpr std::size_t n = 3;
  const std::string secret = "11";
  Circuit c(n);
  c.append(x(n - 1));
  for (Qubit q = 0; q < n; ++q) c.append(h(q));
  for (Qubit q = 0; q < secret.size(); ++q) {
    if (secret[q] == '1') c.append(cnot(q, n - 1));
  }
  for (Qubit q = 0; q < n; ++q) c.append(h(q));
  measure_all(c, secret.size());
  return c;
}

// CCZ on (0, 1, 2) in the standard six-CNOT form, T gates as RZ(+-pi/4).
void ccz(Circuit& c) {
  const double t = kPi / 4;
  c.append(cnot(1, 2));
  c.append(rz(-t, 2));
  c.append(cnot(0, 2));
  c.append(rz(t, 2));
  c.append(cnot(1, 2));
  c.append(rz(-t, 2));
  c.append(cnot(0, 2));
  c.append(rz(t, 1));
  c.append(rz(t, 2));
  c.append(cnot(0, 1));
  c.append(rz(t, 0));
  c.append(rz(-t, 1));
  c.append(cnot(0, 1));
}

// One Grover iteration marking |101> and |110> (qubit 0 leftmost). The
// oracle flips the phase when q0 = 1 and q1 xor q2 = 1.
Circuit grover() {
  Circuit c(3);
  for (Qubit q = 0; q < 3; ++q) c.append(h(q));
  c.append(cnot(1, 2));
  c.append(cz(0, 2));
  c.append(cnot(1, 2));
  for (Qubit q = 0; q < 3; ++q) c.append(h(q));
  for (Qubit q = 0; q < 3; ++q) c.append(x(q));
  ccz(c);
  for (Qubit q = 0; q < 3; ++q) c.append(x(q));
  for (Qubit q = 0; q < 3; ++q) c.append(h(q));
  measure_all(c, 3);
  return c;
}

// Controlled phase diag(1, 1, 1, e^{i lambda}) up to global phase.
void controlled_phase(Circuit& c, double lambda, Qubit control, Qubit target) {
  c.append(rz(lambda / 2, control));
  c.append(cnot(control, target));
  c.append(rz(-lambda / 2, target));
  c.append(cnot(control, target));
  c.append(rz(lambda / 2, target));
}

Circuit qft(std::size_t n) {
  Circuit c(n);
  for (Qubit j = 0; j < n; ++j) {
    c.append(h(j));
    for (Qubit k = j + 1; k < n; ++k) {
      controlled_phase(c, kPi / static_cast<double>(1ULL << (k - j)), k, j);
    }
  }
  for (Qubit j = 0; j < n / 2; ++j) c.append(swap(j, n - 1 - j));
  measure_all(c, n);
  return c;
}

enum class Pauli { X, Y };

// exp(-i angle/2 P_a (x) P_b) via basis change, CNOT, RZ, CNOT.
void pauli_exponential(Circuit& c, Qubit a, Pauli pa, Qubit b, Pauli pb, double angle) {
  auto enter = [&](Qubit q, Pauli p) {
    c.append(p == Pauli::X ? h(q) : rx(kPi / 2, q));
  };
  auto leave = [&](Qubit q, Pauli p) {
    c.append(p == Pauli::X ? h(q) : rx(-kPi / 2, q));
  };
  enter(a, pa);
  enter(b, pb);
  c.append(cnot(a, b));
  c.append(rz(angle, b));
  c.append(cnot(a, b));
  leave(a, pa);
  leave(b, pb);
}

// Single-parameter UCC-style ansatz: reference |001>, excitations 2->0 and
// 2->1 with amplitudes theta and theta/2, Trotterised term by term.
Circuit vqe_ansatz(double theta) {
  Circuit c(3);
  c.append(x(2));
  pauli_exponential(c, 0, Pauli::X, 2, Pauli::Y, theta);
  pauli_exponential(c, 1, Pauli::X, 2, Pauli::Y, theta / 2);
  pauli_exponential(c, 0, Pauli::Y, 2, Pauli::X, -theta);
  pauli_exponential(c, 1, Pauli::Y, 2, Pauli::X, -theta / 2);
  measure_all(c, 3);
  return c;
}

Circuit bell() {
  Circuit c(2);
  c.append(h(0));
  c.append(cnot(0, 1));
  measure_all(c, 2);
  return c;
}

void require_three(std::string_view name, std::size_t n) {
  if (n != 3) {
    throw CircuitError("benchmark '" + std::string(name) +
                       "' is defined for 3 qubits only");
  }
}

constexpr std::array<std::string_view, 5> kNames{"ghz", "bv", "grover", "qft",
                                                 "vqe_ansatz"};

}  // namespace

std::span<const std::string_view> benchmark_names() { return kNames; }

Circuit build_benchmark(std::string_view name, std::size_t n) {
  if (name == "ghz" || name == "qft") {
    if (n < 2) throw CircuitError("benchmark '" + std::string(name) + "' needs n >= 2");
    return name == "ghz" ? ghz(n) : qft(n);
  }
  if (name == "bv") {
    require_three(name, n);
    return bernstein_vazirani();
  }
  if (name == "grover") {
    require_three(name, n);
    return grover();
  }
  if (name == "vqe_ansatz" || name == "vqe") {
    require_three(name, n);
    return vqe_ansatz(kVqeTheta);
  }
  if (name == "bell") {
    if (n != 2 && n != 3) throw CircuitError("benchmark 'bell' is a 2-qubit circuit");
    return bell();
  }
  throw CircuitError("unknown benchmark '" + std::string(name) + "'");
}

}  // namespace itc

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

#include "itc/circuit.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace itc {

namespace {

struct KindInfo {
  GateKind kind;
  std::string_view mnemonic;
  std::size_t qubits;
  std::size_t params;
};

constexpr std::array<KindInfo, 15> kKinds{{
    {GateKind::H, "h", 1, 0},
    {GateKind::X, "x", 1, 0},
    {GateKind::Y, "y", 1, 0},
    {GateKind::Z, "z", 1, 0},
    {GateKind::S, "s", 1, 0},
    {GateKind::T, "t", 1, 0},
    {GateKind::RX, "rx", 1, 1},
    {GateKind::RY, "ry", 1, 1},
    {GateKind::RZ, "rz", 1, 1},
    {GateKind::RPHI, "rphi", 1, 2},
    {GateKind::CNOT, "cnot", 2, 0},
    {GateKind::CZ, "cz", 2, 0},
    {GateKind::SWAP, "swap", 2, 0},
    {GateKind::XX, "xx", 2, 1},
    {GateKind::MEASURE, "measure", 1, 0},
}};

const KindInfo& info(GateKind kind) {
  return kKinds[static_cast<std::size_t>(kind)];
}

}  // namespace

std::size_t qubit_arity(GateKind kind) { return info(kind).qubits; }
std::size_t param_arity(GateKind kind) { return info(kind).params; }
std::string_view mnemonic(GateKind kind) { return info(kind).mnemonic; }

std::optional<GateKind> gate_kind_from_mnemonic(std::string_view name) {
  for (const auto& k : kKinds) {
    if (k.mnemonic == name) return k.kind;
  }
  return std::nullopt;
}

Gate make_gate(GateKind kind, std::vector<Qubit> qubits,
               std::vector<double> params) {
  if (qubits.size() != qubit_arity(kind)) {
    throw CircuitError(std::string(mnemonic(kind)) + " expects " +
                       std::to_string(qubit_arity(kind)) + " qubit(s), got " +
                       std::to_string(qubits.size()));
  }
  if (params.size() != param_arity(kind)) {
    throw CircuitError(std::string(mnemonic(kind)) + " expects " +
                       std::to_string(param_arity(kind)) +
                       " parameter(s), got " + std::to_string(params.size()));
  }
  if (qubits.size() == 2 && qubits[0] == qubits[1]) {
    throw CircuitError(std::string(mnemonic(kind)) +
                       ": qubit operands must be distinct");
  }
  return Gate{kind, std::move(params), std::move(qubits)};
}

namespace gates {

Gate h(Qubit q) { return make_gate(GateKind::H, {q}); }
Gate x(Qubit q) { return make_gate(GateKind::X, {q}); }
Gate y(Qubit q) { return make_gate(GateKind::Y, {q}); }
Gate z(Qubit q) { return make_gate(GateKind::Z, {q}); }
Gate s(Qubit q) { return make_gate(GateKind::S, {q}); }
Gate t(Qubit q) { return make_gate(GateKind::T, {q}); }
Gate rx(double theta, Qubit q) { return make_gate(GateKind::RX, {q}, {theta}); }
Gate ry(double theta, Qubit q) { return make_gate(GateKind::RY, {q}, {theta}); }
Gate rz(double theta, Qubit q) { return make_gate(GateKind::RZ, {q}, {theta}); }
Gate rphi(double phi, double theta, Qubit q) {
  return make_gate(GateKind::RPHI, {q}, {phi, theta});
}
Gate cnot(Qubit control, Qubit target) {
  return make_gate(GateKind::CNOT, {control, target});
}
Gate cz(Qubit a, Qubit b) { return make_gate(GateKind::CZ, {a, b}); }
Gate swap(Qubit a, Qubit b) { return make_gate(GateKind::SWAP, {a, b}); }
Gate xx(double alpha, Qubit a, Qubit b) {
  return make_gate(GateKind::XX, {a, b}, {alpha});
}
Gate measure(Qubit q) { return make_gate(GateKind::MEASURE, {q}); }

}  // namespace gates

Circuit::Circuit(std::size_t n_qubits)
    : n_qubits_(n_qubits), measured_(n_qubits, false) {
  if (n_qubits == 0) throw CircuitError("register must hold at least one qubit");
}

Circuit::Circuit(std::size_t n_qubits, std::initializer_list<Gate> gates)
    : Circuit(n_qubits) {
  for (const auto& g : gates) append(g);
}

void Circuit::append(Gate gate) {
  // Re-check arity so hand-built Gate aggregates get the same validation.
  gate = make_gate(gate.kind, std::move(gate.qubits), std::move(gate.params));
  for (Qubit q : gate.qubits) {
    if (q >= n_qubits_) {
      throw CircuitError("qubit " + std::to_string(q) +
                         " out of range for register of " +
                         std::to_string(n_qubits_));
    }
    if (measured_[q]) {
      throw CircuitError("qubit " + std::to_string(q) +
                         " is used after its measurement");
    }
  }
  if (gate.kind == GateKind::MEASURE) measured_[gate.qubits[0]] = true;
  gates_.push_back(std::move(gate));
}

bool Circuit::is_measured(Qubit q) const {
  return q < n_qubits_ && measured_[q];
}

std::vector<Qubit> Circuit::measured_qubits() const {
  std::vector<Qubit> out;
  for (Qubit q = 0; q < n_qubits_; ++q) {
    if (measured_[q]) out.push_back(q);
  }
  return out;
}

std::size_t Circuit::count(GateKind kind) const {
  return static_cast<std::size_t>(std::count_if(
      gates_.begin(), gates_.end(), [kind](const Gate& g) { return g.kind == kind; }));
}

std::size_t Circuit::two_qubit_count() const {
  return static_cast<std::size_t>(std::count_if(
      gates_.begin(), gates_.end(), [](const Gate& g) { return g.is_two_qubit(); }));
}

}  // namespace itc

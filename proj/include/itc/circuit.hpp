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

#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "itc/error.hpp"

namespace itc {

using Qubit = std::size_t;

enum class GateKind {
  H,
  X,
  Y,
  Z,
  S,
  T,
  RX,
  RY,
  RZ,
  RPHI,
  CNOT,
  CZ,
  SWAP,
  XX,
  MEASURE,
};

/// Number of qubits a gate of this kind acts on.
std::size_t qubit_arity(GateKind kind);

/// Number of real parameters (radians) a gate of this kind carries.
std::size_t param_arity(GateKind kind);

/// Lowercase assembly mnemonic, e.g. "cnot".
std::string_view mnemonic(GateKind kind);

std::optional<GateKind> gate_kind_from_mnemonic(std::string_view name);

struct Gate {
  GateKind kind;
  std::vector<double> params;
  std::vector<Qubit> qubits;

  bool is_single_qubit() const { return qubits.size() == 1 && kind != GateKind::MEASURE; }
  bool is_two_qubit() const { return qubits.size() == 2; }

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// Builds a gate and checks arity and qubit distinctness.
Gate make_gate(GateKind kind, std::vector<Qubit> qubits,
               std::vector<double> params = {});

namespace gates {

Gate h(Qubit q);
Gate x(Qubit q);
Gate y(Qubit q);
Gate z(Qubit q);
Gate s(Qubit q);
Gate t(Qubit q);
Gate rx(double theta, Qubit q);
Gate ry(double theta, Qubit q);
Gate rz(double theta, Qubit q);
Gate rphi(double phi, double theta, Qubit q);
Gate cnot(Qubit control, Qubit target);
Gate cz(Qubit a, Qubit b);
Gate swap(Qubit a, Qubit b);
Gate xx(double alpha, Qubit a, Qubit b);
Gate measure(Qubit q);

}  // namespace gates

/// A flat, time-ordered gate list over a register of `n_qubits` qubits.
///
/// Measurement is terminal per qubit: `append` rejects any gate that touches
/// a qubit which has already been measured.
class Circuit {
 public:
  explicit Circuit(std::size_t n_qubits);
  Circuit(std::size_t n_qubits, std::initializer_list<Gate> gates);

  std::size_t n_qubits() const noexcept { return n_qubits_; }
  const std::vector<Gate>& gates() const noexcept { return gates_; }
  std::size_t size() const noexcept { return gates_.size(); }
  bool empty() const noexcept { return gates_.empty(); }

  void append(Gate gate);

  bool is_measured(Qubit q) const;

  /// Measured qubits in ascending order.
  std::vector<Qubit> measured_qubits() const;

  std::size_t count(GateKind kind) const;
  std::size_t two_qubit_count() const;

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  std::size_t n_qubits_;
  std::vector<Gate> gates_;
  std::vector<bool> measured_;
};

}  // namespace itc

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
#include <cstdint>
#include <map>
#include <span>
#include <string>

#include <Eigen/Dense>

#include "itc/circuit.hpp"
#include "itc/matrix.hpp"
#include "itc/native_table.hpp"
#include "itc/routing.hpp"

namespace itc {

inline constexpr std::size_t kMaxSimulatedQubits = 12;

/// Dense state over n qubits. Basis index bit (n-1-q) holds qubit q, so
/// qubit 0 is the leftmost character of a bitstring.
class StateVector {
 public:
  /// |0...0>. Throws CircuitError above kMaxSimulatedQubits.
  explicit StateVector(std::size_t n_qubits);

  std::size_t n_qubits() const noexcept { return n_qubits_; }
  const Eigen::VectorXcd& amplitudes() const noexcept { return amps_; }
  std::complex<double> amplitude(std::string_view bitstring) const;

  void apply(const Mat2d& u, Qubit q);
  /// `u` in the basis |a b> with a as the most significant bit.
  void apply(const Mat4d& u, Qubit a, Qubit b);
  /// Applies a gate's unitary; MEASURE is a no-op.
  void apply(const Gate& gate);

  double norm() const { return amps_.norm(); }

 private:
  std::size_t n_qubits_;
  Eigen::VectorXcd amps_;
};

/// Applies every gate to |0...0>; measurements are recorded, not collapsed.
StateVector simulate(const Circuit& circuit);

StateVector simulate_table(const NativeTable& table, std::size_t n_ions);

/// Exact outcome probabilities keyed by bitstring.
using MeasDistribution = std::map<std::string, double>;

/// Marginal over `measured` logical qubits; character k of each key is qubit
/// measured[k], read from ion relabel.physical(measured[k]).
MeasDistribution marginal(const StateVector& state, std::span<const Qubit> measured,
                          const Placement& relabel);

MeasDistribution marginal(const StateVector& state, std::span<const Qubit> measured);

/// Total variation distance; keys missing on one side count as zero.
double tvd(const MeasDistribution& a, const MeasDistribution& b);

/// Seeded shot sampling for demonstration output.
std::map<std::string, std::size_t> sample(const MeasDistribution& dist, std::size_t shots,
                                          std::uint64_t seed);

/// {"bitstring": probability, ...} with 12 significant digits.
std::string distribution_json(const MeasDistribution& dist);

}  // namespace itc

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

#include "itc/circuit.hpp"
#include "itc/decomposition.hpp"

namespace itc {

struct SingleQubitPassStats {
  std::size_t runs = 0;
  std::size_t identity_skips = 0;
  std::size_t fallbacks = 0;
  std::size_t discarded_runs = 0;
  std::size_t emitted_rotations = 0;
  double max_residual = 0;  // worst objective value among emitted runs
};

/// Replaces every maximal run of single-qubit gates on a qubit by
/// R_phi(pi/2) rotations.
///
/// A run ends at an XX touching the qubit, at its MEASURE, or at the end of
/// the circuit, which selects the variant used for it. An RX left over by an
/// up-to-X decomposition is carried through the XX and acts first in the
/// qubit's next run. With discard_trailing, runs that reach the end of the
/// circuit on unmeasured qubits are dropped (never in legacy mode).
///
/// The input must be free of CNOT, CZ and SWAP (see lower_two_qubit). The
/// output holds only RPHI(phi, pi/2), XX and MEASURE.
Circuit run_single_qubit_pass(const Circuit& circuit, const OptFlags& flags,
                              double tolerance = kDefaultTolerance, std::uint64_t seed = 0,
                              SingleQubitPassStats* stats = nullptr);

}  // namespace itc

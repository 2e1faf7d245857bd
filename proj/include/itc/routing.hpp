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
#include <set>
#include <utility>
#include <vector>

#include "itc/circuit.hpp"

namespace itc {

using Ion = std::size_t;

/// Ion pairs on which a two-qubit gate may act directly.
class CouplingMap {
 public:
  /// Linear chain 0-1-...-(n-1).
  static CouplingMap linear(std::size_t n_ions);
  /// All n(n-1)/2 pairs.
  static CouplingMap full(std::size_t n_ions);

  /// Throws CircuitError if an edge is out of range or the graph is
  /// disconnected.
  CouplingMap(std::size_t n_ions, std::set<std::pair<Ion, Ion>> edges);

  std::size_t n_ions() const noexcept { return n_ions_; }
  const std::set<std::pair<Ion, Ion>>& edges() const noexcept { return edges_; }
  bool connected(Ion a, Ion b) const;
  bool is_linear_chain() const;

 private:
  std::size_t n_ions_;
  std::set<std::pair<Ion, Ion>> edges_;  // stored with first < second
};

/// Bijection from logical qubits to ions.
class Placement {
 public:
  static Placement identity(std::size_t n);

  explicit Placement(std::vector<Ion> logical_to_physical);

  Ion physical(Qubit logical) const { return to_physical_.at(logical); }
  Qubit logical(Ion physical) const { return to_logical_.at(physical); }
  std::size_t size() const noexcept { return to_physical_.size(); }
  const std::vector<Ion>& logical_to_physical() const noexcept { return to_physical_; }

  /// Exchange whatever logical qubits sit on ions a and b.
  void swap_ions(Ion a, Ion b);

  friend bool operator==(const Placement&, const Placement&) = default;

 private:
  std::vector<Ion> to_physical_;
  std::vector<Qubit> to_logical_;
};

struct RoutedCircuit {
  Circuit circuit;  // over ions
  Placement final_placement;
  std::size_t swaps_inserted = 0;
};

/// Places logical qubit i on ion i and inserts SWAPs so every two-qubit gate
/// acts on an edge of `map`.
///
/// On a linear chain a gate on non-adjacent ions is preceded by SWAPs that
/// walk the lower-indexed ion toward the other; placements are never swapped
/// back. Other non-complete maps walk along a shortest path. A MEASURE whose
/// ion is touched by a later inserted SWAP is moved to the end of the circuit
/// on the qubit's final ion.
///
/// Throws CircuitError if the register is larger than the map.
RoutedCircuit route(const Circuit& circuit, const CouplingMap& map);

}  // namespace itc

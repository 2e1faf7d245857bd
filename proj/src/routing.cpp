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

#include "itc/routing.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <optional>
#include <string>

namespace itc {

namespace {

std::pair<Ion, Ion> ordered(Ion a, Ion b) { return a < b ? std::pair{a, b} : std::pair{b, a}; }

// Shortest path a -> b (inclusive) by BFS.
std::vector<Ion> shortest_path(const CouplingMap& map, Ion a, Ion b) {
  std::vector<std::optional<Ion>> parent(map.n_ions());
  std::deque<Ion> frontier{a};
  parent[a] = a;
  while (!frontier.empty()) {
    const Ion u = frontier.front();
    frontier.pop_front();
    if (u == b) break;
    for (Ion v = 0; v < map.n_ions(); ++v) {
      if (!parent[v] && map.connected(u, v)) {
        parent[v] = u;
        frontier.push_back(v);
      }
    }
  }
  std::vector<Ion> path{b};
  while (path.back() != a) path.push_back(*parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

CouplingMap CouplingMap::linear(std::size_t n_ions) {
  std::set<std::pair<Ion, Ion>> edges;
  for (Ion i = 0; i + 1 < n_ions; ++i) edges.emplace(i, i + 1);
  return CouplingMap(n_ions, std::move(edges));
}

CouplingMap CouplingMap::full(std::size_t n_ions) {
  std::set<std::pair<Ion, Ion>> edges;
  for (Ion i = 0; i < n_ions; ++i) {
    for (Ion j = i + 1; j < n_ions; ++j) edges.emplace(i, j);
  }
  return CouplingMap(n_ions, std::move(edges));
}

CouplingMap::CouplingMap(std::size_t n_ions, std::set<std::pair<Ion, Ion>> edges)
    : n_ions_(n_ions) {
  if (n_ions == 0) throw CircuitError("coupling map needs at least one ion");
  for (const auto& [a, b] : edges) {
    if (a >= n_ions || b >= n_ions || a == b) {
      throw CircuitError("invalid coupling edge (" + std::to_string(a) + ", " +
                         std::to_string(b) + ")");
    }
    edges_.insert(ordered(a, b));
  }
  std::vector<bool> seen(n_ions, false);
  std::deque<Ion> frontier{0};
  seen[0] = true;
  while (!frontier.empty()) {
    const Ion u = frontier.front();
    frontier.pop_front();
    for (Ion v = 0; v < n_ions; ++v) {
      if (!seen[v] && connected(u, v)) {
        seen[v] = true;
        frontier.push_back(v);
      }
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw CircuitError("coupling map is not connected");
  }
}

bool CouplingMap::connected(Ion a, Ion b) const { return edges_.contains(ordered(a, b)); }

bool CouplingMap::is_linear_chain() const {
  if (edges_.size() + 1 != n_ions_) return false;
  for (Ion i = 0; i + 1 < n_ions_; ++i) {
    if (!connected(i, i + 1)) return false;
  }
  return true;
}

Placement Placement::identity(std::size_t n) {
  std::vector<Ion> p(n);
  std::iota(p.begin(), p.end(), Ion{0});
  return Placement(std::move(p));
}

Placement::Placement(std::vector<Ion> logical_to_physical)
    : to_physical_(std::move(logical_to_physical)),
      to_logical_(to_physical_.size(), to_physical_.size()) {
  for (Qubit q = 0; q < to_physical_.size(); ++q) {
    const Ion p = to_physical_[q];
    if (p >= to_physical_.size() || to_logical_[p] != to_physical_.size()) {
      throw CircuitError("placement is not a permutation");
    }
    to_logical_[p] = q;
  }
}

void Placement::swap_ions(Ion a, Ion b) {
  const Qubit qa = to_logical_.at(a);
  const Qubit qb = to_logical_.at(b);
  std::swap(to_logical_[a], to_logical_[b]);
  to_physical_[qa] = b;
  to_physical_[qb] = a;
}

RoutedCircuit route(const Circuit& circuit, const CouplingMap& map) {
  if (circuit.n_qubits() > map.n_ions()) {
    throw CircuitError("register of " + std::to_string(circuit.n_qubits()) +
                       " qubits does not fit on " + std::to_string(map.n_ions()) + " ions");
  }
  const std::size_t n = map.n_ions();
  Placement placement = Placement::identity(n);
  std::size_t swaps = 0;

  struct Pending {
    Gate gate;
    Qubit logical = 0;
    bool deferred = false;
  };
  std::vector<Pending> out;
  // Index into `out` of each qubit's MEASURE, so a later SWAP can defer it.
  std::vector<std::optional<std::size_t>> measure_at(n);

  auto insert_swap = [&](Ion a, Ion b) {
    for (Ion ion : {a, b}) {
      const Qubit q = placement.logical(ion);
      if (measure_at[q]) out[*measure_at[q]].deferred = true;
    }
    out.push_back({gates::swap(a, b)});
    placement.swap_ions(a, b);
    ++swaps;
  };

  for (const auto& g : circuit.gates()) {
    if (g.is_two_qubit()) {
      Ion a = placement.physical(g.qubits[0]);
      Ion b = placement.physical(g.qubits[1]);
      if (!map.connected(a, b)) {
        if (map.is_linear_chain()) {
          while (!map.connected(a, b)) {
            const Ion lo = std::min(a, b);
            insert_swap(lo, lo + 1);
            a = placement.physical(g.qubits[0]);
            b = placement.physical(g.qubits[1]);
          }
        } else {
          const auto path = shortest_path(map, a, b);
          for (std::size_t k = 0; k + 2 < path.size(); ++k) insert_swap(path[k], path[k + 1]);
          a = placement.physical(g.qubits[0]);
          b = placement.physical(g.qubits[1]);
        }
      }
      out.push_back({Gate{g.kind, g.params, {a, b}}});
    } else {
      const Qubit q = g.qubits[0];
      if (g.kind == GateKind::MEASURE) measure_at[q] = out.size();
      out.push_back({Gate{g.kind, g.params, {placement.physical(q)}}, q});
    }
  }

  Circuit routed(n);
  std::vector<Qubit> deferred;
  for (const auto& p : out) {
    if (p.deferred) {
      deferred.push_back(p.logical);
    } else {
      routed.append(p.gate);
    }
  }
  for (Qubit q : deferred) routed.append(gates::measure(placement.physical(q)));
  return RoutedCircuit{std::move(routed), std::move(placement), swaps};
}

}  // namespace itc

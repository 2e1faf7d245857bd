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

#include "itc/simulator.hpp"

#include <cmath>
#include <cstdio>
#include <random>

#include <json.hpp>

namespace itc {

StateVector::StateVector(std::size_t n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits == 0 || n_qubits > kMaxSimulatedQubits) {
    throw CircuitError("simulator supports 1 to " + std::to_string(kMaxSimulatedQubits) +
                       " qubits, got " + std::to_string(n_qubits));
  }
  amps_ = Eigen::VectorXcd::Zero(Eigen::Index{1} << n_qubits);
  amps_(0) = 1;
}

std::complex<double> StateVector::amplitude(std::string_view bitstring) const {
  if (bitstring.size() != n_qubits_) throw DimensionError("bitstring length mismatch");
  Eigen::Index idx = 0;
  for (char c : bitstring) idx = (idx << 1) | (c == '1' ? 1 : 0);
  return amps_(idx);
}

void StateVector::apply(const Mat2d& u, Qubit q) {
  if (q >= n_qubits_) throw CircuitError("qubit out of range");
  const Eigen::Index stride = Eigen::Index{1} << (n_qubits_ - 1 - q);
  const Eigen::Index dim = amps_.size();
  for (Eigen::Index base = 0; base < dim; ++base) {
    if (base & stride) continue;
    const auto a0 = amps_(base);
    const auto a1 = amps_(base | stride);
    amps_(base) = u(0, 0) * a0 + u(0, 1) * a1;
    amps_(base | stride) = u(1, 0) * a0 + u(1, 1) * a1;
  }
}

void StateVector::apply(const Mat4d& u, Qubit a, Qubit b) {
  if (a >= n_qubits_ || b >= n_qubits_ || a == b) throw CircuitError("bad qubit pair");
  const Eigen::Index sa = Eigen::Index{1} << (n_qubits_ - 1 - a);
  const Eigen::Index sb = Eigen::Index{1} << (n_qubits_ - 1 - b);
  const Eigen::Index dim = amps_.size();
  for (Eigen::Index base = 0; base < dim; ++base) {
    if ((base & sa) || (base & sb)) continue;
    const Eigen::Index idx[4] = {base, base | sb, base | sa, base | sa | sb};
    Eigen::Vector4cd v;
    for (int k = 0; k < 4; ++k) v(k) = amps_(idx[k]);
    const Eigen::Vector4cd w = u * v;
    for (int k = 0; k < 4; ++k) amps_(idx[k]) = w(k);
  }
}

void StateVector::apply(const Gate& gate) {
  if (gate.kind == GateKind::MEASURE) return;
  const CMat m = standard_gate_matrix(gate.kind, gate.params);
  if (gate.qubits.size() == 1) {
    apply(Mat2d(m), gate.qubits[0]);
  } else {
    apply(Mat4d(m), gate.qubits[0], gate.qubits[1]);
  }
}

StateVector simulate(const Circuit& circuit) {
  StateVector s(circuit.n_qubits());
  for (const auto& g : circuit.gates()) s.apply(g);
  return s;
}

StateVector simulate_table(const NativeTable& table, std::size_t n_ions) {
  StateVector s(n_ions);
  const Mat4d entangler = xx(kPi / 4);
  for (const auto& row : table.rows) {
    for (const auto& op : row.ops) {
      if (op.kind == NativeOp::Kind::XX) {
        s.apply(entangler, op.ions.at(0), op.ions.at(1));
      } else {
        s.apply(rphi(op.phi, kPi / 2), op.ions.at(0));
      }
    }
  }
  return s;
}

MeasDistribution marginal(const StateVector& state, std::span<const Qubit> measured,
                          const Placement& relabel) {
  if (measured.empty()) throw DimensionError("marginal: no measured qubits");
  const std::size_t n = state.n_qubits();
  std::vector<Ion> ions;
  for (Qubit q : measured) {
    if (q >= relabel.size()) throw DimensionError("marginal: qubit outside placement");
    const Ion ion = relabel.physical(q);
    if (ion >= n) throw DimensionError("marginal: ion outside state");
    ions.push_back(ion);
  }
  MeasDistribution dist;
  const auto& amps = state.amplitudes();
  std::string key(ions.size(), '0');
  for (Eigen::Index idx = 0; idx < amps.size(); ++idx) {
    const double p = std::norm(amps(idx));
    if (p == 0) continue;
    for (std::size_t k = 0; k < ions.size(); ++k) {
      key[k] = ((idx >> (n - 1 - ions[k])) & 1) ? '1' : '0';
    }
    dist[key] += p;
  }
  return dist;
}

MeasDistribution marginal(const StateVector& state, std::span<const Qubit> measured) {
  return marginal(state, measured, Placement::identity(state.n_qubits()));
}

double tvd(const MeasDistribution& a, const MeasDistribution& b) {
  double sum = 0;
  for (const auto& [k, p] : a) {
    const auto it = b.find(k);
    sum += std::abs(p - (it == b.end() ? 0.0 : it->second));
  }
  for (const auto& [k, p] : b) {
    if (!a.contains(k)) sum += p;
  }
  return 0.5 * sum;
}

std::map<std::string, std::size_t> sample(const MeasDistribution& dist, std::size_t shots,
                                          std::uint64_t seed) {
  std::vector<std::string> keys;
  std::vector<double> weights;
  for (const auto& [k, p] : dist) {
    keys.push_back(k);
    weights.push_back(p);
  }
  std::map<std::string, std::size_t> counts;
  if (keys.empty()) return counts;
  std::mt19937_64 rng(seed);
  std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
  for (std::size_t s = 0; s < shots; ++s) ++counts[keys[pick(rng)]];
  return counts;
}

std::string distribution_json(const MeasDistribution& dist) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [k, p] : dist) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", p);
    j[k] = std::stod(buf);
  }
  return j.dump();
}

}  // namespace itc

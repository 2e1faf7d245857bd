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

// Shared helpers for the unit and acceptance tests. The unitary oracle here
// builds full operators from Kronecker products and never touches the
// simulator's index arithmetic.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <random>
#include <string>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include "itc/circuit.hpp"
#include "itc/matrix.hpp"
#include "itc/native_table.hpp"
#include "itc/simulator.hpp"

namespace itc::test {

/// Operator on n qubits acting as `op[k]` on qubit k, qubit 0 leftmost.
inline CMat kron_chain(const std::vector<CMat>& op) {
  CMat out = CMat::Identity(1, 1);
  for (const auto& m : op) out = Eigen::kroneckerProduct(out, m).eval();
  return out;
}

/// Full 2^n operator of one gate: u = sum over |pq><rs| entries of the
/// 4x4 block, each expanded as a tensor product of single-qubit ket-bras.
inline CMat embed(const CMat& u, const std::vector<Qubit>& qubits, std::size_t n) {
  const CMat eye = CMat::Identity(2, 2);
  if (qubits.size() == 1) {
    std::vector<CMat> op(n, eye);
    op[qubits[0]] = u;
    return kron_chain(op);
  }
  const auto dim = Eigen::Index{1} << n;
  CMat out = CMat::Zero(dim, dim);
  for (int row = 0; row < 4; ++row) {
    for (int col = 0; col < 4; ++col) {
      if (u(row, col) == std::complex<double>(0)) continue;
      CMat ea = CMat::Zero(2, 2), eb = CMat::Zero(2, 2);
      ea(row >> 1, col >> 1) = 1;
      eb(row & 1, col & 1) = 1;
      std::vector<CMat> op(n, eye);
      op[qubits[0]] = ea;
      op[qubits[1]] = eb;
      out += u(row, col) * kron_chain(op);
    }
  }
  return out;
}

inline CMat circuit_unitary(const Circuit& c) {
  const auto dim = Eigen::Index{1} << c.n_qubits();
  CMat u = CMat::Identity(dim, dim);
  for (const auto& g : c.gates()) {
    if (g.kind == GateKind::MEASURE) continue;
    u = embed(standard_gate_matrix(g.kind, g.params), g.qubits, c.n_qubits()) * u;
  }
  return u;
}

inline CMat table_unitary(const NativeTable& t, std::size_t n_ions) {
  return circuit_unitary(serialize(t, n_ions));
}

/// Born probabilities of u|0...0> marginalised onto `ions`, character k
/// of each key reading ions[k].
inline MeasDistribution oracle_marginal(const CMat& u, std::size_t n,
                                        const std::vector<std::size_t>& ions) {
  MeasDistribution d;
  for (Eigen::Index idx = 0; idx < u.rows(); ++idx) {
    const double p = std::norm(u(idx, 0));
    if (p < 1e-300) continue;
    std::string key;
    for (auto ion : ions) key += ((idx >> (n - 1 - ion)) & 1) ? '1' : '0';
    d[key] += p;
  }
  return d;
}

/// Haar-random 2x2 unitary from the QR of a complex Ginibre matrix.
inline Mat2d haar_unitary(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Mat2d z;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) z(i, j) = {g(rng), g(rng)};
  }
  Eigen::HouseholderQR<Mat2d> qr(z);
  Mat2d q = qr.householderQ();
  const Mat2d r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < 2; ++k) q.col(k) *= r(k, k) / std::abs(r(k, k));
  return q;
}

/// Random logical circuit of the given depth over the compiler's input gate
/// set, with every qubit measured at the end.
inline Circuit random_circuit(std::mt19937_64& rng, std::size_t n, std::size_t depth) {
  Circuit c(n);
  std::uniform_int_distribution<int> kind(0, 11);
  std::uniform_int_distribution<std::size_t> qubit(0, n - 1);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  for (std::size_t d = 0; d < depth; ++d) {
    const Qubit a = qubit(rng);
    Qubit b = qubit(rng);
    while (b == a) b = qubit(rng);
    switch (kind(rng)) {
      case 0: c.append(gates::h(a)); break;
      case 1: c.append(gates::x(a)); break;
      case 2: c.append(gates::y(a)); break;
      case 3: c.append(gates::s(a)); break;
      case 4: c.append(gates::t(a)); break;
      case 5: c.append(gates::rx(angle(rng), a)); break;
      case 6: c.append(gates::ry(angle(rng), a)); break;
      case 7: c.append(gates::rz(angle(rng), a)); break;
      case 8: c.append(gates::z(a)); break;
      case 9: c.append(gates::cnot(a, b)); break;
      case 10: c.append(gates::cz(a, b)); break;
      default: c.append(gates::swap(a, b)); break;
    }
  }
  for (Qubit q = 0; q < n; ++q) c.append(gates::measure(q));
  return c;
}

/// Minimum f over a uniform grid of n-rotation R_phi(pi/2) sequences.
inline double grid_min(const Mat2d& goal, std::size_t n, int steps) {
  std::vector<Mat2d> rot(steps);
  for (int k = 0; k < steps; ++k) rot[k] = rphi(2 * kPi * k / steps, kPi / 2);
  double best = 4;
  std::vector<int> idx(n, 0);
  while (true) {
    Mat2d a = Mat2d::Identity();
    for (std::size_t j = 0; j < n; ++j) a = rot[idx[j]] * a;
    best = std::min(best, phase_distance(goal, a));
    std::size_t j = 0;
    while (j < n && ++idx[j] == steps) idx[j++] = 0;
    if (j == n) break;
  }
  return best;
}

inline double max_abs_diff(const CMat& a, const CMat& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace itc::test

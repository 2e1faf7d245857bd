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

#include <cmath>
#include <complex>
#include <numbers>
#include <span>

#include <Eigen/Dense>

#include "itc/circuit.hpp"

namespace itc {

template <typename Scalar>
using Complex = std::complex<Scalar>;

template <typename Scalar>
using Mat2 = Eigen::Matrix<Complex<Scalar>, 2, 2>;

template <typename Scalar>
using Mat4 = Eigen::Matrix<Complex<Scalar>, 4, 4>;

/// Dynamically sized complex matrix, used where the gate arity is only known
/// at runtime.
using CMat = Eigen::MatrixXcd;

using Mat2d = Mat2<double>;
using Mat4d = Mat4<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kUnitaryTolerance = 1e-10;

/// Equatorial rotation by `theta` about the axis cos(phi) X + sin(phi) Y,
/// exp(-i theta/2 (cos(phi) X + sin(phi) Y)).
template <typename Scalar>
Mat2<Scalar> rphi(Scalar phi, Scalar theta) {
  using C = Complex<Scalar>;
  const Scalar c = std::cos(theta / 2);
  const Scalar s = std::sin(theta / 2);
  const C minus_i(0, -1);
  Mat2<Scalar> m;
  m << C(c, 0), minus_i * std::polar(s, -phi),  //
      minus_i * std::polar(s, phi), C(c, 0);
  return m;
}

/// Derivative of rphi(phi, theta) with respect to phi.
template <typename Scalar>
Mat2<Scalar> rphi_dphi(Scalar phi, Scalar theta) {
  using C = Complex<Scalar>;
  const Scalar s = std::sin(theta / 2);
  Mat2<Scalar> m;
  m << C(0, 0), -std::polar(s, -phi),  //
      std::polar(s, phi), C(0, 0);
  return m;
}

template <typename Scalar>
Mat2<Scalar> rx(Scalar theta) {
  return rphi<Scalar>(0, theta);
}

template <typename Scalar>
Mat2<Scalar> ry(Scalar theta) {
  return rphi<Scalar>(std::numbers::pi_v<Scalar> / 2, theta);
}

/// RZ(theta) = diag(e^{-i theta/2}, e^{i theta/2}).
template <typename Scalar>
Mat2<Scalar> rz(Scalar theta) {
  Mat2<Scalar> m = Mat2<Scalar>::Zero();
  m(0, 0) = std::polar<Scalar>(1, -theta / 2);
  m(1, 1) = std::polar<Scalar>(1, theta / 2);
  return m;
}

template <typename Scalar>
Mat2<Scalar> rx_dtheta(Scalar theta) {
  Mat2<Scalar> px;
  px << 0, 1, 1, 0;
  return Complex<Scalar>(0, -0.5) * px * rx(theta);
}

template <typename Scalar>
Mat2<Scalar> rz_dtheta(Scalar theta) {
  Mat2<Scalar> m = rz(theta);
  m(0, 0) *= Complex<Scalar>(0, -0.5);
  m(1, 1) *= Complex<Scalar>(0, 0.5);
  return m;
}

/// Ising XX(alpha) = exp(-i alpha X(x)X): cos(alpha) on the diagonal and
/// -i sin(alpha) on the anti-diagonal.
template <typename Scalar>
Mat4<Scalar> xx(Scalar alpha) {
  Mat4<Scalar> m = Mat4<Scalar>::Zero();
  const Complex<Scalar> diag(std::cos(alpha), 0);
  const Complex<Scalar> anti(0, -std::sin(alpha));
  for (int k = 0; k < 4; ++k) {
    m(k, k) = diag;
    m(k, 3 - k) = anti;
  }
  return m;
}

/// Unitary of a logical or native gate. Two-qubit matrices use the basis
/// |q0 q1> with the first listed qubit as the most significant bit.
/// Throws CircuitError for MEASURE or a wrong parameter count.
CMat standard_gate_matrix(GateKind kind, std::span<const double> params);

/// dim^2 - |tr(u^dagger v)|^2. Zero exactly when v = e^{i gamma} u.
template <typename DerivedU, typename DerivedV>
double phase_distance(const Eigen::MatrixBase<DerivedU>& u,
                      const Eigen::MatrixBase<DerivedV>& v) {
  if (u.rows() != v.rows() || u.cols() != v.cols() || u.rows() != u.cols()) {
    throw DimensionError("phase_distance: dimension mismatch");
  }
  const double dim = static_cast<double>(u.rows());
  const auto overlap = (u.adjoint() * v).trace();
  return dim * dim - std::norm(overlap);
}

template <typename Derived>
bool is_unitary(const Eigen::MatrixBase<Derived>& u,
                double tolerance = kUnitaryTolerance) {
  if (u.rows() != u.cols()) return false;
  const auto eye = Eigen::MatrixXcd::Identity(u.rows(), u.cols());
  return ((u.adjoint() * u).eval() - eye).cwiseAbs().maxCoeff() <= tolerance;
}

/// Reduce an angle to (-pi, pi].
double canonical_angle(double angle);

}  // namespace itc

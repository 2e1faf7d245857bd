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

#include "itc/matrix.hpp"

#include <cmath>
#include <string>

namespace itc {

CMat standard_gate_matrix(GateKind kind, std::span<const double> params) {
  if (kind == GateKind::MEASURE) {
    throw CircuitError("measure has no unitary");
  }
  if (params.size() != param_arity(kind)) {
    throw CircuitError(std::string(mnemonic(kind)) + " expects " +
                       std::to_string(param_arity(kind)) + " parameter(s), got " +
                       std::to_string(params.size()));
  }
  using C = std::complex<double>;
  const double r = std::sqrt(0.5);
  CMat m;
  switch (kind) {
    case GateKind::H:
      m.resize(2, 2);
      m << r, r, r, -r;
      break;
    case GateKind::X:
      m.resize(2, 2);
      m << 0, 1, 1, 0;
      break;
    case GateKind::Y:
      m.resize(2, 2);
      m << 0, C(0, -1), C(0, 1), 0;
      break;
    case GateKind::Z:
      m.resize(2, 2);
      m << 1, 0, 0, -1;
      break;
    case GateKind::S:
      m.resize(2, 2);
      m << 1, 0, 0, C(0, 1);
      break;
    case GateKind::T:
      m.resize(2, 2);
      m << 1, 0, 0, std::polar(1.0, kPi / 4);
      break;
    case GateKind::RX:
      m = rx(params[0]);
      break;
    case GateKind::RY:
      m = ry(params[0]);
      break;
    case GateKind::RZ:
      m = rz(params[0]);
      break;
    case GateKind::RPHI:
      m = rphi(params[0], params[1]);
      break;
    case GateKind::CNOT:
      m = CMat::Zero(4, 4);
      m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1;
      break;
    case GateKind::CZ:
      m = CMat::Identity(4, 4);
      m(3, 3) = -1;
      break;
    case GateKind::SWAP:
      m = CMat::Zero(4, 4);
      m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1;
      break;
    case GateKind::XX:
      m = xx(params[0]);
      break;
    case GateKind::MEASURE:
      break;
  }
  return m;
}

double canonical_angle(double angle) {
  double r = std::remainder(angle, 2 * kPi);
  if (r <= -kPi) r += 2 * kPi;
  return r;
}

}  // namespace itc

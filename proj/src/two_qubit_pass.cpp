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

#include "itc/two_qubit_pass.hpp"

#include <cmath>

#include "itc/matrix.hpp"

namespace itc {

namespace {

void lower_cnot(Circuit& out, Qubit control, Qubit target) {
  out.append(gates::ry(-kPi / 2, control));
  out.append(gates::xx(kPi / 4, control, target));
  out.append(gates::ry(kPi / 2, control));
  out.append(gates::rz(kPi / 2, control));
  out.append(gates::rx(kPi / 2, target));
}

}  // namespace

Circuit lower_two_qubit(const Circuit& circuit) {
  Circuit out(circuit.n_qubits());
  for (const auto& g : circuit.gates()) {
    switch (g.kind) {
      case GateKind::CNOT:
        lower_cnot(out, g.qubits[0], g.qubits[1]);
        break;
      case GateKind::CZ: {
        const Qubit a = g.qubits[0], b = g.qubits[1];
        out.append(gates::h(b));
        lower_cnot(out, a, b);
        out.append(gates::h(b));
        break;
      }
      case GateKind::SWAP: {
        const Qubit a = g.qubits[0], b = g.qubits[1];
        lower_cnot(out, a, b);
        lower_cnot(out, b, a);
        lower_cnot(out, a, b);
        break;
      }
      case GateKind::XX:
        if (std::abs(g.params[0] - kPi / 4) > 1e-12) {
          throw CircuitError("only XX(pi/4) is native; got XX(" +
                             std::to_string(g.params[0]) + ")");
        }
        out.append(g);
        break;
      default:
        out.append(g);
        break;
    }
  }
  return out;
}

}  // namespace itc

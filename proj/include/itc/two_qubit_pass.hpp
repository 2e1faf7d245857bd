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

#include "itc/circuit.hpp"

namespace itc {

/// Rewrites CZ and SWAP into CNOTs and every CNOT(c, t) into
///
///     RY(-pi/2) c; XX(pi/4) c t; RY(pi/2) c; RZ(pi/2) c; RX(pi/2) t
///
/// which equals CNOT up to the global phase e^{-i pi/4}. XX(pi/4) is the only
/// two-qubit gate in the result; single-qubit gates and MEASURE pass through.
/// Throws CircuitError on an XX whose angle is not pi/4.
Circuit lower_two_qubit(const Circuit& circuit);

}  // namespace itc

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

#include <span>
#include <string>
#include <string_view>

#include "itc/circuit.hpp"

namespace itc {

/// Names accepted by build_benchmark, in report order.
std::span<const std::string_view> benchmark_names();

/// Parameter of the fixed VQE ansatz.
inline constexpr double kVqeTheta = 0.5;

/// Builds one of the study circuits: "ghz", "bv", "grover", "qft",
/// "vqe_ansatz" (alias "vqe"), or "bell" (the two-qubit H; CNOT example).
///
/// ghz and qft accept any n >= 2; bv, grover and vqe_ansatz are defined for
/// n = 3 only. Throws CircuitError on an unknown name or unsupported n.
Circuit build_benchmark(std::string_view name, std::size_t n = 3);

}  // namespace itc

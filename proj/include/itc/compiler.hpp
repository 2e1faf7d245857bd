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
#include <string>
#include <string_view>

#include "itc/circuit.hpp"
#include "itc/decomposition.hpp"
#include "itc/native_table.hpp"
#include "itc/routing.hpp"
#include "itc/simulator.hpp"

namespace itc {

enum class Connectivity { Linear, Full };

std::string_view connectivity_name(Connectivity c);
/// Throws Error for anything other than "linear" or "full".
Connectivity connectivity_from_name(std::string_view name);

/// "all", "none" or a comma list of rx_commute, up_to_rz, from_rz,
/// skip_identity, discard_trailing. Throws Error on an unknown name.
OptFlags parse_opt_list(std::string_view text);
std::string opt_list_string(const OptFlags& flags);

/// Decomposition tolerance used by the compiler. An accepted near-miss fit
/// with f close to 1e-4 leaves amplitude errors near 1e-2, so compiled
/// programs ask for fits that are exact to working precision.
inline constexpr double kCompileTolerance = 1e-10;

struct CompileConfig {
  Connectivity connectivity = Connectivity::Linear;
  bool parallel_1q = false;
  bool legacy = false;
  OptFlags opts = OptFlags::all();
  double tolerance = kCompileTolerance;
  std::uint64_t seed = 0;

  /// Flags actually handed to the single-qubit pass. Legacy mode has no
  /// RX commutation and no trailing-run removal.
  OptFlags effective_flags() const;
};

struct CompileStats {
  std::size_t input_gates = 0;
  std::size_t routed_gates = 0;
  std::size_t lowered_gates = 0;
  std::size_t swaps = 0;
  std::size_t xx_count = 0;
  std::size_t r_ops = 0;
  std::size_t r_cycles = 0;
  std::size_t xx_cycles = 0;
  std::size_t runs = 0;
  std::size_t identity_skips = 0;
  std::size_t fallbacks = 0;
  std::size_t discarded_runs = 0;
  double max_residual = 0;
};

struct CompileResult {
  Circuit logical;
  RoutedCircuit routed;
  Circuit lowered;
  Circuit native;
  NativeTable table;
  CompileStats stats;
};

/// route -> lower_two_qubit -> single-qubit pass -> schedule. Any failure is
/// rethrown as CompileError naming the stage.
CompileResult compile(const Circuit& circuit, const CompileConfig& config);

inline constexpr double kValidationThreshold = 1e-6;

struct Validation {
  MeasDistribution expected;
  MeasDistribution actual;
  double tvd = 0;
  bool ok = true;
};

/// Compares measured marginals of the logical circuit and the native table,
/// reading each logical qubit from its final ion. A circuit without
/// measurements is trivially valid.
Validation validate(const CompileResult& result, double threshold = kValidationThreshold);

}  // namespace itc

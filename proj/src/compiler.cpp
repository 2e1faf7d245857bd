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

#include "itc/compiler.hpp"

#include <array>
#include <utility>

#include "itc/single_qubit_pass.hpp"
#include "itc/two_qubit_pass.hpp"

namespace itc {
namespace {

constexpr std::array<std::pair<std::string_view, bool OptFlags::*>, 5> kOptNames{{
    {"rx_commute", &OptFlags::rx_commute},
    {"up_to_rz", &OptFlags::up_to_rz},
    {"from_rz", &OptFlags::from_rz},
    {"skip_identity", &OptFlags::skip_identity},
    {"discard_trailing", &OptFlags::discard_trailing},
}};

template <typename F>
auto stage(const char* name, F&& f) {
  try {
    return f();
  } catch (const CompileError&) {
    throw;
  } catch (const Error& e) {
    throw CompileError(name, e.what());
  }
}

}  // namespace

std::string_view connectivity_name(Connectivity c) {
  return c == Connectivity::Linear ? "linear" : "full";
}

Connectivity connectivity_from_name(std::string_view name) {
  if (name == "linear") return Connectivity::Linear;
  if (name == "full") return Connectivity::Full;
  throw Error("unknown connectivity '" + std::string(name) + "'");
}

OptFlags parse_opt_list(std::string_view text) {
  if (text == "all") return OptFlags::all();
  if (text == "none") return OptFlags::none();
  OptFlags flags = OptFlags::none();
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto item = text.substr(0, comma);
    bool found = false;
    for (const auto& [n, member] : kOptNames) {
      if (n == item) {
        flags.*member = true;
        found = true;
      }
    }
    if (!found) throw Error("unknown optimization '" + std::string(item) + "'");
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return flags;
}

std::string opt_list_string(const OptFlags& flags) {
  std::string out;
  for (const auto& [n, member] : kOptNames) {
    if (!(flags.*member)) continue;
    if (!out.empty()) out += ',';
    out += n;
  }
  return out.empty() ? "none" : out;
}

OptFlags CompileConfig::effective_flags() const {
  OptFlags f = opts;
  f.legacy = legacy;
  if (legacy) {
    f.rx_commute = false;
    f.discard_trailing = false;
  }
  return f;
}

CompileResult compile(const Circuit& circuit, const CompileConfig& config) {
  const std::size_t n = circuit.n_qubits();
  const CouplingMap map =
      config.connectivity == Connectivity::Linear ? CouplingMap::linear(n) : CouplingMap::full(n);

  RoutedCircuit routed = stage("route", [&] { return route(circuit, map); });
  Circuit lowered = stage("two-qubit", [&] { return lower_two_qubit(routed.circuit); });
  SingleQubitPassStats pass_stats;
  Circuit native = stage("single-qubit", [&] {
    return run_single_qubit_pass(lowered, config.effective_flags(), config.tolerance,
                                 config.seed, &pass_stats);
  });
  NativeTable table = stage("schedule", [&] { return to_table(native, config.parallel_1q); });

  CompileStats s;
  s.input_gates = circuit.size();
  s.routed_gates = routed.circuit.size();
  s.lowered_gates = lowered.size();
  s.swaps = routed.swaps_inserted;
  const CycleCounts cycles = cycle_counts(table);
  s.xx_count = native.count(GateKind::XX);
  s.r_ops = cycles.r_ops;
  s.r_cycles = cycles.r_cycles;
  s.xx_cycles = cycles.xx_cycles;
  s.runs = pass_stats.runs;
  s.identity_skips = pass_stats.identity_skips;
  s.fallbacks = pass_stats.fallbacks;
  s.discarded_runs = pass_stats.discarded_runs;
  s.max_residual = pass_stats.max_residual;

  return {circuit, std::move(routed), std::move(lowered), std::move(native), std::move(table), s};
}

Validation validate(const CompileResult& result, double threshold) {
  Validation v;
  const auto measured = result.logical.measured_qubits();
  if (measured.empty()) return v;
  const StateVector logical = simulate(result.logical);
  const StateVector native = simulate_table(result.table, result.routed.circuit.n_qubits());
  v.expected = marginal(logical, measured);
  v.actual = marginal(native, measured, result.routed.final_placement);
  v.tvd = tvd(v.expected, v.actual);
  v.ok = v.tvd < threshold;
  return v;
}

}  // namespace itc

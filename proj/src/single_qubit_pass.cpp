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

#include "itc/single_qubit_pass.hpp"

#include <algorithm>

#include <string>
#include <vector>

namespace itc {

namespace {

struct Lane {
  Mat2d product = Mat2d::Identity();
  bool has_gates = false;
  bool fresh = true;
};

class PassState {
 public:
  PassState(const Circuit& in, const OptFlags& flags, double tolerance, std::uint64_t seed,
            SingleQubitPassStats& stats)
      : out_(in.n_qubits()),
        lanes_(in.n_qubits()),
        flags_(flags),
        tolerance_(tolerance),
        seed_(seed),
        stats_(stats) {}

  void absorb(const Gate& g) {
    Lane& lane = lanes_[g.qubits[0]];
    lane.product = standard_gate_matrix(g.kind, g.params) * lane.product;
    lane.has_gates = true;
  }

  // Emits the decomposition of the qubit's pending run; returns the RX angle
  // to carry, if any.
  std::optional<double> flush(Qubit q, RunContext context) {
    Lane& lane = lanes_[q];
    if (!lane.has_gates) return std::nullopt;
    ++stats_.runs;
    const DecompResult r =
        decompose(GoalUnitary{lane.product, context, lane.fresh}, flags_, tolerance_, seed_);
    if (r.identity_skipped) ++stats_.identity_skips;
    if (r.fell_back) ++stats_.fallbacks;
    stats_.max_residual = std::max(stats_.max_residual, r.residual_f);
    for (double phi : r.core_phis) out_.append(gates::rphi(phi, kPi / 2, q));
    stats_.emitted_rotations += r.core_phis.size();
    lane = Lane{Mat2d::Identity(), false, false};
    if (r.trailing && r.trailing->kind == TailKind::RX) return r.trailing->angle;
    return std::nullopt;
  }

  void xx(const Gate& g) {
    std::optional<double> carried[2];
    for (int k = 0; k < 2; ++k) carried[k] = flush(g.qubits[k], RunContext::BeforeXX);
    out_.append(g);
    for (int k = 0; k < 2; ++k) {
      Lane& lane = lanes_[g.qubits[k]];
      lane.fresh = false;
      // An RX that is the identity up to phase carries nothing.
      if (carried[k] && phase_distance(Mat2d::Identity(), rx(*carried[k])) > 1e-14) {
        lane.product = rx(*carried[k]);
        lane.has_gates = true;
      }
    }
  }

  void measure(const Gate& g) {
    flush(g.qubits[0], RunContext::BeforeMeasure);
    out_.append(g);
  }

  Circuit finish() {
    for (Qubit q = 0; q < lanes_.size(); ++q) {
      if (!lanes_[q].has_gates) continue;
      if (flags_.discard_trailing && !flags_.legacy && !out_.is_measured(q)) {
        ++stats_.discarded_runs;
        lanes_[q] = Lane{};
        continue;
      }
      flush(q, RunContext::BeforeOther);
    }
    return std::move(out_);
  }

 private:
  Circuit out_;
  std::vector<Lane> lanes_;
  OptFlags flags_;
  double tolerance_;
  std::uint64_t seed_;
  SingleQubitPassStats& stats_;
};

}  // namespace

Circuit run_single_qubit_pass(const Circuit& circuit, const OptFlags& flags, double tolerance,
                              std::uint64_t seed, SingleQubitPassStats* stats) {
  SingleQubitPassStats local;
  PassState state(circuit, flags, tolerance, seed, stats ? *stats : local);
  for (const auto& g : circuit.gates()) {
    switch (g.kind) {
      case GateKind::XX:
        state.xx(g);
        break;
      case GateKind::MEASURE:
        state.measure(g);
        break;
      case GateKind::CNOT:
      case GateKind::CZ:
      case GateKind::SWAP:
        throw CircuitError(std::string(mnemonic(g.kind)) +
                           " must be lowered before the single-qubit pass");
      default:
        state.absorb(g);
        break;
    }
  }
  return state.finish();
}

}  // namespace itc

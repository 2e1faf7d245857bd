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
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "itc/matrix.hpp"

namespace itc {

/// Shape of the rotation sequence A(phi) fitted to a goal unitary. Factors
/// are listed in time order (rightmost matrix factor acts first):
///
///   Exact       R_{phi_n}(pi/2) ... R_{phi_1}(pi/2)
///   UpToX       RX(t) R ... R          (RX commutes through a following XX)
///   UpToZ       RZ(t) R ... R          (RZ is invisible to measurement)
///   FromZ*      the same with a leading RZ(l) acting first on |0>
enum class Variant {
  Exact,
  UpToX,
  UpToZ,
  FromZExact,
  FromZUpToX,
  FromZUpToZ,
};

inline constexpr Variant kAllVariants[] = {Variant::Exact,      Variant::UpToX,
                                           Variant::UpToZ,      Variant::FromZExact,
                                           Variant::FromZUpToX, Variant::FromZUpToZ};

std::string_view variant_name(Variant v);

bool has_leading_rz(Variant v);

enum class TailKind { None, RX, RZ };
TailKind tail_kind(Variant v);

/// Number of boundary (non-R_phi(pi/2)) parameters of a variant.
std::size_t boundary_count(Variant v);

/// UpToX -> Exact, FromZUpToX -> FromZExact; other variants map to themselves.
Variant exact_ending(Variant v);

/// A(params) for `variant`. Layout: [leading RZ angle], axis phases in time
/// order, [tail angle]. Throws DimensionError if params is too short for the
/// boundary factors.
Mat2d ansatz(Variant variant, std::span<const double> params);

struct ObjectiveValue {
  double value;
  Eigen::VectorXd gradient;
};

/// f = 4 - |tr(goal^dagger A(params))|^2 and its analytic gradient.
ObjectiveValue objective(const Mat2d& goal, Variant variant,
                         std::span<const double> params);

inline constexpr int kRestarts = 8;
inline constexpr std::size_t kMaxRotations = 4;
inline constexpr double kDefaultTolerance = 1e-4;

struct MinimizeResult {
  std::vector<double> params;
  double value;
};

/// Best of kRestarts L-BFGS runs fitting A with `rotations` R_phi(pi/2)
/// factors to `goal`. Starts are uniform in [-pi, pi) and fully determined by
/// (seed, variant, rotations); returned angles are reduced to (-pi, pi].
MinimizeResult minimize(const Mat2d& goal, Variant variant, std::size_t rotations,
                        std::uint64_t seed);

/// Single-qubit pass switches. `legacy` restricts variant selection to the
/// pre-existing compiler's repertoire (Exact, FromZExact, UpToZ).
struct OptFlags {
  bool rx_commute = true;
  bool up_to_rz = true;
  bool from_rz = true;
  bool skip_identity = true;
  bool discard_trailing = true;
  bool legacy = false;

  static OptFlags all() { return {}; }
  static OptFlags none() { return {false, false, false, false, false, false}; }

  friend bool operator==(const OptFlags&, const OptFlags&) = default;
};

enum class RunContext { BeforeXX, BeforeMeasure, BeforeOther };

struct GoalUnitary {
  Mat2d matrix;
  RunContext context = RunContext::BeforeOther;
  /// No gate and no XX has touched the qubit yet, so it is still in |0>.
  bool fresh = false;
};

struct BoundaryRotation {
  TailKind kind;  // RX or RZ
  double angle;
};

struct DecompResult {
  std::vector<double> core_phis;
  /// Discarded leading RZ of the FromZ variants.
  std::optional<double> leading_rz;
  /// RX to commute through the next XX, or an RZ that is discarded.
  std::optional<BoundaryRotation> trailing;
  double residual_f = 0;
  Variant variant = Variant::Exact;
  bool identity_skipped = false;
  bool fell_back = false;
};

Variant select_variant(const GoalUnitary& goal, const OptFlags& flags);

/// Decomposes goal.matrix into at most four R_phi(pi/2) rotations, searching
/// rotation counts upward from the smallest the variant allows and accepting
/// the first fit with f < tolerance. UpToX-family failures retry the
/// exact-ending variant. Throws DecompositionFailed if nothing fits.
DecompResult decompose(const GoalUnitary& goal, const OptFlags& flags,
                       double tolerance = kDefaultTolerance, std::uint64_t seed = 0);

/// A(params) rebuilt from a result, boundary rotations included.
Mat2d reconstruct(const DecompResult& result);

}  // namespace itc

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

#include "itc/decomposition.hpp"

#include <array>
#include <limits>
#include <random>
#include <string>

#include "itc/lbfgs.hpp"

namespace itc {

namespace {

constexpr double kHalfPi = kPi / 2;

enum class FactorKind { LeadingRz, Rotation, TailRx, TailRz };

// Time-ordered factor kinds for a parameter vector of the given length.
std::vector<FactorKind> factor_layout(Variant v, std::size_t n_params) {
  const std::size_t boundaries = boundary_count(v);
  if (n_params < boundaries) {
    throw DimensionError(std::string(variant_name(v)) + " needs at least " +
                         std::to_string(boundaries) + " parameter(s)");
  }
  std::vector<FactorKind> layout;
  layout.reserve(n_params);
  if (has_leading_rz(v)) layout.push_back(FactorKind::LeadingRz);
  for (std::size_t k = 0; k < n_params - boundaries; ++k) layout.push_back(FactorKind::Rotation);
  switch (tail_kind(v)) {
    case TailKind::RX:
      layout.push_back(FactorKind::TailRx);
      break;
    case TailKind::RZ:
      layout.push_back(FactorKind::TailRz);
      break;
    case TailKind::None:
      break;
  }
  return layout;
}

Mat2d factor(FactorKind kind, double angle) {
  switch (kind) {
    case FactorKind::Rotation:
      return rphi(angle, kHalfPi);
    case FactorKind::TailRx:
      return rx(angle);
    case FactorKind::LeadingRz:
    case FactorKind::TailRz:
      return rz(angle);
  }
  return Mat2d::Identity();
}

Mat2d factor_derivative(FactorKind kind, double angle) {
  switch (kind) {
    case FactorKind::Rotation:
      return rphi_dphi(angle, kHalfPi);
    case FactorKind::TailRx:
      return rx_dtheta(angle);
    case FactorKind::LeadingRz:
    case FactorKind::TailRz:
      return rz_dtheta(angle);
  }
  return Mat2d::Zero();
}

std::uint64_t restart_seed(std::uint64_t seed, Variant v, std::size_t rotations) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(v), static_cast<std::uint32_t>(rotations)};
  std::array<std::uint32_t, 2> words{};
  seq.generate(words.begin(), words.end());
  return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

}  // namespace

std::string_view variant_name(Variant v) {
  switch (v) {
    case Variant::Exact:
      return "exact";
    case Variant::UpToX:
      return "up_to_x";
    case Variant::UpToZ:
      return "up_to_z";
    case Variant::FromZExact:
      return "from_z_exact";
    case Variant::FromZUpToX:
      return "from_z_up_to_x";
    case Variant::FromZUpToZ:
      return "from_z_up_to_z";
  }
  return "?";
}

bool has_leading_rz(Variant v) {
  return v == Variant::FromZExact || v == Variant::FromZUpToX || v == Variant::FromZUpToZ;
}

TailKind tail_kind(Variant v) {
  switch (v) {
    case Variant::UpToX:
    case Variant::FromZUpToX:
      return TailKind::RX;
    case Variant::UpToZ:
    case Variant::FromZUpToZ:
      return TailKind::RZ;
    default:
      return TailKind::None;
  }
}

std::size_t boundary_count(Variant v) {
  return (has_leading_rz(v) ? 1 : 0) + (tail_kind(v) != TailKind::None ? 1 : 0);
}

Variant exact_ending(Variant v) {
  if (v == Variant::UpToX) return Variant::Exact;
  if (v == Variant::FromZUpToX) return Variant::FromZExact;
  return v;
}

Mat2d ansatz(Variant variant, std::span<const double> params) {
  const auto layout = factor_layout(variant, params.size());
  Mat2d a = Mat2d::Identity();
  for (std::size_t k = 0; k < layout.size(); ++k) a = factor(layout[k], params[k]) * a;
  return a;
}

ObjectiveValue objective(const Mat2d& goal, Variant variant, std::span<const double> params) {
  const auto layout = factor_layout(variant, params.size());
  const std::size_t m = layout.size();

  std::vector<Mat2d> factors(m);
  for (std::size_t k = 0; k < m; ++k) factors[k] = factor(layout[k], params[k]);

  // prefix[k] = F_k ... F_1 (prefix[0] = I); suffix[k] = G^dagger F_m ... F_{k+1}.
  std::vector<Mat2d> prefix(m + 1), suffix(m + 1);
  prefix[0] = Mat2d::Identity();
  for (std::size_t k = 0; k < m; ++k) prefix[k + 1] = factors[k] * prefix[k];
  suffix[m] = goal.adjoint();
  for (std::size_t k = m; k-- > 0;) suffix[k] = suffix[k + 1] * factors[k];

  const std::complex<double> overlap = (suffix[m] * prefix[m]).trace();
  ObjectiveValue out{4.0 - std::norm(overlap), Eigen::VectorXd(static_cast<Eigen::Index>(m))};
  for (std::size_t k = 0; k < m; ++k) {
    const std::complex<double> d =
        (suffix[k + 1] * factor_derivative(layout[k], params[k]) * prefix[k]).trace();
    out.gradient(static_cast<Eigen::Index>(k)) = -2.0 * (std::conj(overlap) * d).real();
  }
  return out;
}

MinimizeResult minimize(const Mat2d& goal, Variant variant, std::size_t rotations,
                        std::uint64_t seed) {
  if (rotations > kMaxRotations + 1) {
    throw DimensionError("minimize: at most " + std::to_string(kMaxRotations + 1) +
                         " rotations");
  }
  const std::size_t n_params = rotations + boundary_count(variant);
  if (n_params == 0) {
    return {{}, objective(goal, variant, {}).value};
  }

  auto fg = [&](const Eigen::VectorXd& x, Eigen::VectorXd& grad) {
    auto o = objective(goal, variant, std::span<const double>(x.data(), n_params));
    grad = std::move(o.gradient);
    return o.value;
  };

  std::mt19937_64 rng(restart_seed(seed, variant, rotations));
  std::uniform_real_distribution<double> angle(-kPi, kPi);

  MinimizeResult best{{}, std::numeric_limits<double>::infinity()};
  for (int start = 0; start < kRestarts; ++start) {
    Eigen::VectorXd x0(static_cast<Eigen::Index>(n_params));
    for (auto& v : x0) v = angle(rng);
    const auto r = lbfgs_minimize(fg, std::move(x0));
    if (r.value < best.value) {
      best.value = r.value;
      best.params.assign(r.x.begin(), r.x.end());
    }
  }
  for (double& p : best.params) p = canonical_angle(p);
  // Re-evaluate after reduction; shifts by 2 pi only flip global signs.
  best.value = objective(goal, variant, best.params).value;
  return best;
}

Variant select_variant(const GoalUnitary& goal, const OptFlags& flags) {
  const bool from_z = goal.fresh && flags.from_rz;
  if (flags.legacy) {
    if (goal.context == RunContext::BeforeMeasure && flags.up_to_rz) return Variant::UpToZ;
    return from_z ? Variant::FromZExact : Variant::Exact;
  }
  if (goal.context == RunContext::BeforeXX && flags.rx_commute) {
    return from_z ? Variant::FromZUpToX : Variant::UpToX;
  }
  if (goal.context == RunContext::BeforeMeasure && flags.up_to_rz) {
    return from_z ? Variant::FromZUpToZ : Variant::UpToZ;
  }
  return from_z ? Variant::FromZExact : Variant::Exact;
}

namespace {

std::optional<DecompResult> search(const Mat2d& g, Variant variant, double tolerance,
                                   std::uint64_t seed) {
  const std::size_t first = boundary_count(variant) > 0 ? 0 : 1;
  for (std::size_t n = first; n <= kMaxRotations; ++n) {
    auto fit = minimize(g, variant, n, seed);
    if (fit.value >= tolerance) continue;

    DecompResult r;
    r.variant = variant;
    r.residual_f = fit.value;
    std::size_t k = 0;
    if (has_leading_rz(variant)) r.leading_rz = fit.params[k++];
    for (std::size_t j = 0; j < n; ++j) r.core_phis.push_back(fit.params[k++]);
    if (tail_kind(variant) != TailKind::None) {
      r.trailing = BoundaryRotation{tail_kind(variant), fit.params[k]};
    }
    return r;
  }
  return std::nullopt;
}

}  // namespace

DecompResult decompose(const GoalUnitary& goal, const OptFlags& flags, double tolerance,
                       std::uint64_t seed) {
  if (!(tolerance > 0)) throw DimensionError("decompose: tolerance must be positive");
  if (!is_unitary(goal.matrix)) throw DimensionError("decompose: goal is not unitary");

  if (flags.skip_identity) {
    const double f = phase_distance(Mat2d::Identity(), goal.matrix);
    if (f < tolerance) {
      DecompResult r;
      r.residual_f = f;
      r.identity_skipped = true;
      return r;
    }
  }

  const Variant variant = select_variant(goal, flags);
  if (auto r = search(goal.matrix, variant, tolerance, seed)) return *r;

  const Variant fallback = exact_ending(variant);
  if (fallback != variant) {
    if (auto r = search(goal.matrix, fallback, tolerance, seed)) {
      r->fell_back = true;
      return *r;
    }
  }
  throw DecompositionFailed("no decomposition with at most " + std::to_string(kMaxRotations) +
                            " rotations reaches tolerance " + std::to_string(tolerance) +
                            " (variant " + std::string(variant_name(variant)) + ")");
}

Mat2d reconstruct(const DecompResult& result) {
  std::vector<double> params;
  if (result.leading_rz) params.push_back(*result.leading_rz);
  params.insert(params.end(), result.core_phis.begin(), result.core_phis.end());
  if (result.trailing) params.push_back(result.trailing->angle);
  if (result.identity_skipped) return Mat2d::Identity();
  return ansatz(result.variant, params);
}

}  // namespace itc

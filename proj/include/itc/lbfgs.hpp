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

#include <algorithm>
#include <cmath>
#include <deque>
#include <vector>

#include <Eigen/Dense>

namespace itc {

struct LbfgsOptions {
  int history = 6;
  int max_iterations = 200;
  double gradient_tolerance = 1e-10;
  /// Stop once the objective drops below this value (objectives here are
  /// bounded below by zero).
  double value_floor = 1e-15;
};

struct LbfgsResult {
  Eigen::VectorXd x;
  double value = 0;
  int iterations = 0;
};

/// Limited-memory BFGS with a backtracking Armijo line search.
///
/// `fg(x, grad)` returns f(x) and writes the gradient into `grad`.
template <typename Function>
LbfgsResult lbfgs_minimize(Function&& fg, Eigen::VectorXd x,
                           const LbfgsOptions& options = {}) {
  const Eigen::Index n = x.size();
  Eigen::VectorXd grad(n);
  double value = fg(x, grad);
  LbfgsResult result{x, value, 0};
  if (n == 0) return result;

  struct Pair {
    Eigen::VectorXd s, y;
    double rho;
  };
  std::deque<Pair> memory;
  Eigen::VectorXd x_next(n), grad_next(n), direction(n);

  for (int iter = 0; iter < options.max_iterations; ++iter) {
    result.iterations = iter;
    if (value < options.value_floor || grad.norm() < options.gradient_tolerance) break;

    // Two-loop recursion.
    direction = -grad;
    std::vector<double> alpha(memory.size());
    for (std::size_t k = memory.size(); k-- > 0;) {
      alpha[k] = memory[k].rho * memory[k].s.dot(direction);
      direction -= alpha[k] * memory[k].y;
    }
    if (!memory.empty()) {
      const auto& last = memory.back();
      direction *= last.s.dot(last.y) / last.y.squaredNorm();
    } else {
      direction /= std::max(1.0, grad.norm());
    }
    for (std::size_t k = 0; k < memory.size(); ++k) {
      const double beta = memory[k].rho * memory[k].y.dot(direction);
      direction += (alpha[k] - beta) * memory[k].s;
    }

    double slope = grad.dot(direction);
    if (slope >= 0) {
      memory.clear();
      direction = -grad / std::max(1.0, grad.norm());
      slope = grad.dot(direction);
    }

    double step = 1.0;
    double value_next = 0;
    bool accepted = false;
    for (int ls = 0; ls < 60; ++ls) {
      x_next = x + step * direction;
      value_next = fg(x_next, grad_next);
      if (value_next <= value + 1e-4 * step * slope) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;

    Pair p{x_next - x, grad_next - grad, 0};
    const double sy = p.s.dot(p.y);
    const double improvement = value - value_next;
    x.swap(x_next);
    grad.swap(grad_next);
    value = value_next;
    if (sy > 1e-14) {
      p.rho = 1.0 / sy;
      memory.push_back(std::move(p));
      if (static_cast<int>(memory.size()) > options.history) memory.pop_front();
    }
    if (improvement <= 1e-18 * std::max(1.0, std::abs(value))) break;
  }
  result.x = x;
  result.value = value;
  return result;
}

}  // namespace itc

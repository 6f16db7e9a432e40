// Copyright 2026 The GASP Authors
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

#include <Eigen/Dense>

#include <cstdint>

#include "gasp/genome.hpp"
#include "gasp/state_vector.hpp"

namespace gasp {

struct OptimizerSettings {
  /// Cap on objective+gradient evaluations per start. One evaluation costs
  /// roughly three circuit sweeps.
  int max_evals = 300;
  /// Stop once the largest gradient component falls below this.
  double gradient_tolerance = 1e-6;
  /// Starts per call. The first start is always the individual's own angles;
  /// further starts draw uniform angles from a stream seeded by `seed`.
  int restarts = 1;
  std::uint64_t seed = 0;
  /// L-BFGS correction pairs kept.
  int history = 8;
};

/// Fitness and its gradient with respect to the angles of `angles`, which
/// override the individual's own angles in gene order.
struct FitnessAndGradient {
  double fitness = 0.0;
  Eigen::VectorXd gradient;
};

/// d f / d theta_j for every rotation gene, by the parameter-shift rule
/// [f(theta_j + pi/2) - f(theta_j - pi/2)] / 2. The shifted overlaps are read
/// off cached forward and backward sweeps, so the whole gradient costs O(genes)
/// gate applications.
Eigen::VectorXd fitness_gradient(const Individual& ind, const StateVector& target);

FitnessAndGradient evaluate_fitness(const Individual& ind, const StateVector& target,
                                    const Eigen::VectorXd& angles);

/// Fitness of the individual's circuit against `target`.
double evaluate_fitness(const Individual& ind, const StateVector& target);

/// Locally maximises fitness over the rotation angles with a limited-memory
/// BFGS iteration on the angle torus, then wraps angles into [0, 2pi). Gene
/// structure is preserved and the result is never worse than the input. The
/// returned individual carries its fitness in the cache.
Individual optimize_angles(const Individual& ind, const StateVector& target,
                           const OptimizerSettings& settings = {});

}  // namespace gasp

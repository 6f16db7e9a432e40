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

#include "gasp/optimizer.hpp"

#include <gtest/gtest.h>

#include <random>

#include "gasp/sim.hpp"
#include "gasp/targets.hpp"

using namespace gasp;

namespace {

StateVector random_state(int n, Rng& rng) {
  std::normal_distribution<double> normal;
  StateVector::Amplitudes a(1 << n);
  for (auto& v : a) v = {normal(rng), normal(rng)};
  return StateVector::normalized(a);
}

// f with the k-th rotation angle shifted by delta, simulated from scratch.
double shifted_fitness(const Individual& ind, const StateVector& target, std::size_t k, double delta) {
  std::vector<Gene> genes = ind.genes();
  std::size_t seen = 0;
  for (Gene& g : genes) {
    if (g.angle && seen++ == k) *g.angle += delta;
  }
  return fidelity(target, run_circuit(std::span<const Gene>(genes), ind.n_qubits()));
}

}  // namespace

TEST(FitnessGradient, EmptyForParameterFreeCircuits) {
  const Individual ind(2, {Gene::cnot(0, 1)});
  EXPECT_EQ(fitness_gradient(ind, StateVector(2)).size(), 0);
}

TEST(FitnessGradient, ClosedFormSingleRy) {
  const Individual ind(1, {Gene::rotation(GateKind::RY, 0, kPi / 2)});
  const Eigen::VectorXd g = fitness_gradient(ind, StateVector::basis(1, 1));
  ASSERT_EQ(g.size(), 1);
  EXPECT_NEAR(g(0), 0.5, 1e-14);  // d/dtheta sin^2(theta/2) = sin(theta)/2
}

TEST(FitnessGradient, MatchesTwoSimulationShiftRule) {
  Rng rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    const Individual ind = random_individual(3, 15, rng);
    const StateVector target = random_state(3, rng);
    const Eigen::VectorXd g = fitness_gradient(ind, target);
    for (Eigen::Index k = 0; k < g.size(); ++k) {
      const double shift = 0.5 * (shifted_fitness(ind, target, k, kPi / 2) - shifted_fitness(ind, target, k, -kPi / 2));
      EXPECT_NEAR(g(k), shift, 1e-12);
    }
  }
}

TEST(FitnessGradient, MatchesCentralFiniteDifferences) {
  Rng rng(22);
  constexpr double h = 1e-5;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 4;
    const Individual ind = random_individual(n, 1 + trial % 20, rng);
    const StateVector target = random_state(n, rng);
    const Eigen::VectorXd g = fitness_gradient(ind, target);
    ASSERT_EQ(static_cast<std::size_t>(g.size()), ind.parameter_count());
    for (Eigen::Index k = 0; k < g.size(); ++k) {
      const double fd = (shifted_fitness(ind, target, k, h) - shifted_fitness(ind, target, k, -h)) / (2 * h);
      EXPECT_NEAR(g(k), fd, 1e-6);
    }
  }
}

TEST(FitnessGradient, ValueMatchesSimulation) {
  Rng rng(23);
  const Individual ind = random_individual(4, 20, rng);
  const StateVector target = random_state(4, rng);
  const std::vector<double> a = ind.angles();
  const FitnessAndGradient fg =
      evaluate_fitness(ind, target, Eigen::Map<const Eigen::VectorXd>(a.data(), static_cast<Eigen::Index>(a.size())));
  EXPECT_NEAR(fg.fitness, evaluate_fitness(ind, target), 1e-14);
}

TEST(Fitness, PeriodicInEveryAngle) {
  Rng rng(24);
  for (int trial = 0; trial < 20; ++trial) {
    const Individual ind = random_individual(3, 12, rng);
    const StateVector target = random_state(3, rng);
    const double f = evaluate_fitness(ind, target);
    for (std::size_t k = 0; k < ind.parameter_count(); ++k) {
      EXPECT_NEAR(shifted_fitness(ind, target, k, kTwoPi), f, 1e-12);
      EXPECT_NEAR(shifted_fitness(ind, target, k, -3 * kTwoPi), f, 1e-12);
    }
  }
}

TEST(OptimizeAngles, AlreadyOptimalStaysOptimal) {
  const Individual ind(1, {Gene::rotation(GateKind::RY, 0, kPi)});
  const Individual out = optimize_angles(ind, StateVector::basis(1, 1));
  ASSERT_TRUE(out.fitness());
  EXPECT_NEAR(*out.fitness(), 1.0, 1e-15);
}

TEST(OptimizeAngles, SingleRyConvergesToPi) {
  const Individual ind(1, {Gene::rotation(GateKind::RY, 0, 0.3)});
  const Individual out = optimize_angles(ind, StateVector::basis(1, 1));
  EXPECT_NEAR(*out[0].angle, kPi, 1e-4);
  EXPECT_GE(*out.fitness(), 1 - 1e-8);
}

TEST(OptimizeAngles, CnotOnlyIsUnchanged) {
  const Individual ind(2, {Gene::cnot(0, 1), Gene::cnot(1, 0)});
  const Individual out = optimize_angles(ind, w_state(2));
  EXPECT_EQ(out, ind);
  EXPECT_NEAR(*out.fitness(), 0.0, 1e-15);
}

TEST(OptimizeAngles, MonotoneAndStructurePreserving) {
  Rng rng(25);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + trial % 4;
    const Individual ind = random_individual(n, 1 + trial % 20, rng);
    const StateVector target = random_state(n, rng);
    const double before = evaluate_fitness(ind, target);
    const Individual out = optimize_angles(ind, target);
    ASSERT_TRUE(out.fitness());
    EXPECT_GE(*out.fitness(), before - 1e-12);
    EXPECT_NEAR(*out.fitness(), evaluate_fitness(out, target), 1e-12);
    ASSERT_EQ(out.size(), ind.size());
    for (std::size_t i = 0; i < ind.size(); ++i) {
      EXPECT_EQ(out[i].kind, ind[i].kind);
      EXPECT_EQ(out[i].target, ind[i].target);
      EXPECT_EQ(out[i].control, ind[i].control);
      if (out[i].angle) {
        EXPECT_GE(*out[i].angle, 0.0);
        EXPECT_LT(*out[i].angle, kTwoPi);
      }
    }
  }
}

TEST(OptimizeAngles, ReachesLocalStationaryPoint) {
  Rng rng(26);
  const Individual ind = random_individual(3, 15, rng);
  const StateVector target = random_state(3, rng);
  OptimizerSettings settings;
  settings.max_evals = 5000;
  const Individual out = optimize_angles(ind, target, settings);
  EXPECT_LT(fitness_gradient(out, target).lpNorm<Eigen::Infinity>(), 1e-5);
}

TEST(OptimizeAngles, RestartsNeverHurt) {
  Rng rng(27);
  const Individual ind = random_individual(3, 10, rng);
  const StateVector target = random_state(3, rng);
  OptimizerSettings one, many;
  many.restarts = 4;
  many.seed = 9;
  EXPECT_GE(*optimize_angles(ind, target, many).fitness(), *optimize_angles(ind, target, one).fitness() - 1e-12);
}

TEST(OptimizeAngles, DimensionMismatchThrows) {
  EXPECT_THROW(optimize_angles(Individual(2), StateVector(3)), std::invalid_argument);
}

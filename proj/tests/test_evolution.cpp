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

#include "gasp/evolution.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "gasp/optimizer.hpp"
#include "gasp/sim.hpp"
#include "gasp/targets.hpp"
#include "oracles.hpp"

using namespace gasp;

namespace {

Individual labelled(std::initializer_list<double> angles) {
  std::vector<Gene> genes;
  for (double a : angles) genes.push_back(Gene::rotation(GateKind::RX, 0, a));
  return Individual(1, genes);
}

StateVector bell() {
  StateVector::Amplitudes a(4);
  a << M_SQRT1_2, 0, 0, M_SQRT1_2;
  return StateVector(2, a);
}

EvolutionConfig small_config(std::uint64_t seed) {
  EvolutionConfig c;
  c.population_size = 20;
  c.maxiter = 10;
  c.max_total_generations = 500;
  c.seed = seed;
  return c;
}

}  // namespace

TEST(Crossover, SwapsTailsAtTheMidpoint) {
  const Individual p1 = labelled({0.1, 0.2, 0.3, 0.4});
  const Individual p2 = labelled({1.1, 1.2, 1.3, 1.4});
  const auto [c1, c2] = crossover(p1, p2);
  EXPECT_EQ(c1, labelled({0.1, 0.2, 1.3, 1.4}));
  EXPECT_EQ(c2, labelled({1.1, 1.2, 0.3, 0.4}));
  EXPECT_FALSE(c1.fitness());
}

TEST(Crossover, OddLengthSplitsAtFloor) {
  const auto [c1, c2] = crossover(labelled({0.1, 0.2, 0.3}), labelled({1.1, 1.2, 1.3}));
  EXPECT_EQ(c1, labelled({0.1, 1.2, 1.3}));
  EXPECT_EQ(c2, labelled({1.1, 0.2, 0.3}));
}

TEST(Crossover, IdenticalAndEmptyParents) {
  const Individual p = labelled({0.5, 0.6});
  const auto [a, b] = crossover(p, p);
  EXPECT_EQ(a, p);
  EXPECT_EQ(b, p);
  const auto [e1, e2] = crossover(Individual(1), Individual(1));
  EXPECT_TRUE(e1.empty());
  EXPECT_TRUE(e2.empty());
}

TEST(Crossover, LengthMismatchThrows) {
  EXPECT_THROW(crossover(labelled({0.1}), labelled({0.1, 0.2})), std::invalid_argument);
}

TEST(Mutate, ZeroRateIsIdentity) {
  Rng rng(1);
  Individual ind = random_individual(3, 30, rng);
  ind.set_fitness(0.25);
  const Individual out = mutate(ind, 0.0, rng);
  EXPECT_EQ(out, ind);
  EXPECT_EQ(out.fitness(), std::optional<double>(0.25));
}

TEST(Mutate, UnitRateResamplesEveryPosition) {
  Rng rng(2);
  Individual ind = random_individual(3, 30, rng);
  ind.set_fitness(0.25);
  int replaced = 0;
  const Individual out = mutate(ind, 1.0, rng, replaced);
  EXPECT_EQ(replaced, 30);
  EXPECT_EQ(out.size(), ind.size());
  EXPECT_FALSE(out.fitness());
}

TEST(Mutate, FivePercentRateIsBinomial) {
  Rng rng(3);
  const Individual ind = random_individual(4, 100, rng);
  long total = 0;
  constexpr int kTrials = 10000;
  for (int t = 0; t < kTrials; ++t) {
    int replaced = 0;
    (void)mutate(ind, 0.05, rng, replaced);
    total += replaced;
  }
  EXPECT_TRUE(oracle::within_5_sigma(static_cast<double>(total), 100.0 * kTrials, 0.05)) << total;
}

TEST(Select, FrequenciesFollowFitness) {
  Rng rng(4);
  constexpr int kDraws = 100000;
  const auto picks = select_indices({0.2, 0.8}, kDraws, rng);
  const auto ones = std::count(picks.begin(), picks.end(), std::size_t{1});
  EXPECT_TRUE(oracle::within_5_sigma(static_cast<double>(ones), kDraws, 0.8)) << ones;
}

TEST(Select, EqualFitnessIsUniform) {
  Rng rng(5);
  constexpr int kDraws = 100000;
  std::vector<int> counts(5);
  for (std::size_t i : select_indices(std::vector<double>(5, 0.3), kDraws, rng)) ++counts[i];
  for (int c : counts) EXPECT_TRUE(oracle::within_5_sigma(c, kDraws, 0.2)) << c;
}

TEST(Select, ZeroFitnessNeverChosen) {
  Rng rng(6);
  for (std::size_t i : select_indices({0.0, 0.5, 0.0, 0.5, 0.0}, 10000, rng)) EXPECT_TRUE(i == 1 || i == 3);
}

TEST(Select, SingleIndividualAlwaysReturned) {
  Rng rng(7);
  const std::vector<Individual> pop{labelled({0.1})};
  for (const Individual& ind : select(pop, {0.4}, 50, rng)) EXPECT_EQ(ind, pop[0]);
}

TEST(Select, DegenerateAndInvalidInputs) {
  Rng rng(8);
  EXPECT_THROW(select_indices({0.0, 0.0}, 1, rng), DegeneratePopulation);
  EXPECT_THROW(select_indices({0.5, -0.1}, 1, rng), std::invalid_argument);
  EXPECT_THROW(select({labelled({0.1})}, {0.1, 0.2}, 1, rng), std::invalid_argument);
}

TEST(EvolutionConfig, Validation) {
  EvolutionConfig c;
  EXPECT_NO_THROW(c.validate());
  c.population_size = 7;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = {};
  c.mutation_rate = 1.5;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = {};
  c.fidelity_goal = 0.0;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  EXPECT_THROW(evolve(StateVector(2), c), std::invalid_argument);
}

TEST(Evolve, AllZerosTargetConvergesImmediately) {
  EvolutionConfig c = small_config(1);
  c.initial_length = 0;
  const RunReport r = evolve(StateVector(3), c);
  EXPECT_TRUE(r.converged);
  EXPECT_EQ(r.generations, 0);
  EXPECT_EQ(r.best_fitness, 1.0);
  EXPECT_EQ(r.stats.total_gates, 0);

  const RunReport d = evolve(StateVector(3), small_config(1));
  EXPECT_TRUE(d.converged);
  EXPECT_EQ(d.generations, 0);
  EXPECT_GE(d.best_fitness, 0.99);
}

TEST(Evolve, ProductStatesCannotExceedHalfOnBell) {
  // Brute-force the best product state a (x) b over a grid of Bloch angles.
  double best = 0.0;
  constexpr int kSteps = 60;
  for (int i = 0; i <= kSteps; ++i) {
    for (int j = 0; j < kSteps; ++j) {
      for (int k = 0; k <= kSteps; ++k) {
        for (int l = 0; l < kSteps; ++l) {
          const double t1 = kPi * i / kSteps, p1 = kTwoPi * j / kSteps;
          const double t2 = kPi * k / kSteps, p2 = kTwoPi * l / kSteps;
          const std::complex<double> a0 = std::cos(t1 / 2), a1 = std::polar(std::sin(t1 / 2), p1);
          const std::complex<double> b0 = std::cos(t2 / 2), b1 = std::polar(std::sin(t2 / 2), p2);
          best = std::max(best, std::norm((a0 * b0 + a1 * b1) * M_SQRT1_2));
        }
      }
    }
  }
  EXPECT_LE(best, 0.5 + 1e-12);
  EXPECT_GE(best, 0.5 - 1e-12);
}

TEST(Evolve, BellTargetNeedsEntanglement) {
  const RunReport r = evolve(bell(), small_config(3));
  ASSERT_TRUE(r.converged);
  EXPECT_GE(r.best_fitness, 0.99);
  EXPECT_GE(r.stats.cnot_count, 1);
  EXPECT_NEAR(r.best_fitness, evaluate_fitness(r.best, bell()), 1e-12);
}

TEST(Evolve, ReportInvariants) {
  const StateVector target = w_state(3);
  const RunReport r = evolve(target, small_config(4));
  EXPECT_NEAR(r.best_fitness, evaluate_fitness(r.best, target), 1e-12);
  ASSERT_FALSE(r.fitness_trace.empty());
  EXPECT_EQ(r.fitness_trace.front().generation, 0);
  for (std::size_t i = 1; i < r.fitness_trace.size(); ++i) {
    EXPECT_GE(r.fitness_trace[i].best_fitness, r.fitness_trace[i - 1].best_fitness);
    EXPECT_GE(r.fitness_trace[i].generation, r.fitness_trace[i - 1].generation);
  }
  EXPECT_EQ(r.fitness_trace.back().best_fitness, r.best_fitness);
  EXPECT_EQ(r.stats, stats(r.best));
  EXPECT_EQ(r.final_length, 9 + r.escalations);
  EXPECT_GE(r.best_fitness, 0.0);
  EXPECT_LE(r.best_fitness, 1.0);
}

TEST(Evolve, FixedSeedIsReproducibleAcrossWorkerCounts) {
  const StateVector target = gaussian_state(GaussianSpec::with_defaults(3));
  EvolutionConfig c = small_config(5);
  const RunReport a = evolve(target, c);
  const RunReport b = evolve(target, c);
  c.workers = 3;
  const RunReport d = evolve(target, c);
  for (const RunReport* other : {&b, &d}) {
    EXPECT_EQ(a.best, other->best);
    EXPECT_EQ(a.best_fitness, other->best_fitness);
    EXPECT_EQ(a.generations, other->generations);
    EXPECT_EQ(a.escalations, other->escalations);
    ASSERT_EQ(a.fitness_trace.size(), other->fitness_trace.size());
    for (std::size_t i = 0; i < a.fitness_trace.size(); ++i) {
      EXPECT_EQ(a.fitness_trace[i].generation, other->fitness_trace[i].generation);
      EXPECT_EQ(a.fitness_trace[i].best_fitness, other->fitness_trace[i].best_fitness);
    }
  }
}

TEST(Evolve, EscalatesWhenStalledAndReportsNonConvergence) {
  EvolutionConfig c;
  c.population_size = 4;
  c.maxiter = 1;
  c.initial_length = 1;
  c.max_total_generations = 6;
  c.fidelity_goal = 1.0;
  c.seed = 6;
  const RunReport r = evolve(w_state(4), c);
  EXPECT_FALSE(r.converged);
  EXPECT_EQ(r.generations, 6);
  EXPECT_GT(r.escalations, 0);
  EXPECT_EQ(r.final_length, 1 + r.escalations);
}

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

#include <cstdint>
#include <stdexcept>
#include <optional>
#include <utility>
#include <vector>

#include "gasp/genome.hpp"
#include "gasp/optimizer.hpp"
#include "gasp/state_vector.hpp"

namespace gasp {

struct EvolutionConfig {
  int population_size = 100;
  double mutation_rate = 0.05;
  double fidelity_goal = 0.99;
  /// Generations without best-fitness improvement before the genome grows.
  int maxiter = 1000;
  /// Genes per individual at the start; unset means 3 * n_qubits.
  std::optional<int> initial_length;
  long max_total_generations = 200000;
  std::uint64_t seed = 1;
  OptimizerSettings optimizer;
  /// Threads used for angle optimisation. Results do not depend on it.
  int workers = 1;

  /// Throws std::invalid_argument when a field is out of range.
  void validate() const;
};

struct TracePoint {
  long generation;
  double best_fitness;
};

struct RunReport {
  Individual best;
  double best_fitness = 0.0;
  bool converged = false;
  /// Generations run in total, across all escalation levels.
  long generations = 0;
  int escalations = 0;
  /// Genome length in use when the run stopped.
  int final_length = 0;
  /// Global best-so-far, recorded at generation 0 and whenever it improves.
  std::vector<TracePoint> fitness_trace;
  CircuitStats stats;
  double wall_time = 0.0;
};

/// Thrown by select() when every fitness is zero.
class DegeneratePopulation : public std::runtime_error {
 public:
  DegeneratePopulation() : std::runtime_error("population has zero total fitness") {}
};

/// One-point crossover at floor(L/2): the children swap tails.
std::pair<Individual, Individual> crossover(const Individual& p1, const Individual& p2);

/// Resamples each gene independently with probability `rate`. Clears the
/// fitness cache only if some gene changed.
Individual mutate(const Individual& ind, double rate, Rng& rng);

/// As above; `replaced` receives the number of resampled positions.
Individual mutate(const Individual& ind, double rate, Rng& rng, int& replaced);

/// Roulette-wheel selection: `count` draws with replacement, index i chosen
/// with probability fitnesses[i] / sum(fitnesses).
std::vector<Individual> select(const std::vector<Individual>& population,
                               const std::vector<double>& fitnesses, std::size_t count, Rng& rng);

/// Index-returning form of select().
std::vector<std::size_t> select_indices(const std::vector<double>& fitnesses, std::size_t count, Rng& rng);

/// Runs the genetic search until the fidelity goal or the generation cap.
RunReport evolve(const StateVector& target, const EvolutionConfig& config);

}  // namespace gasp

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

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>

#include "gasp/parallel.hpp"

namespace gasp {

void EvolutionConfig::validate() const {
  if (population_size < 2 || population_size % 2 != 0) {
    throw std::invalid_argument("population size must be even and >= 2");
  }
  if (!(mutation_rate >= 0.0 && mutation_rate <= 1.0)) {
    throw std::invalid_argument("mutation rate must lie in [0, 1]");
  }
  if (!(fidelity_goal > 0.0 && fidelity_goal <= 1.0)) {
    throw std::invalid_argument("fidelity goal must lie in (0, 1]");
  }
  if (maxiter < 1) throw std::invalid_argument("maxiter must be >= 1");
  if (initial_length && *initial_length < 0) throw std::invalid_argument("initial length must be >= 0");
  if (max_total_generations < 0) throw std::invalid_argument("generation cap must be >= 0");
  if (optimizer.max_evals < 1) throw std::invalid_argument("optimizer max_evals must be >= 1");
  if (optimizer.restarts < 1) throw std::invalid_argument("optimizer restarts must be >= 1");
}

std::pair<Individual, Individual> crossover(const Individual& p1, const Individual& p2) {
  if (p1.size() != p2.size() || p1.n_qubits() != p2.n_qubits()) {
    throw std::invalid_argument("crossover parents differ in length or register size");
  }
  const auto split = static_cast<std::ptrdiff_t>(p1.size() / 2);
  std::vector<Gene> a(p1.genes().begin(), p1.genes().begin() + split);
  std::vector<Gene> b(p2.genes().begin(), p2.genes().begin() + split);
  a.insert(a.end(), p2.genes().begin() + split, p2.genes().end());
  b.insert(b.end(), p1.genes().begin() + split, p1.genes().end());
  return {Individual(p1.n_qubits(), std::move(a)), Individual(p1.n_qubits(), std::move(b))};
}

Individual mutate(const Individual& ind, double rate, Rng& rng, int& replaced) {
  replaced = 0;
  Individual out = ind;
  std::bernoulli_distribution coin(rate);
  bool changed = false;
  for (std::size_t i = 0; i < ind.size(); ++i) {
    if (!coin(rng)) continue;
    ++replaced;
    Gene g = random_gene(ind.n_qubits(), rng);
    if (g == ind[i]) continue;
    changed = true;
    out.set_gene(i, g);
  }
  if (!changed && ind.fitness()) out.set_fitness(*ind.fitness());
  return out;
}

Individual mutate(const Individual& ind, double rate, Rng& rng) {
  int replaced = 0;
  return mutate(ind, rate, rng, replaced);
}

std::vector<std::size_t> select_indices(const std::vector<double>& fitnesses, std::size_t count, Rng& rng) {
  if (fitnesses.empty()) throw std::invalid_argument("cannot select from an empty population");
  std::vector<double> cumulative(fitnesses.size());
  double total = 0.0;
  for (std::size_t i = 0; i < fitnesses.size(); ++i) {
    if (!(fitnesses[i] >= 0.0)) throw std::invalid_argument("fitness values must be non-negative");
    total += fitnesses[i];
    cumulative[i] = total;
  }
  if (!(total > 0.0)) throw DegeneratePopulation();
  std::uniform_real_distribution<double> spin(0.0, total);
  std::vector<std::size_t> picks;
  picks.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const double r = spin(rng);
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), r);
    if (it == cumulative.end()) --it;
    // skip zero-width slots that upper_bound can land on at the boundary
    while (fitnesses[static_cast<std::size_t>(it - cumulative.begin())] == 0.0 && it != cumulative.begin()) --it;
    picks.push_back(static_cast<std::size_t>(it - cumulative.begin()));
  }
  return picks;
}

std::vector<Individual> select(const std::vector<Individual>& population,
                               const std::vector<double>& fitnesses, std::size_t count, Rng& rng) {
  if (population.size() != fitnesses.size()) {
    throw std::invalid_argument("population and fitness lists differ in length");
  }
  std::vector<Individual> out;
  out.reserve(count);
  for (std::size_t i : select_indices(fitnesses, count, rng)) out.push_back(population[i]);
  return out;
}

namespace {

class Search {
 public:
  Search(const StateVector& target, const EvolutionConfig& config)
      : target_(target), config_(config), rng_(config.seed) {}

  RunReport run() {
    const auto start = std::chrono::steady_clock::now();
    const int n = target_.n_qubits();
    length_ = config_.initial_length.value_or(3 * n);

    reinitialise();
    record(0);
    while (!converged() && report_.generations < config_.max_total_generations) {
      ++report_.generations;
      step();
      record(report_.generations);
      if (converged()) break;
      if (stall_ >= config_.maxiter) {
        ++length_;
        ++report_.escalations;
        reinitialise();
        record(report_.generations);
      }
    }

    report_.converged = converged();
    report_.final_length = length_;
    report_.stats = stats(report_.best);
    report_.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return std::move(report_);
  }

 private:
  bool converged() const { return report_.best_fitness >= config_.fidelity_goal && has_best_; }

  void reinitialise() {
    population_.clear();
    for (int i = 0; i < config_.population_size; ++i) {
      population_.push_back(random_individual(target_.n_qubits(), static_cast<std::size_t>(length_), rng_));
    }
    optimise_uncached(population_);
    level_best_ = best_of(population_).second;
    stall_ = 0;
  }

  void step() {
    const std::size_t size = population_.size();
    const Individual elite = population_[best_of(population_).first];

    std::vector<std::size_t> order(size);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::shuffle(order.begin(), order.end(), rng_);
    std::vector<Individual> pool = population_;
    pool.reserve(2 * size);
    for (std::size_t i = 0; i + 1 < size; i += 2) {
      const Individual& p1 = population_[order[i]];
      const Individual& p2 = population_[order[i + 1]];
      auto [a, b] = crossover(p1, p2);
      // a child identical to a parent has not changed; keep its fitness
      for (Individual* child : {&a, &b}) {
        if (*child == p1) child->set_fitness(*p1.fitness());
        else if (*child == p2) child->set_fitness(*p2.fitness());
      }
      pool.push_back(std::move(a));
      pool.push_back(std::move(b));
    }
    for (Individual& ind : pool) ind = mutate(ind, config_.mutation_rate, rng_);
    optimise_uncached(pool);

    std::vector<double> fitnesses(pool.size());
    std::transform(pool.begin(), pool.end(), fitnesses.begin(), [](const Individual& i) { return *i.fitness(); });
    std::vector<std::size_t> picks;
    try {
      picks = select_indices(fitnesses, size - 1, rng_);
    } catch (const DegeneratePopulation&) {
      reinitialise();
      return;
    }
    std::vector<Individual> next;
    next.reserve(size);
    next.push_back(elite);
    for (std::size_t i : picks) next.push_back(pool[i]);
    population_ = std::move(next);

    const double gen_best = best_of(population_).second;
    if (gen_best > level_best_ + 1e-12) {
      level_best_ = gen_best;
      stall_ = 0;
    } else {
      ++stall_;
    }
  }

  // Optimises angles of every individual without a cached fitness. Seeds are
  // drawn up front so results do not depend on the worker count.
  void optimise_uncached(std::vector<Individual>& pop) {
    std::vector<std::size_t> todo;
    for (std::size_t i = 0; i < pop.size(); ++i) {
      if (!pop[i].fitness()) todo.push_back(i);
    }
    std::vector<std::uint64_t> seeds(todo.size());
    for (auto& s : seeds) s = rng_();
    parallel_for(todo.size(), config_.workers, [&](std::size_t k) {
      OptimizerSettings settings = config_.optimizer;
      settings.seed = seeds[k];
      pop[todo[k]] = optimize_angles(pop[todo[k]], target_, settings);
    });
  }

  static std::pair<std::size_t, double> best_of(const std::vector<Individual>& pop) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < pop.size(); ++i) {
      if (*pop[i].fitness() > *pop[best].fitness()) best = i;
    }
    return {best, *pop[best].fitness()};
  }

  void record(long generation) {
    const auto [idx, fit] = best_of(population_);
    if (!has_best_ || fit > report_.best_fitness) {
      report_.best = population_[idx];
      report_.best_fitness = fit;
      has_best_ = true;
      report_.fitness_trace.push_back({generation, fit});
    }
  }

  const StateVector& target_;
  const EvolutionConfig& config_;
  Rng rng_;
  std::vector<Individual> population_;
  RunReport report_;
  bool has_best_ = false;
  int length_ = 0;
  int stall_ = 0;
  double level_best_ = 0.0;
};

}  // namespace

RunReport evolve(const StateVector& target, const EvolutionConfig& config) {
  config.validate();
  return Search(target, config).run();
}

}  // namespace gasp

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

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

#include "gasp/sim.hpp"

namespace gasp {

namespace {

constexpr double kShift = kPi / 2;

void check_dimensions(const Individual& ind, const StateVector& target) {
  if (ind.n_qubits() != target.n_qubits()) {
    throw std::invalid_argument("individual and target have different qubit counts");
  }
}

Eigen::VectorXd current_angles(const Individual& ind) {
  const std::vector<double> a = ind.angles();
  return Eigen::Map<const Eigen::VectorXd>(a.data(), static_cast<Eigen::Index>(a.size()));
}

struct Correction {
  Eigen::VectorXd s;
  Eigen::VectorXd y;
  double rho;
};

// Two-loop recursion: returns -H g for the implicit inverse Hessian H.
Eigen::VectorXd lbfgs_direction(const Eigen::VectorXd& g, const std::deque<Correction>& history) {
  Eigen::VectorXd q = g;
  std::vector<double> alpha(history.size());
  for (std::size_t i = history.size(); i-- > 0;) {
    alpha[i] = history[i].rho * history[i].s.dot(q);
    q -= alpha[i] * history[i].y;
  }
  if (!history.empty()) {
    const Correction& last = history.back();
    q *= last.s.dot(last.y) / last.y.squaredNorm();
  }
  for (std::size_t i = 0; i < history.size(); ++i) {
    const double beta = history[i].rho * history[i].y.dot(q);
    q += (alpha[i] - beta) * history[i].s;
  }
  return -q;
}

struct LocalResult {
  Eigen::VectorXd x;
  double fitness;
};

// Minimises 1 - f from x0 within the evaluation budget.
LocalResult minimise_infidelity(const Individual& ind, const StateVector& target, Eigen::VectorXd x,
                                const OptimizerSettings& settings) {
  constexpr double kArmijo = 1e-4;
  constexpr double kMaxStep = kPi;

  FitnessAndGradient cur = evaluate_fitness(ind, target, x);
  int evals = 1;
  double loss = 1.0 - cur.fitness;
  Eigen::VectorXd grad = -cur.gradient;
  std::deque<Correction> history;

  while (evals < settings.max_evals) {
    if (grad.lpNorm<Eigen::Infinity>() < settings.gradient_tolerance || loss <= 1e-15) break;

    Eigen::VectorXd dir = lbfgs_direction(grad, history);
    double slope = grad.dot(dir);
    if (!(slope < 0)) {
      history.clear();
      dir = -grad;
      slope = grad.dot(dir);
    }
    double step = std::min(1.0, kMaxStep / dir.lpNorm<Eigen::Infinity>());

    bool accepted = false;
    Eigen::VectorXd x_new;
    FitnessAndGradient next;
    while (evals < settings.max_evals && step > 1e-12) {
      x_new = x + step * dir;
      next = evaluate_fitness(ind, target, x_new);
      ++evals;
      if (1.0 - next.fitness <= loss + kArmijo * step * slope) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;

    const double new_loss = 1.0 - next.fitness;
    Eigen::VectorXd new_grad = -next.gradient;
    Correction c{x_new - x, new_grad - grad, 0.0};
    const double sy = c.s.dot(c.y);
    if (sy > 1e-12 * c.y.squaredNorm() && sy > 0) {
      c.rho = 1.0 / sy;
      history.push_back(std::move(c));
      if (static_cast<int>(history.size()) > settings.history) history.pop_front();
    }
    const double improvement = loss - new_loss;
    x = std::move(x_new);
    grad = std::move(new_grad);
    loss = new_loss;
    if (improvement < 1e-15) break;
  }
  return {std::move(x), 1.0 - loss};
}

}  // namespace

FitnessAndGradient evaluate_fitness(const Individual& ind, const StateVector& target,
                                    const Eigen::VectorXd& angles) {
  check_dimensions(ind, target);
  if (static_cast<std::size_t>(angles.size()) != ind.parameter_count()) {
    throw std::invalid_argument("angle vector does not match rotation gene count");
  }
  const auto& genes = ind.genes();
  // U, U(+pi/2) and U(-pi/2) for every rotation, in gene order
  std::vector<Matrix2c<double>> mats(3 * static_cast<std::size_t>(angles.size()));
  {
    std::size_t k = 0;
    for (const Gene& g : genes) {
      if (!g.is_rotation()) continue;
      const double theta = angles(static_cast<Eigen::Index>(k));
      mats[3 * k] = rotation_matrix<double>(g.kind, theta);
      mats[3 * k + 1] = rotation_matrix<double>(g.kind, theta + kShift);
      mats[3 * k + 2] = rotation_matrix<double>(g.kind, theta - kShift);
      ++k;
    }
  }

  StateVector::Amplitudes psi = StateVector(ind.n_qubits()).amplitudes();
  {
    std::size_t k = 0;
    for (const Gene& g : genes) {
      if (g.is_rotation()) {
        kernels::apply_1q(psi, g.target, mats[3 * k++]);
      } else {
        kernels::apply_cnot(psi, *g.control, g.target);
      }
    }
  }
  const StateVector::Amplitudes& t = target.amplitudes();
  FitnessAndGradient out;
  out.fitness = std::min(1.0, std::norm(t.dot(psi)));
  out.gradient.resize(angles.size());

  // Walk back through the circuit: phi holds the state before gate j, chi the
  // target pulled back through every gate after j.
  StateVector::Amplitudes& phi = psi;
  StateVector::Amplitudes chi = t;
  std::size_t k = static_cast<std::size_t>(angles.size());
  for (std::size_t j = genes.size(); j-- > 0;) {
    const Gene& g = genes[j];
    if (!g.is_rotation()) {
      kernels::apply_cnot(phi, *g.control, g.target);
      kernels::apply_cnot(chi, *g.control, g.target);
      continue;
    }
    --k;
    const Matrix2c<double> inverse = mats[3 * k].adjoint();
    kernels::apply_1q(phi, g.target, inverse);
    const auto plus = kernels::overlap_1q(chi, phi, g.target, mats[3 * k + 1]);
    const auto minus = kernels::overlap_1q(chi, phi, g.target, mats[3 * k + 2]);
    out.gradient(static_cast<Eigen::Index>(k)) = 0.5 * (std::norm(plus) - std::norm(minus));
    kernels::apply_1q(chi, g.target, inverse);
  }
  return out;
}

double evaluate_fitness(const Individual& ind, const StateVector& target) {
  check_dimensions(ind, target);
  return fidelity(target, run_circuit(std::span<const Gene>(ind.genes()), ind.n_qubits()));
}

Eigen::VectorXd fitness_gradient(const Individual& ind, const StateVector& target) {
  return evaluate_fitness(ind, target, current_angles(ind)).gradient;
}

Individual optimize_angles(const Individual& ind, const StateVector& target,
                           const OptimizerSettings& settings) {
  check_dimensions(ind, target);
  if (settings.max_evals < 1) throw std::invalid_argument("max_evals must be >= 1");
  Individual out = ind;
  const double initial = evaluate_fitness(ind, target);
  if (ind.parameter_count() == 0) {
    out.set_fitness(initial);
    return out;
  }

  LocalResult best = minimise_infidelity(ind, target, current_angles(ind), settings);
  if (settings.restarts > 1) {
    Rng rng(settings.seed);
    std::uniform_real_distribution<double> uniform(0.0, kTwoPi);
    for (int r = 1; r < settings.restarts; ++r) {
      Eigen::VectorXd x0(static_cast<Eigen::Index>(ind.parameter_count()));
      for (auto& v : x0) v = uniform(rng);
      LocalResult trial = minimise_infidelity(ind, target, std::move(x0), settings);
      if (trial.fitness > best.fitness) best = std::move(trial);
    }
  }

  out.set_angles(std::span<const double>(best.x.data(), static_cast<std::size_t>(best.x.size())));
  const double final_fitness = evaluate_fitness(out, target);
  if (final_fitness < initial) {
    Individual unchanged = ind;
    unchanged.set_fitness(initial);
    return unchanged;
  }
  out.set_fitness(final_fitness);
  return out;
}

}  // namespace gasp

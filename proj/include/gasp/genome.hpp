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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "gasp/gene.hpp"

namespace gasp {

/// Random stream used throughout. One owner at a time.
using Rng = std::mt19937_64;

/// A candidate circuit: ordered genes on a fixed register, plus a fitness cache
/// that is dropped whenever the genes change.
class Individual {
 public:
  Individual() = default;
  /// Throws std::invalid_argument unless every gene is valid for `n_qubits`
  /// and every angle lies in [0, 2pi).
  explicit Individual(int n_qubits, std::vector<Gene> genes = {});

  int n_qubits() const { return n_qubits_; }
  std::size_t size() const { return genes_.size(); }
  bool empty() const { return genes_.empty(); }
  const std::vector<Gene>& genes() const { return genes_; }
  const Gene& operator[](std::size_t i) const { return genes_[i]; }

  void set_gene(std::size_t i, Gene gene);

  /// Number of rotation genes, i.e. free parameters.
  std::size_t parameter_count() const;
  std::vector<double> angles() const;
  /// Replaces rotation angles in gene order; values are wrapped into [0, 2pi).
  void set_angles(std::span<const double> angles);

  std::optional<double> fitness() const { return fitness_; }
  void set_fitness(double f) { fitness_ = f; }
  void clear_fitness() { fitness_.reset(); }

  /// Structural and angle equality; the fitness cache is ignored.
  friend bool operator==(const Individual& a, const Individual& b) {
    return a.n_qubits_ == b.n_qubits_ && a.genes_ == b.genes_;
  }

 private:
  int n_qubits_ = 1;
  std::vector<Gene> genes_;
  std::optional<double> fitness_;
};

struct CircuitStats {
  int total_gates = 0;
  int cnot_count = 0;
  int depth = 0;

  friend bool operator==(const CircuitStats&, const CircuitStats&) = default;
};

/// Uniform gate kind (CNOT excluded on one qubit), uniform target, uniform
/// control among the other qubits, uniform angle in [0, 2pi).
Gene random_gene(int n_qubits, Rng& rng);

Individual random_individual(int n_qubits, std::size_t length, Rng& rng);

/// Gate totals and ASAP depth: each gate lands one layer after the latest gate
/// already touching any of its qubits.
CircuitStats stats(const Individual& ind);

}  // namespace gasp

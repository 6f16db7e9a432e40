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

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gasp/evolution.hpp"
#include "gasp/noise.hpp"

namespace gasp {

enum class Family { Gaussian, W };

std::string_view family_name(Family f);
/// Accepts "gaussian" or "w".
Family parse_family(std::string_view name);
/// Benchmark target of the family with default parameters.
StateVector make_target(Family f, int n_qubits);

/// Bhattacharyya fidelity (sum_x sqrt(qhat_x p_x))^2 between the empirical
/// distribution of `counts` and `ideal`. Throws on empty counts.
double classical_fidelity(const Counts& counts, const Eigen::VectorXd& ideal);

/// Half the L1 distance between the empirical distribution and `ideal`.
double total_variation(const Counts& counts, const Eigen::VectorXd& ideal);

struct BenchmarkOptions {
  Family family = Family::Gaussian;
  int min_qubits = 2;
  int max_qubits = 6;
  int repeats = 3;
  std::uint64_t shots = 16384;
  EvolutionConfig config;
  NoiseModel noise;
  /// Parallel rows. Each row's search and sampling run single-threaded.
  int workers = 1;
};

struct BenchmarkRow {
  int n = 0;
  std::string method;
  int repeat = 0;
  CircuitStats stats;
  double ideal_fidelity = 0.0;
  double noisy_classical_fidelity = 0.0;
  double total_variation = 0.0;
  long generations = 0;
  double wall_time = 0.0;
  bool converged = false;
  std::optional<std::string> error;
  Counts counts;
  Individual circuit;
};

struct Summary {
  double mean = 0.0;
  double stderr_ = 0.0;
};

struct BenchmarkAggregate {
  int n = 0;
  std::string method;
  int runs = 0;
  int converged = 0;
  Summary total_gates, cnot_count, depth, ideal_fidelity, noisy_classical_fidelity, wall_time;
};

struct BenchmarkResult {
  BenchmarkOptions options;
  std::vector<BenchmarkRow> rows;
  std::vector<BenchmarkAggregate> aggregates;
};

/// Mean and standard error (sample standard deviation / sqrt(k)).
Summary summarise(const std::vector<double>& values);

/// For every qubit count and repeat, evolves a circuit and synthesises the
/// exact baseline, then samples both under the noise model. Per-row seeds are
/// derived from (seed, family, n, repeat). A row that throws is kept with its
/// error message instead of aborting the run.
BenchmarkResult run_benchmark(const BenchmarkOptions& options);

inline constexpr std::string_view kBenchmarkCsvHeader =
    "n,method,total_gates,cnot_count,depth,ideal_fidelity,noisy_classical_fidelity,generations,wall_time";

std::string benchmark_csv(const BenchmarkResult& result, bool include_timing = true);
std::string benchmark_json(const BenchmarkResult& result, bool include_timing = true);
/// Writes results.csv, results.json, summary.csv and histograms/*.json.
void write_benchmark(const BenchmarkResult& result, const std::filesystem::path& dir, bool include_timing = true);

}  // namespace gasp

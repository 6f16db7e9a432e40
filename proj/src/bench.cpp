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

#include "gasp/bench.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <stdexcept>

#include "gasp/baseline.hpp"
#include "gasp/parallel.hpp"
#include "gasp/qasm.hpp"
#include "gasp/report.hpp"
#include "gasp/sim.hpp"
#include "gasp/targets.hpp"

namespace gasp {

std::string_view family_name(Family f) { return f == Family::Gaussian ? "gaussian" : "w"; }

Family parse_family(std::string_view name) {
  if (name == "gaussian") return Family::Gaussian;
  if (name == "w") return Family::W;
  throw std::invalid_argument("unknown state family '" + std::string(name) + "'");
}

StateVector make_target(Family f, int n_qubits) {
  return f == Family::Gaussian ? gaussian_state(GaussianSpec::with_defaults(n_qubits)) : w_state(n_qubits);
}

namespace {

std::uint64_t total_shots(const Counts& counts) {
  std::uint64_t total = 0;
  for (const auto& [k, v] : counts) total += v;
  if (total == 0) throw std::invalid_argument("counts are empty");
  return total;
}

void check_support(const Counts& counts, const Eigen::VectorXd& ideal) {
  for (const auto& [k, v] : counts) {
    if (k >= static_cast<std::uint64_t>(ideal.size())) throw std::invalid_argument("count index outside the distribution");
  }
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

}  // namespace

double classical_fidelity(const Counts& counts, const Eigen::VectorXd& ideal) {
  const double total = static_cast<double>(total_shots(counts));
  check_support(counts, ideal);
  double overlap = 0.0;
  for (const auto& [k, v] : counts) overlap += std::sqrt(static_cast<double>(v) / total * ideal(static_cast<Eigen::Index>(k)));
  return std::min(1.0, overlap * overlap);
}

double total_variation(const Counts& counts, const Eigen::VectorXd& ideal) {
  const double total = static_cast<double>(total_shots(counts));
  check_support(counts, ideal);
  Eigen::VectorXd empirical = Eigen::VectorXd::Zero(ideal.size());
  for (const auto& [k, v] : counts) empirical(static_cast<Eigen::Index>(k)) = static_cast<double>(v) / total;
  return 0.5 * (empirical - ideal).lpNorm<1>();
}

Summary summarise(const std::vector<double>& values) {
  Summary s;
  if (values.empty()) return s;
  const double k = static_cast<double>(values.size());
  for (double v : values) s.mean += v;
  s.mean /= k;
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - s.mean) * (v - s.mean);
    s.stderr_ = std::sqrt(ss / (k - 1)) / std::sqrt(k);
  }
  return s;
}

namespace {

void sample_row(BenchmarkRow& row, const StateVector& target, const Eigen::VectorXd& ideal,
                const BenchmarkOptions& opt, std::uint64_t seed) {
  row.stats = stats(row.circuit);
  row.ideal_fidelity = fidelity(target, run_circuit(std::span<const Gene>(row.circuit.genes()), row.n));
  Rng rng(seed);
  row.counts = sample_counts(row.circuit, opt.noise, opt.shots, rng);
  row.noisy_classical_fidelity = classical_fidelity(row.counts, ideal);
  row.total_variation = total_variation(row.counts, ideal);
}

std::pair<BenchmarkRow, BenchmarkRow> run_job(const BenchmarkOptions& opt, int n, int repeat) {
  const auto fam = static_cast<std::uint64_t>(opt.family);
  const StateVector target = make_target(opt.family, n);
  const Eigen::VectorXd ideal = probabilities(target);

  BenchmarkRow gasp_row;
  gasp_row.n = n;
  gasp_row.method = "gasp";
  gasp_row.repeat = repeat;
  try {
    EvolutionConfig config = opt.config;
    config.seed = derive_seed(opt.config.seed, fam, n, repeat);
    config.workers = 1;
    const RunReport report = evolve(target, config);
    gasp_row.circuit = report.best;
    gasp_row.generations = report.generations;
    gasp_row.converged = report.converged;
    gasp_row.wall_time = report.wall_time;
    sample_row(gasp_row, target, ideal, opt, derive_seed(opt.config.seed, fam, n, repeat, 1));
  } catch (const std::exception& e) {
    gasp_row.error = e.what();
  }

  BenchmarkRow base_row;
  base_row.n = n;
  base_row.method = "baseline";
  base_row.repeat = repeat;
  try {
    const auto start = std::chrono::steady_clock::now();
    base_row.circuit = exact_synthesize(target);
    base_row.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    base_row.converged = true;
    sample_row(base_row, target, ideal, opt, derive_seed(opt.config.seed, fam, n, repeat, 2));
  } catch (const std::exception& e) {
    base_row.error = e.what();
  }
  return {std::move(gasp_row), std::move(base_row)};
}

}  // namespace

BenchmarkResult run_benchmark(const BenchmarkOptions& options) {
  options.config.validate();
  options.noise.validate();
  if (options.min_qubits < 2 && options.family == Family::W) throw std::invalid_argument("W states need at least two qubits");
  if (options.min_qubits < 1 || options.max_qubits < options.min_qubits) throw std::invalid_argument("invalid qubit range");
  if (options.repeats < 1) throw std::invalid_argument("repeats must be >= 1");
  if (options.shots < 1) throw std::invalid_argument("shots must be >= 1");

  std::vector<std::pair<int, int>> jobs;
  for (int n = options.min_qubits; n <= options.max_qubits; ++n) {
    for (int r = 0; r < options.repeats; ++r) jobs.emplace_back(n, r);
  }
  std::vector<std::pair<BenchmarkRow, BenchmarkRow>> done(jobs.size());
  parallel_for(jobs.size(), options.workers,
               [&](std::size_t i) { done[i] = run_job(options, jobs[i].first, jobs[i].second); });

  BenchmarkResult result;
  result.options = options;
  for (auto& [g, b] : done) {
    result.rows.push_back(std::move(g));
    result.rows.push_back(std::move(b));
  }

  for (int n = options.min_qubits; n <= options.max_qubits; ++n) {
    for (const char* method : {"gasp", "baseline"}) {
      BenchmarkAggregate agg;
      agg.n = n;
      agg.method = method;
      std::vector<double> tg, cx, dp, fi, nf, wt;
      for (const BenchmarkRow& r : result.rows) {
        if (r.n != n || r.method != method || r.error) continue;
        ++agg.runs;
        agg.converged += r.converged ? 1 : 0;
        tg.push_back(r.stats.total_gates);
        cx.push_back(r.stats.cnot_count);
        dp.push_back(r.stats.depth);
        fi.push_back(r.ideal_fidelity);
        nf.push_back(r.noisy_classical_fidelity);
        wt.push_back(r.wall_time);
      }
      agg.total_gates = summarise(tg);
      agg.cnot_count = summarise(cx);
      agg.depth = summarise(dp);
      agg.ideal_fidelity = summarise(fi);
      agg.noisy_classical_fidelity = summarise(nf);
      agg.wall_time = summarise(wt);
      result.aggregates.push_back(agg);
    }
  }
  return result;
}

std::string benchmark_csv(const BenchmarkResult& result, bool include_timing) {
  std::string out(kBenchmarkCsvHeader);
  out += '\n';
  for (const BenchmarkRow& r : result.rows) {
    out += std::to_string(r.n) + ',' + r.method + ',';
    if (r.error) {
      out += ",,,,,,\n";
      continue;
    }
    out += std::to_string(r.stats.total_gates) + ',' + std::to_string(r.stats.cnot_count) + ',' +
           std::to_string(r.stats.depth) + ',' + fmt(r.ideal_fidelity) + ',' + fmt(r.noisy_classical_fidelity) +
           ',' + std::to_string(r.generations) + ',' + fmt(include_timing ? r.wall_time : 0.0) + '\n';
  }
  return out;
}

namespace {

Json summary_json(const Summary& s) { return Json{{"mean", s.mean}, {"stderr", s.stderr_}}; }

std::string histogram_name(const BenchmarkResult& result, const BenchmarkRow& r) {
  return std::string(family_name(result.options.family)) + "_n" + std::to_string(r.n) + "_r" +
         std::to_string(r.repeat) + "_" + r.method + ".json";
}

}  // namespace

std::string benchmark_json(const BenchmarkResult& result, bool include_timing) {
  const BenchmarkOptions& o = result.options;
  Json j;
  j["schema"] = kSchemaVersion;
  j["family"] = family_name(o.family);
  j["min_qubits"] = o.min_qubits;
  j["max_qubits"] = o.max_qubits;
  j["repeats"] = o.repeats;
  j["shots"] = o.shots;
  j["noise"] = to_json(o.noise);
  j["config"] = to_json(o.config);
  Json rows = Json::array();
  for (const BenchmarkRow& r : result.rows) {
    Json row;
    row["n"] = r.n;
    row["method"] = r.method;
    row["repeat"] = r.repeat;
    row["converged"] = r.converged;
    if (r.error) {
      row["error"] = *r.error;
    } else {
      row["total_gates"] = r.stats.total_gates;
      row["cnot_count"] = r.stats.cnot_count;
      row["depth"] = r.stats.depth;
      row["ideal_fidelity"] = r.ideal_fidelity;
      row["noisy_classical_fidelity"] = r.noisy_classical_fidelity;
      row["total_variation"] = r.total_variation;
      row["generations"] = r.generations;
      row["wall_time"] = include_timing ? r.wall_time : 0.0;
      row["histogram"] = "histograms/" + histogram_name(result, r);
    }
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  Json aggs = Json::array();
  for (const BenchmarkAggregate& a : result.aggregates) {
    Json ja;
    ja["n"] = a.n;
    ja["method"] = a.method;
    ja["runs"] = a.runs;
    ja["converged"] = a.converged;
    ja["total_gates"] = summary_json(a.total_gates);
    ja["cnot_count"] = summary_json(a.cnot_count);
    ja["depth"] = summary_json(a.depth);
    ja["ideal_fidelity"] = summary_json(a.ideal_fidelity);
    ja["noisy_classical_fidelity"] = summary_json(a.noisy_classical_fidelity);
    ja["wall_time"] = include_timing ? summary_json(a.wall_time) : summary_json(Summary{});
    aggs.push_back(std::move(ja));
  }
  j["aggregates"] = std::move(aggs);
  return j.dump(2) + '\n';
}

void write_benchmark(const BenchmarkResult& result, const std::filesystem::path& dir, bool include_timing) {
  namespace fs = std::filesystem;
  fs::create_directories(dir / "histograms");
  auto write = [](const fs::path& p, const std::string& text) {
    std::ofstream f(p, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + p.string());
    f << text;
  };
  write(dir / "results.csv", benchmark_csv(result, include_timing));
  write(dir / "results.json", benchmark_json(result, include_timing));

  std::string summary = "n,method,runs,converged,total_gates_mean,total_gates_stderr,cnot_count_mean,"
                        "cnot_count_stderr,depth_mean,depth_stderr,ideal_fidelity_mean,ideal_fidelity_stderr,"
                        "noisy_classical_fidelity_mean,noisy_classical_fidelity_stderr\n";
  for (const BenchmarkAggregate& a : result.aggregates) {
    summary += std::to_string(a.n) + ',' + a.method + ',' + std::to_string(a.runs) + ',' + std::to_string(a.converged);
    for (const Summary* s : {&a.total_gates, &a.cnot_count, &a.depth, &a.ideal_fidelity, &a.noisy_classical_fidelity}) {
      summary += ',' + fmt(s->mean) + ',' + fmt(s->stderr_);
    }
    summary += '\n';
  }
  write(dir / "summary.csv", summary);

  for (const BenchmarkRow& r : result.rows) {
    if (r.error) continue;
    Json h;
    h["schema"] = kSchemaVersion;
    h["n_qubits"] = r.n;
    h["method"] = r.method;
    h["repeat"] = r.repeat;
    h["shots"] = result.options.shots;
    h["counts"] = counts_to_json(r.counts);
    write(dir / "histograms" / histogram_name(result, r), h.dump(2) + '\n');
  }
}

}  // namespace gasp

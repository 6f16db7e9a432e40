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

#include "gasp/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "gasp/baseline.hpp"
#include "gasp/bench.hpp"
#include "gasp/evolution.hpp"
#include "gasp/noise.hpp"
#include "gasp/qasm.hpp"
#include "gasp/report.hpp"
#include "gasp/sim.hpp"
#include "gasp/targets.hpp"

namespace gasp::cli {

namespace {

namespace fs = std::filesystem;

struct TargetOptions {
  std::string target;
  std::optional<int> qubits;
  std::optional<double> mu;
  std::optional<double> sigma;
};

struct EvolutionOptions {
  double fidelity = 0.99;
  int pop = 100;
  double mutation = 0.05;
  int maxiter = 1000;
  std::uint64_t seed = 1;
  std::optional<int> initial_length;
  long max_generations = 200000;
  int max_evals = 300;
  int restarts = 1;
};

struct NoiseOptions {
  double p1 = 0.001;
  double p2 = 0.01;
  double readout = 0.02;
};

void add_target_options(CLI::App* cmd, TargetOptions& t) {
  cmd->add_option("--target", t.target, "gaussian, w, or file:PATH")->required();
  cmd->add_option("--qubits", t.qubits, "Qubit count (inferred for file targets)");
  cmd->add_option("--mu", t.mu, "Gaussian mean in basis-index units (default 2^n/2)");
  cmd->add_option("--sigma", t.sigma, "Gaussian width in basis-index units (default 2^n/8)");
}

void add_evolution_options(CLI::App* cmd, EvolutionOptions& e) {
  cmd->add_option("--fidelity", e.fidelity, "Fidelity goal")->capture_default_str();
  cmd->add_option("--pop", e.pop, "Population size (even)")->capture_default_str();
  cmd->add_option("--mutation", e.mutation, "Per-gene mutation probability")->capture_default_str();
  cmd->add_option("--maxiter", e.maxiter, "Stalled generations before the genome grows")->capture_default_str();
  cmd->add_option("--seed", e.seed, "Random seed")->capture_default_str();
  cmd->add_option("--initial-length", e.initial_length, "Initial genes per individual (default 3n)");
  cmd->add_option("--max-generations", e.max_generations, "Total generation cap")->capture_default_str();
  cmd->add_option("--max-evals", e.max_evals, "Optimizer evaluations per individual")->capture_default_str();
  cmd->add_option("--restarts", e.restarts, "Optimizer starts per individual")->capture_default_str();
}

void add_noise_options(CLI::App* cmd, NoiseOptions& n) {
  cmd->add_option("--p1", n.p1, "Single-qubit gate error probability")->capture_default_str();
  cmd->add_option("--p2", n.p2, "Per-qubit CNOT error probability")->capture_default_str();
  cmd->add_option("--readout", n.readout, "Readout bit-flip probability")->capture_default_str();
}

EvolutionConfig make_config(const EvolutionOptions& e, int workers) {
  EvolutionConfig c;
  c.fidelity_goal = e.fidelity;
  c.population_size = e.pop;
  c.mutation_rate = e.mutation;
  c.maxiter = e.maxiter;
  c.seed = e.seed;
  c.initial_length = e.initial_length;
  c.max_total_generations = e.max_generations;
  c.optimizer.max_evals = e.max_evals;
  c.optimizer.restarts = e.restarts;
  c.workers = workers;
  c.validate();
  return c;
}

std::string read_file(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  if (!f) throw std::runtime_error("cannot read " + p.string());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_file(const fs::path& p, const std::string& text) {
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream f(p, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + p.string());
  f << text;
}

StateVector load_target(const TargetOptions& t, std::ostream& err) {
  if (t.target.rfind("file:", 0) == 0) {
    ParsedState parsed = parse_state(read_file(t.target.substr(5)));
    if (parsed.warning) err << "warning: " << *parsed.warning << '\n';
    if (t.qubits && *t.qubits != parsed.state.n_qubits()) {
      throw std::invalid_argument("--qubits does not match the amplitude count in " + t.target.substr(5));
    }
    return std::move(parsed.state);
  }
  if (!t.qubits) throw std::invalid_argument("--qubits is required for target '" + t.target + "'");
  const int n = *t.qubits;
  if (t.target == "gaussian") {
    GaussianSpec spec = GaussianSpec::with_defaults(n);
    if (t.mu) spec.mu = *t.mu;
    if (t.sigma) spec.sigma = *t.sigma;
    return gaussian_state(spec);
  }
  if (t.target == "w") return w_state(n);
  throw std::invalid_argument("unknown target '" + t.target + "'");
}

fs::path companion_report(const fs::path& out) {
  fs::path p = out;
  p.replace_extension(".json");
  return p;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Genetic-algorithm state preparation and exact-synthesis baseline"};
  app.require_subcommand(1);
  int workers = 1;
  bool no_timing = false;
  app.add_option("--workers", workers, "Worker threads; 1 gives bit-reproducible output")->capture_default_str();

  TargetOptions synth_target;
  EvolutionOptions synth_evo;
  std::string synth_out, synth_report;
  CLI::App* synth = app.add_subcommand("synth", "Evolve a preparation circuit");
  add_target_options(synth, synth_target);
  add_evolution_options(synth, synth_evo);
  synth->add_option("--out", synth_out, "QASM output path (default stdout)");
  synth->add_option("--report", synth_report, "JSON report path (default: --out with .json)");
  synth->add_option("--workers", workers, "Worker threads");
  synth->add_flag("--no-timing", no_timing, "Write wall_time as 0");

  TargetOptions base_target;
  std::string base_out, base_report;
  CLI::App* baseline = app.add_subcommand("baseline", "Exact uniformly-controlled-rotation synthesis");
  add_target_options(baseline, base_target);
  baseline->add_option("--out", base_out, "QASM output path (default stdout)");
  baseline->add_option("--report", base_report, "JSON report path (default: --out with .json)");
  baseline->add_option("--workers", workers, "Accepted for uniformity; synthesis is single-threaded");

  std::string circuit_path, sample_out;
  std::uint64_t shots = 16384;
  std::uint64_t sample_seed = 1;
  NoiseOptions sample_noise;
  CLI::App* sample = app.add_subcommand("sample", "Sample measurement counts under gate noise");
  sample->add_option("--circuit", circuit_path, "OpenQASM 2.0 circuit")->required();
  sample->add_option("--shots", shots, "Shots")->capture_default_str();
  sample->add_option("--seed", sample_seed, "Random seed")->capture_default_str();
  add_noise_options(sample, sample_noise);
  sample->add_option("--out", sample_out, "Counts JSON path (default stdout)");
  sample->add_option("--workers", workers, "Worker threads");

  std::string family = "gaussian", bench_out = "bench_out";
  int min_q = 2, max_q = 6, repeats = 3;
  std::uint64_t bench_shots = 16384;
  NoiseOptions bench_noise;
  EvolutionOptions bench_evo;
  CLI::App* bench = app.add_subcommand("bench", "Benchmark GASP against the exact baseline");
  bench->add_option("--family", family, "gaussian or w")->check(CLI::IsMember({"gaussian", "w"}))->capture_default_str();
  bench->add_option("--min-qubits", min_q)->capture_default_str();
  bench->add_option("--max-qubits", max_q)->capture_default_str();
  bench->add_option("--repeats", repeats)->capture_default_str();
  bench->add_option("--shots", bench_shots)->capture_default_str();
  add_noise_options(bench, bench_noise);
  add_evolution_options(bench, bench_evo);
  bench->add_option("--out", bench_out, "Output directory")->capture_default_str();
  bench->add_option("--workers", workers, "Parallel rows");
  bench->add_flag("--no-timing", no_timing, "Write wall_time as 0");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (*synth) {
      const StateVector target = load_target(synth_target, err);
      const RunReport report = evolve(target, make_config(synth_evo, workers));
      const std::string qasm = to_qasm(report.best);
      if (synth_out.empty()) {
        out << qasm;
      } else {
        write_file(synth_out, qasm);
      }
      fs::path report_path = synth_report.empty() && !synth_out.empty() ? companion_report(synth_out) : fs::path(synth_report);
      if (!report_path.empty()) {
        Json j = to_json(report, !no_timing);
        j["config"] = to_json(make_config(synth_evo, workers));
        write_file(report_path, j.dump(2) + '\n');
      }
      err << (report.converged ? "converged" : "not converged") << ": fidelity " << report.best_fitness << ", "
          << report.stats.total_gates << " gates, " << report.stats.cnot_count << " CNOTs, depth "
          << report.stats.depth << ", " << report.generations << " generations\n";
      return report.converged ? kOk : kNotConverged;
    }
    if (*baseline) {
      const StateVector target = load_target(base_target, err);
      const Individual circuit = exact_synthesize(target);
      const std::string qasm = to_qasm(circuit);
      if (base_out.empty()) {
        out << qasm;
      } else {
        write_file(base_out, qasm);
      }
      fs::path report_path = base_report.empty() && !base_out.empty() ? companion_report(base_out) : fs::path(base_report);
      if (!report_path.empty()) {
        Json j;
        j["schema"] = kSchemaVersion;
        j["method"] = "baseline";
        j["n_qubits"] = circuit.n_qubits();
        j["fidelity"] = fidelity(target, run_circuit(std::span<const Gene>(circuit.genes()), circuit.n_qubits()));
        j["stats"] = to_json(stats(circuit));
        j["circuit"] = qasm;
        write_file(report_path, j.dump(2) + '\n');
      }
      return kOk;
    }
    if (*sample) {
      const Individual circuit = parse_qasm(read_file(circuit_path));
      const NoiseModel noise{sample_noise.p1, sample_noise.p2, sample_noise.readout};
      Rng rng(sample_seed);
      const Counts counts = sample_counts(circuit, noise, shots, rng, workers);
      Json j;
      j["schema"] = kSchemaVersion;
      j["n_qubits"] = circuit.n_qubits();
      j["shots"] = shots;
      j["seed"] = sample_seed;
      j["noise"] = to_json(noise);
      j["counts"] = counts_to_json(counts);
      const std::string text = j.dump(2) + '\n';
      if (sample_out.empty()) {
        out << text;
      } else {
        write_file(sample_out, text);
      }
      return kOk;
    }
    if (*bench) {
      BenchmarkOptions opt;
      opt.family = parse_family(family);
      opt.min_qubits = min_q;
      opt.max_qubits = max_q;
      opt.repeats = repeats;
      opt.shots = bench_shots;
      opt.noise = {bench_noise.p1, bench_noise.p2, bench_noise.readout};
      opt.config = make_config(bench_evo, 1);
      opt.workers = workers;
      const BenchmarkResult result = run_benchmark(opt);
      write_benchmark(result, bench_out, !no_timing);
      std::size_t failed = 0, unconverged = 0;
      for (const BenchmarkRow& r : result.rows) {
        if (r.error) {
          ++failed;
          err << "row n=" << r.n << " " << r.method << " failed: " << *r.error << '\n';
        } else if (!r.converged) {
          ++unconverged;
        }
      }
      err << result.rows.size() << " rows written to " << bench_out << " (" << unconverged << " unconverged, "
          << failed << " failed)\n";
      return failed == result.rows.size() ? kUsageError : kOk;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace gasp::cli

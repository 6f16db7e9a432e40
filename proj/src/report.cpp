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

#include "gasp/report.hpp"

#include "gasp/qasm.hpp"

namespace gasp {

Json to_json(const CircuitStats& s) {
  return Json{{"total_gates", s.total_gates}, {"cnot_count", s.cnot_count}, {"depth", s.depth}};
}

Json to_json(const NoiseModel& noise) {
  return Json{{"p1", noise.p1}, {"p2", noise.p2}, {"readout_flip", noise.readout_flip}};
}

Json to_json(const EvolutionConfig& c) {
  Json j;
  j["population_size"] = c.population_size;
  j["mutation_rate"] = c.mutation_rate;
  j["fidelity_goal"] = c.fidelity_goal;
  j["maxiter"] = c.maxiter;
  j["initial_length"] = c.initial_length ? Json(*c.initial_length) : Json(nullptr);
  j["max_total_generations"] = c.max_total_generations;
  j["seed"] = c.seed;
  j["optimizer"] = Json{{"max_evals", c.optimizer.max_evals},
                        {"gradient_tolerance", c.optimizer.gradient_tolerance},
                        {"restarts", c.optimizer.restarts}};
  return j;
}

Json counts_to_json(const Counts& counts) {
  Json j = Json::object();
  for (const auto& [index, count] : counts) j[std::to_string(index)] = count;
  return j;
}

Json to_json(const RunReport& r, bool include_timing) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["converged"] = r.converged;
  j["best_fitness"] = r.best_fitness;
  j["generations"] = r.generations;
  j["escalations"] = r.escalations;
  j["final_length"] = r.final_length;
  j["n_qubits"] = r.best.n_qubits();
  j["stats"] = to_json(r.stats);
  Json trace = Json::array();
  for (const auto& p : r.fitness_trace) trace.push_back(Json::array({p.generation, p.best_fitness}));
  j["fitness_trace"] = std::move(trace);
  j["wall_time"] = include_timing ? r.wall_time : 0.0;
  j["circuit"] = to_qasm(r.best);
  return j;
}

}  // namespace gasp

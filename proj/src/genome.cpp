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

#include "gasp/genome.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace gasp {

std::string_view gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::RX: return "rx";
    case GateKind::RY: return "ry";
    case GateKind::RZ: return "rz";
    case GateKind::CNOT: return "cx";
  }
  return "?";
}

Gene Gene::rotation(GateKind kind, int target, double angle) {
  if (!gasp::is_rotation(kind)) throw std::invalid_argument("not a rotation kind");
  return Gene{target, kind, std::nullopt, angle};
}

Gene Gene::cnot(int control, int target) {
  return Gene{target, GateKind::CNOT, control, std::nullopt};
}

void validate_gene(const Gene& gene, int n_qubits) {
  if (gene.target < 0 || gene.target >= n_qubits) {
    throw std::invalid_argument("target qubit " + std::to_string(gene.target) +
                                " out of range for " + std::to_string(n_qubits) + " qubits");
  }
  if (gene.kind == GateKind::CNOT) {
    if (!gene.control) throw std::invalid_argument("CNOT gene without a control qubit");
    if (gene.angle) throw std::invalid_argument("CNOT gene carries an angle");
    if (*gene.control < 0 || *gene.control >= n_qubits) {
      throw std::invalid_argument("control qubit " + std::to_string(*gene.control) +
                                  " out of range for " + std::to_string(n_qubits) + " qubits");
    }
    if (*gene.control == gene.target) {
      throw std::invalid_argument("CNOT control equals target");
    }
  } else {
    if (gene.control) throw std::invalid_argument("rotation gene carries a control qubit");
    if (!gene.angle || !std::isfinite(*gene.angle)) {
      throw std::invalid_argument("rotation gene needs a finite angle");
    }
  }
}

double wrap_angle(double angle) {
  double w = std::fmod(angle, kTwoPi);
  if (w < 0) w += kTwoPi;
  // fmod of a tiny negative number can round up to exactly 2pi
  if (w >= kTwoPi) w = 0.0;
  return w;
}

Individual::Individual(int n_qubits, std::vector<Gene> genes)
    : n_qubits_(n_qubits), genes_(std::move(genes)) {
  if (n_qubits < 1) throw std::invalid_argument("individual needs at least one qubit");
  for (const Gene& g : genes_) {
    validate_gene(g, n_qubits_);
    if (g.angle && !(*g.angle >= 0.0 && *g.angle < kTwoPi)) {
      throw std::invalid_argument("gene angle outside [0, 2pi)");
    }
  }
}

void Individual::set_gene(std::size_t i, Gene gene) {
  validate_gene(gene, n_qubits_);
  if (gene.angle) gene.angle = wrap_angle(*gene.angle);
  genes_.at(i) = gene;
  fitness_.reset();
}

std::size_t Individual::parameter_count() const {
  return static_cast<std::size_t>(
      std::count_if(genes_.begin(), genes_.end(), [](const Gene& g) { return g.is_rotation(); }));
}

std::vector<double> Individual::angles() const {
  std::vector<double> out;
  out.reserve(genes_.size());
  for (const Gene& g : genes_) {
    if (g.angle) out.push_back(*g.angle);
  }
  return out;
}

void Individual::set_angles(std::span<const double> angles) {
  if (angles.size() != parameter_count()) {
    throw std::invalid_argument("angle count does not match rotation gene count");
  }
  std::size_t k = 0;
  for (Gene& g : genes_) {
    if (g.angle) g.angle = wrap_angle(angles[k++]);
  }
  fitness_.reset();
}

Gene random_gene(int n_qubits, Rng& rng) {
  if (n_qubits < 1) throw std::invalid_argument("random_gene: n_qubits must be >= 1");
  const int kinds = n_qubits == 1 ? 3 : 4;
  const auto kind = static_cast<GateKind>(std::uniform_int_distribution<int>(0, kinds - 1)(rng));
  const int target = std::uniform_int_distribution<int>(0, n_qubits - 1)(rng);
  if (kind == GateKind::CNOT) {
    // draw from the n-1 other qubits
    int control = std::uniform_int_distribution<int>(0, n_qubits - 2)(rng);
    if (control >= target) ++control;
    return Gene::cnot(control, target);
  }
  const double angle = std::uniform_real_distribution<double>(0.0, kTwoPi)(rng);
  return Gene::rotation(kind, target, wrap_angle(angle));
}

Individual random_individual(int n_qubits, std::size_t length, Rng& rng) {
  std::vector<Gene> genes;
  genes.reserve(length);
  for (std::size_t i = 0; i < length; ++i) genes.push_back(random_gene(n_qubits, rng));
  return Individual(n_qubits, std::move(genes));
}

CircuitStats stats(const Individual& ind) {
  CircuitStats s;
  std::vector<int> frontier(static_cast<std::size_t>(ind.n_qubits()), 0);
  for (const Gene& g : ind.genes()) {
    ++s.total_gates;
    int layer = frontier[g.target];
    if (g.kind == GateKind::CNOT) {
      ++s.cnot_count;
      layer = std::max(layer, frontier[*g.control]);
    }
    ++layer;
    frontier[g.target] = layer;
    if (g.control) frontier[*g.control] = layer;
    s.depth = std::max(s.depth, layer);
  }
  return s;
}

}  // namespace gasp

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
#include <map>

#include "gasp/genome.hpp"

namespace gasp {

/// Stochastic Pauli gate errors plus symmetric readout bit flips.
struct NoiseModel {
  /// Error probability after each single-qubit gate.
  double p1 = 0.001;
  /// Error probability for each of the two qubits after a CNOT.
  double p2 = 0.01;
  /// Independent flip probability of each measured bit.
  double readout_flip = 0.02;

  static NoiseModel noiseless() { return {0.0, 0.0, 0.0}; }
  void validate() const;
};

using Counts = std::map<std::uint64_t, std::uint64_t>;

/// Monte-Carlo trajectories: after every gate each affected qubit suffers a
/// uniformly random X, Y or Z with the gate's error probability; the final
/// state is measured in the computational basis and bits are flipped with the
/// readout probability. Shots are split into fixed blocks with seeds derived
/// from one draw of `rng`, so the counts do not depend on `workers`.
Counts sample_counts(const Individual& ind, const NoiseModel& noise, std::uint64_t shots, Rng& rng,
                     int workers = 1);

}  // namespace gasp

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

#include <vector>

#include "gasp/genome.hpp"
#include "gasp/state_vector.hpp"

namespace gasp {

/// Angles of the uniformly controlled rotation cascade that builds a state
/// from |0...0>. Level k targets qubit n-1-k and is controlled by the k more
/// significant qubits; entry c of a level is the angle applied when those
/// qubits read c (qubit n-k is bit 0 of c).
struct MultiplexorAngles {
  std::vector<std::vector<double>> ry;
  std::vector<std::vector<double>> rz;
};

/// Magnitude angles 2 atan2(|upper child|, |lower child|) and phase
/// differences over the binary amplitude tree. Empty subtrees give angle 0.
MultiplexorAngles disentangle_angles(const StateVector::Amplitudes& amplitudes);

/// Exact preparation circuit over {RY, RZ, CNOT}. Every multiplexed rotation
/// with k controls expands into 2^k rotations and 2^k CNOTs in Gray-code
/// order, so a real non-negative target costs 2^n - 2 CNOTs and a general one
/// 2^(n+1) - 4. The phase cascade is omitted for real non-negative targets.
/// Global phase is not corrected.
Individual exact_synthesize(const StateVector& target);

/// True when every amplitude is real and non-negative (to 1e-14).
bool is_real_nonnegative(const StateVector& state);

}  // namespace gasp

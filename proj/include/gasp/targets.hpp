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

#include <optional>
#include <string>
#include <string_view>

#include "gasp/state_vector.hpp"

namespace gasp {

/// Gaussian profile over basis indices. Mean and width are in index units.
struct GaussianSpec {
  int n_qubits = 1;
  double mu = 0.0;
  double sigma = 1.0;

  /// mu = 2^n / 2, sigma = 2^n / 8.
  static GaussianSpec with_defaults(int n_qubits);
};

/// Amplitudes proportional to the normal density g(x) at each basis index,
/// renormalised to unit length. All amplitudes are real and positive.
StateVector gaussian_state(const GaussianSpec& spec);

/// Equal superposition of the n basis states of Hamming weight one. n >= 2.
StateVector w_state(int n_qubits);

struct ParsedState {
  StateVector state;
  /// Set when the input norm deviated from 1 by more than 1e-6.
  std::optional<std::string> warning;
};

/// Reads whitespace separated amplitudes `a`, `a+bi` or `a-bi` in basis index
/// order. `#` starts a comment that runs to the end of the line. Throws
/// std::invalid_argument on malformed numbers, a count that is not a power of
/// two, or a zero vector.
ParsedState parse_state(std::string_view text);

}  // namespace gasp

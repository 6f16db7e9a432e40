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

#include "gasp/baseline.hpp"

#include <bit>
#include <cmath>
#include <complex>

namespace gasp {

namespace {

using Level = std::vector<double>;

// Appends the Gray-code expansion of a rotation multiplexed on `controls`.
void append_multiplexor(std::vector<Gene>& out, GateKind kind, int target,
                        const std::vector<int>& controls, const Level& alpha) {
  const std::size_t k = controls.size();
  const std::size_t count = std::size_t{1} << k;
  if (k == 0) {
    out.push_back(Gene::rotation(kind, target, wrap_angle(alpha[0])));
    return;
  }
  const double scale = 1.0 / static_cast<double>(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t gray = i ^ (i >> 1);
    double theta = 0.0;
    for (std::size_t j = 0; j < count; ++j) {
      theta += (std::popcount(j & gray) % 2 ? -1.0 : 1.0) * alpha[j];
    }
    out.push_back(Gene::rotation(kind, target, wrap_angle(theta * scale)));
    const std::size_t next = (i + 1) % count;
    const std::size_t flipped = gray ^ (next ^ (next >> 1));
    out.push_back(Gene::cnot(controls[static_cast<std::size_t>(std::countr_zero(flipped))], target));
  }
}

}  // namespace

MultiplexorAngles disentangle_angles(const StateVector::Amplitudes& amplitudes) {
  const int n = StateVector::qubits_for_length(amplitudes.size());
  // norms[k][c], phases[k][c] for prefix c of length k
  std::vector<Level> norms(static_cast<std::size_t>(n) + 1), phases(static_cast<std::size_t>(n) + 1);
  norms[n].resize(static_cast<std::size_t>(amplitudes.size()));
  phases[n].resize(static_cast<std::size_t>(amplitudes.size()));
  for (Eigen::Index x = 0; x < amplitudes.size(); ++x) {
    norms[n][x] = std::abs(amplitudes(x));
    phases[n][x] = norms[n][x] > 0 ? std::arg(amplitudes(x)) : 0.0;
  }

  MultiplexorAngles out;
  out.ry.resize(static_cast<std::size_t>(n));
  out.rz.resize(static_cast<std::size_t>(n));
  for (int k = n - 1; k >= 0; --k) {
    const std::size_t width = std::size_t{1} << k;
    norms[k].resize(width);
    phases[k].resize(width);
    out.ry[k].resize(width);
    out.rz[k].resize(width);
    for (std::size_t c = 0; c < width; ++c) {
      const double lo = norms[k + 1][2 * c], hi = norms[k + 1][2 * c + 1];
      norms[k][c] = std::hypot(lo, hi);
      out.ry[k][c] = 2.0 * std::atan2(hi, lo);
      const double plo = phases[k + 1][2 * c], phi = phases[k + 1][2 * c + 1];
      phases[k][c] = 0.5 * (plo + phi);
      out.rz[k][c] = phi - plo;
    }
  }
  return out;
}

bool is_real_nonnegative(const StateVector& state) {
  for (const auto& a : state.amplitudes()) {
    if (std::abs(a.imag()) > 1e-14 || a.real() < -1e-14) return false;
  }
  return true;
}

Individual exact_synthesize(const StateVector& target) {
  const int n = target.n_qubits();
  const MultiplexorAngles angles = disentangle_angles(target.amplitudes());
  const bool phases = !is_real_nonnegative(target);
  std::vector<Gene> genes;
  for (int k = 0; k < n; ++k) {
    const int qubit = n - 1 - k;
    std::vector<int> controls;
    for (int m = 0; m < k; ++m) controls.push_back(n - k + m);
    append_multiplexor(genes, GateKind::RY, qubit, controls, angles.ry[k]);
    if (phases) append_multiplexor(genes, GateKind::RZ, qubit, controls, angles.rz[k]);
  }
  return Individual(n, std::move(genes));
}

}  // namespace gasp

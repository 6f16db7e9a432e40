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

#include "gasp/targets.hpp"

#include <cctype>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace gasp {

GaussianSpec GaussianSpec::with_defaults(int n_qubits) {
  const double dim = std::ldexp(1.0, n_qubits);
  return {n_qubits, dim / 2, dim / 8};
}

StateVector gaussian_state(const GaussianSpec& spec) {
  if (!(spec.sigma > 0)) throw std::invalid_argument("gaussian sigma must be positive");
  if (spec.n_qubits < 1) throw std::invalid_argument("gaussian state needs at least one qubit");
  const Eigen::Index dim = Eigen::Index{1} << spec.n_qubits;
  const double norm = 1.0 / (spec.sigma * std::sqrt(2 * M_PI));
  StateVector::Amplitudes amps(dim);
  for (Eigen::Index x = 0; x < dim; ++x) {
    const double z = (static_cast<double>(x) - spec.mu) / spec.sigma;
    amps(x) = norm * std::exp(-0.5 * z * z);
  }
  return StateVector::normalized(std::move(amps));
}

StateVector w_state(int n_qubits) {
  if (n_qubits < 2) throw std::invalid_argument("W state needs at least two qubits");
  StateVector::Amplitudes amps = StateVector::Amplitudes::Zero(Eigen::Index{1} << n_qubits);
  const double a = 1.0 / std::sqrt(static_cast<double>(n_qubits));
  for (int q = 0; q < n_qubits; ++q) amps(Eigen::Index{1} << q) = a;
  return StateVector::normalized(std::move(amps));
}

namespace {

std::complex<double> parse_amplitude(const std::string& token) {
  const char* begin = token.c_str();
  char* end = nullptr;
  const double re = std::strtod(begin, &end);
  if (end == begin) throw std::invalid_argument("malformed amplitude '" + token + "'");
  if (*end == '\0') return {re, 0.0};
  // imaginary part must be signed and end in 'i'
  if ((*end == '+' || *end == '-') && token.back() == 'i') {
    const std::string imag(static_cast<const char*>(end), token.c_str() + token.size() - 1);
    const char* ib = imag.c_str();
    char* ie = nullptr;
    const double im = std::strtod(ib, &ie);
    if (ie != ib && *ie == '\0' && imag.size() > 1) return {re, im};
  }
  throw std::invalid_argument("malformed amplitude '" + token + "'");
}

}  // namespace

ParsedState parse_state(std::string_view text) {
  std::vector<std::complex<double>> values;
  std::istringstream lines{std::string(text)};
  std::string line;
  while (std::getline(lines, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string token;
    while (words >> token) values.push_back(parse_amplitude(token));
  }
  const auto n = static_cast<Eigen::Index>(values.size());
  if (n < 2 || (n & (n - 1)) != 0) {
    throw std::invalid_argument("amplitude count " + std::to_string(n) + " is not a power of two >= 2");
  }
  StateVector::Amplitudes amps = Eigen::Map<StateVector::Amplitudes>(values.data(), n);
  const double norm = amps.norm();
  if (!(norm > 0) || !std::isfinite(norm)) throw std::invalid_argument("target vector has zero or non-finite norm");
  std::optional<std::string> warning;
  if (std::abs(norm - 1.0) > 1e-6) {
    warning = "target vector norm " + std::to_string(norm) + " renormalised to 1";
  }
  return {StateVector::normalized(std::move(amps)), std::move(warning)};
}

}  // namespace gasp

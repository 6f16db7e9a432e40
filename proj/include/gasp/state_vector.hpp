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

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace gasp {

/// Dense n-qubit pure state. Basis index x encodes qubit 0 as its least
/// significant bit. Construction enforces unit norm within 1e-10.
template <typename Scalar>
class BasicStateVector {
 public:
  using Complex = std::complex<Scalar>;
  using Amplitudes = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;

  static constexpr double kNormTolerance = 1e-10;

  /// |0...0> on n qubits.
  explicit BasicStateVector(int n_qubits) : n_qubits_(check_qubits(n_qubits)) {
    amplitudes_ = Amplitudes::Zero(Eigen::Index{1} << n_qubits);
    amplitudes_(0) = Complex(1);
  }

  BasicStateVector(int n_qubits, Amplitudes amplitudes)
      : n_qubits_(check_qubits(n_qubits)), amplitudes_(std::move(amplitudes)) {
    check_length();
    const double norm2 = static_cast<double>(amplitudes_.squaredNorm());
    if (!(std::abs(norm2 - 1.0) <= kNormTolerance)) {
      throw std::invalid_argument("state vector is not unit norm (|psi|^2 = " +
                                  std::to_string(norm2) + ")");
    }
  }

  /// Infers the qubit count from the length and rescales to unit norm.
  static BasicStateVector normalized(Amplitudes amplitudes) {
    const int n = qubits_for_length(amplitudes.size());
    const Scalar norm = amplitudes.norm();
    if (!(norm > Scalar(0)) || !std::isfinite(static_cast<double>(norm))) {
      throw std::invalid_argument("cannot normalize a zero or non-finite vector");
    }
    amplitudes /= norm;
    return BasicStateVector(n, std::move(amplitudes));
  }

  /// Computational basis state |index>.
  static BasicStateVector basis(int n_qubits, std::size_t index) {
    BasicStateVector s(n_qubits);
    if (index >= static_cast<std::size_t>(s.dimension())) {
      throw std::out_of_range("basis index out of range");
    }
    s.amplitudes_(0) = Complex(0);
    s.amplitudes_(static_cast<Eigen::Index>(index)) = Complex(1);
    return s;
  }

  /// log2(length); throws unless the length is a power of two >= 2.
  static int qubits_for_length(Eigen::Index length) {
    if (length < 2 || (length & (length - 1)) != 0) {
      throw std::invalid_argument("amplitude count " + std::to_string(length) +
                                  " is not a power of two >= 2");
    }
    int n = 0;
    while ((Eigen::Index{1} << n) < length) ++n;
    return n;
  }

  int n_qubits() const { return n_qubits_; }
  Eigen::Index dimension() const { return amplitudes_.size(); }
  const Amplitudes& amplitudes() const { return amplitudes_; }
  Complex operator[](Eigen::Index i) const { return amplitudes_(i); }

  /// Raw access for in-place kernels. Callers must preserve the norm.
  Amplitudes& mutable_amplitudes() { return amplitudes_; }

 private:
  static int check_qubits(int n) {
    if (n < 1 || n > 30) throw std::invalid_argument("qubit count must be in [1, 30]");
    return n;
  }
  void check_length() const {
    if (amplitudes_.size() != (Eigen::Index{1} << n_qubits_)) {
      throw std::invalid_argument("amplitude count does not match 2^n_qubits");
    }
  }

  int n_qubits_;
  Amplitudes amplitudes_;
};

using StateVector = BasicStateVector<double>;

}  // namespace gasp

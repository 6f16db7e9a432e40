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

#include <algorithm>
#include <complex>
#include <span>
#include <stdexcept>

#include "gasp/gene.hpp"
#include "gasp/state_vector.hpp"

namespace gasp {

template <typename Scalar>
using Matrix2c = Eigen::Matrix<std::complex<Scalar>, 2, 2>;

/// Unitary of R_axis(angle) = exp(-i angle sigma_axis / 2).
template <typename Scalar>
Matrix2c<Scalar> rotation_matrix(GateKind kind, double angle) {
  using C = std::complex<Scalar>;
  const Scalar c = static_cast<Scalar>(std::cos(angle / 2));
  const Scalar s = static_cast<Scalar>(std::sin(angle / 2));
  Matrix2c<Scalar> m;
  switch (kind) {
    case GateKind::RX:
      m << C(c, 0), C(0, -s), C(0, -s), C(c, 0);
      break;
    case GateKind::RY:
      m << C(c, 0), C(-s, 0), C(s, 0), C(c, 0);
      break;
    case GateKind::RZ:
      m << C(c, -s), C(0, 0), C(0, 0), C(c, s);
      break;
    case GateKind::CNOT:
      throw std::invalid_argument("CNOT has no rotation matrix");
  }
  return m;
}

namespace kernels {

/// psi <- (I (x) ... (x) m (x) ... (x) I) psi with m acting on `qubit`.
template <typename Derived, typename Scalar>
void apply_1q(Eigen::MatrixBase<Derived>& psi, int qubit, const Matrix2c<Scalar>& m) {
  const Eigen::Index dim = psi.size();
  const Eigen::Index stride = Eigen::Index{1} << qubit;
  const auto m00 = m(0, 0), m01 = m(0, 1), m10 = m(1, 0), m11 = m(1, 1);
  for (Eigen::Index block = 0; block < dim; block += 2 * stride) {
    for (Eigen::Index i0 = block; i0 < block + stride; ++i0) {
      const auto a0 = psi(i0);
      const auto a1 = psi(i0 + stride);
      psi(i0) = m00 * a0 + m01 * a1;
      psi(i0 + stride) = m10 * a0 + m11 * a1;
    }
  }
}

template <typename Derived>
void apply_cnot(Eigen::MatrixBase<Derived>& psi, int control, int target) {
  const Eigen::Index dim = psi.size();
  const Eigen::Index cmask = Eigen::Index{1} << control;
  const Eigen::Index tmask = Eigen::Index{1} << target;
  for (Eigen::Index i = 0; i < dim; ++i) {
    if ((i & cmask) && !(i & tmask)) std::swap(psi(i), psi(i | tmask));
  }
}

/// <chi| (m on qubit) |phi> without materialising the product.
template <typename DerivedA, typename DerivedB, typename Scalar>
std::complex<Scalar> overlap_1q(const Eigen::MatrixBase<DerivedA>& chi,
                                const Eigen::MatrixBase<DerivedB>& phi, int qubit,
                                const Matrix2c<Scalar>& m) {
  const Eigen::Index dim = phi.size();
  const Eigen::Index stride = Eigen::Index{1} << qubit;
  std::complex<Scalar> acc(0);
  for (Eigen::Index block = 0; block < dim; block += 2 * stride) {
    for (Eigen::Index i0 = block; i0 < block + stride; ++i0) {
      const auto a0 = phi(i0);
      const auto a1 = phi(i0 + stride);
      acc += std::conj(chi(i0)) * (m(0, 0) * a0 + m(0, 1) * a1) +
             std::conj(chi(i0 + stride)) * (m(1, 0) * a0 + m(1, 1) * a1);
    }
  }
  return acc;
}

/// Applies a gene without validation; the angle may be overridden.
template <typename Derived>
void apply_gene(Eigen::MatrixBase<Derived>& psi, const Gene& gene, double angle) {
  using Scalar = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  if (gene.kind == GateKind::CNOT) {
    apply_cnot(psi, *gene.control, gene.target);
  } else {
    apply_1q(psi, gene.target, rotation_matrix<Scalar>(gene.kind, angle));
  }
}

template <typename Derived>
void apply_gene(Eigen::MatrixBase<Derived>& psi, const Gene& gene) {
  apply_gene(psi, gene, gene.angle.value_or(0.0));
}

/// Applies the inverse of a gene.
template <typename Derived>
void apply_gene_inverse(Eigen::MatrixBase<Derived>& psi, const Gene& gene, double angle) {
  apply_gene(psi, gene, -angle);
}

}  // namespace kernels

/// U|psi> for the gene's gate; the input state is untouched.
template <typename Scalar>
BasicStateVector<Scalar> apply_gate(const BasicStateVector<Scalar>& state, const Gene& gene) {
  validate_gene(gene, state.n_qubits());
  BasicStateVector<Scalar> out = state;
  kernels::apply_gene(out.mutable_amplitudes(), gene);
  return out;
}

/// Folds the genes left to right over |0...0>.
template <typename Scalar = double>
BasicStateVector<Scalar> run_circuit(std::span<const Gene> genes, int n_qubits) {
  BasicStateVector<Scalar> state(n_qubits);
  for (const Gene& g : genes) validate_gene(g, n_qubits);
  auto& amps = state.mutable_amplitudes();
  for (const Gene& g : genes) kernels::apply_gene(amps, g);
  return state;
}

/// |<a|b>|^2.
template <typename Scalar>
double fidelity(const BasicStateVector<Scalar>& a, const BasicStateVector<Scalar>& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw std::invalid_argument("fidelity: qubit counts differ");
  }
  return std::min(1.0, static_cast<double>(std::norm(a.amplitudes().dot(b.amplitudes()))));
}

/// Born-rule probabilities p[x] = |amplitude[x]|^2.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> probabilities(const BasicStateVector<Scalar>& state) {
  return state.amplitudes().cwiseAbs2();
}

}  // namespace gasp

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

#include "gasp/noise.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "gasp/parallel.hpp"
#include "gasp/sim.hpp"

namespace gasp {

void NoiseModel::validate() const {
  for (double p : {p1, p2, readout_flip}) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("noise probabilities must lie in [0, 1]");
  }
}

namespace {

constexpr std::uint64_t kBlockShots = 1024;
// Above this many cached amplitudes the prefix cache is skipped.
constexpr std::size_t kPrefixCacheLimit = std::size_t{1} << 22;

struct PauliEvent {
  std::size_t after_gene;
  int qubit;
  int pauli;  // 1 = X, 2 = Y, 3 = Z
};

const Matrix2c<double>& pauli_matrix(int pauli) {
  using C = std::complex<double>;
  static const Matrix2c<double> x = (Matrix2c<double>() << C(0), C(1), C(1), C(0)).finished();
  static const Matrix2c<double> y = (Matrix2c<double>() << C(0), C(0, -1), C(0, 1), C(0)).finished();
  static const Matrix2c<double> z = (Matrix2c<double>() << C(1), C(0), C(0), C(-1)).finished();
  return pauli == 1 ? x : pauli == 2 ? y : z;
}

std::uint64_t sample_index(const Eigen::VectorXd& cdf, double u) {
  const auto* begin = cdf.data();
  const auto* end = begin + cdf.size();
  const auto* it = std::upper_bound(begin, end, u * cdf(cdf.size() - 1));
  if (it == end) --it;
  return static_cast<std::uint64_t>(it - begin);
}

Eigen::VectorXd cumulative(const StateVector::Amplitudes& psi) {
  Eigen::VectorXd cdf(psi.size());
  double acc = 0.0;
  for (Eigen::Index i = 0; i < psi.size(); ++i) {
    acc += std::norm(psi(i));
    cdf(i) = acc;
  }
  return cdf;
}

class TrajectorySampler {
 public:
  TrajectorySampler(const Individual& ind, const NoiseModel& noise) : ind_(ind), noise_(noise) {
    StateVector::Amplitudes psi = StateVector(ind.n_qubits()).amplitudes();
    const std::size_t dim = static_cast<std::size_t>(psi.size());
    cache_prefixes_ = (ind.size() + 1) * dim <= kPrefixCacheLimit;
    if (cache_prefixes_) prefixes_.push_back(psi);
    for (const Gene& g : ind.genes()) {
      kernels::apply_gene(psi, g);
      if (cache_prefixes_) prefixes_.push_back(psi);
    }
    ideal_cdf_ = cumulative(psi);
  }

  void run(std::uint64_t shots, Rng& rng, Counts& counts) const {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> which(1, 3);
    std::vector<PauliEvent> events;
    for (std::uint64_t s = 0; s < shots; ++s) {
      events.clear();
      const auto& genes = ind_.genes();
      for (std::size_t j = 0; j < genes.size(); ++j) {
        const Gene& g = genes[j];
        if (g.kind == GateKind::CNOT) {
          if (unit(rng) < noise_.p2) events.push_back({j, *g.control, which(rng)});
          if (unit(rng) < noise_.p2) events.push_back({j, g.target, which(rng)});
        } else if (unit(rng) < noise_.p1) {
          events.push_back({j, g.target, which(rng)});
        }
      }
      std::uint64_t outcome;
      if (events.empty()) {
        outcome = sample_index(ideal_cdf_, unit(rng));
      } else {
        outcome = sample_index(cumulative(trajectory(events)), unit(rng));
      }
      for (int q = 0; q < ind_.n_qubits(); ++q) {
        if (unit(rng) < noise_.readout_flip) outcome ^= std::uint64_t{1} << q;
      }
      ++counts[outcome];
    }
  }

 private:
  StateVector::Amplitudes trajectory(const std::vector<PauliEvent>& events) const {
    const auto& genes = ind_.genes();
    std::size_t j = 0;
    StateVector::Amplitudes psi;
    if (cache_prefixes_) {
      j = events.front().after_gene + 1;
      psi = prefixes_[j];
    } else {
      psi = StateVector(ind_.n_qubits()).amplitudes();
    }
    auto ev = events.begin();
    // events are ordered by gene; apply those attached to genes already passed
    for (;;) {
      while (ev != events.end() && ev->after_gene + 1 == j) {
        kernels::apply_1q(psi, ev->qubit, pauli_matrix(ev->pauli));
        ++ev;
      }
      if (j == genes.size()) break;
      kernels::apply_gene(psi, genes[j]);
      ++j;
    }
    return psi;
  }

  const Individual& ind_;
  const NoiseModel& noise_;
  bool cache_prefixes_ = false;
  std::vector<StateVector::Amplitudes> prefixes_;
  Eigen::VectorXd ideal_cdf_;
};

}  // namespace

Counts sample_counts(const Individual& ind, const NoiseModel& noise, std::uint64_t shots, Rng& rng,
                     int workers) {
  noise.validate();
  if (shots < 1) throw std::invalid_argument("shots must be >= 1");
  const TrajectorySampler sampler(ind, noise);
  const std::uint64_t base = rng();
  const std::uint64_t blocks = (shots + kBlockShots - 1) / kBlockShots;
  std::vector<Counts> partial(blocks);
  parallel_for(blocks, workers, [&](std::size_t b) {
    Rng block_rng(derive_seed(base, b));
    const std::uint64_t first = b * kBlockShots;
    sampler.run(std::min(kBlockShots, shots - first), block_rng, partial[b]);
  });
  Counts total;
  for (const Counts& c : partial) {
    for (const auto& [k, v] : c) total[k] += v;
  }
  return total;
}

}  // namespace gasp

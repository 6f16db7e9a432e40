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

#include <gtest/gtest.h>

#include <array>

#include "oracles.hpp"

using namespace gasp;

namespace {

void expect_valid(const Gene& g, int n) {
  EXPECT_NO_THROW(validate_gene(g, n));
  if (g.is_rotation()) {
    EXPECT_FALSE(g.control.has_value());
    ASSERT_TRUE(g.angle.has_value());
    EXPECT_GE(*g.angle, 0.0);
    EXPECT_LT(*g.angle, kTwoPi);
  } else {
    ASSERT_TRUE(g.control.has_value());
    EXPECT_NE(*g.control, g.target);
    EXPECT_FALSE(g.angle.has_value());
  }
}

}  // namespace

TEST(Gene, ValidationCatchesMalformedGenes) {
  EXPECT_THROW(validate_gene(Gene{0, GateKind::RX, 1, 0.5}, 2), std::invalid_argument);
  EXPECT_THROW(validate_gene(Gene{0, GateKind::RX, std::nullopt, std::nullopt}, 2), std::invalid_argument);
  EXPECT_THROW(validate_gene(Gene{0, GateKind::CNOT, 1, 0.5}, 2), std::invalid_argument);
  EXPECT_THROW(validate_gene(Gene{0, GateKind::CNOT, std::nullopt, std::nullopt}, 2), std::invalid_argument);
  EXPECT_THROW(validate_gene(Gene::rotation(GateKind::RY, 0, std::nan("")), 1), std::invalid_argument);
}

TEST(Gene, WrapAngleIsCanonical) {
  EXPECT_DOUBLE_EQ(wrap_angle(0.0), 0.0);
  EXPECT_NEAR(wrap_angle(-0.5), kTwoPi - 0.5, 1e-15);
  EXPECT_NEAR(wrap_angle(7.0), 7.0 - kTwoPi, 1e-15);
  EXPECT_LT(wrap_angle(-1e-18), kTwoPi);
  EXPECT_DOUBLE_EQ(wrap_angle(kTwoPi), 0.0);
}

TEST(Individual, RejectsNonCanonicalAngles) {
  EXPECT_THROW(Individual(1, {Gene::rotation(GateKind::RX, 0, -0.1)}), std::invalid_argument);
  EXPECT_THROW(Individual(1, {Gene::rotation(GateKind::RX, 0, kTwoPi)}), std::invalid_argument);
  EXPECT_THROW(Individual(2, {Gene::cnot(0, 2)}), std::invalid_argument);
}

TEST(Individual, SetGeneClearsFitness) {
  Individual ind(2, {Gene::rotation(GateKind::RX, 0, 1.0)});
  ind.set_fitness(0.5);
  ind.set_gene(0, Gene::cnot(1, 0));
  EXPECT_FALSE(ind.fitness().has_value());
}

TEST(Individual, AnglesRoundTripThroughSetAngles) {
  Individual ind(2, {Gene::rotation(GateKind::RX, 0, 1.0), Gene::cnot(0, 1), Gene::rotation(GateKind::RZ, 1, 2.0)});
  EXPECT_EQ(ind.parameter_count(), 2u);
  const std::vector<double> angles{-1.0, 8.0};
  ind.set_angles(angles);
  EXPECT_NEAR(*ind[0].angle, kTwoPi - 1.0, 1e-15);
  EXPECT_NEAR(*ind[2].angle, 8.0 - kTwoPi, 1e-15);
  EXPECT_THROW(ind.set_angles(std::vector<double>{1.0}), std::invalid_argument);
}

TEST(RandomGene, SingleQubitNeverDrawsCnot) {
  Rng rng(1);
  for (int i = 0; i < 10000; ++i) EXPECT_NE(random_gene(1, rng).kind, GateKind::CNOT);
}

TEST(RandomGene, RejectsEmptyRegister) {
  Rng rng(1);
  EXPECT_THROW(random_gene(0, rng), std::invalid_argument);
}

TEST(RandomGene, KindFrequenciesAreUniform) {
  Rng rng(2);
  constexpr int kDraws = 10000;
  std::array<int, 4> counts{};
  for (int i = 0; i < kDraws; ++i) ++counts[static_cast<int>(random_gene(5, rng).kind)];
  for (int c : counts) EXPECT_TRUE(oracle::within_5_sigma(c, kDraws, 0.25)) << c;
}

TEST(RandomGene, QubitChoicesAreUniform) {
  Rng rng(3);
  constexpr int kDraws = 20000;
  std::array<int, 4> targets{}, controls{};
  int cnots = 0;
  for (int i = 0; i < kDraws; ++i) {
    const Gene g = random_gene(4, rng);
    ++targets[g.target];
    if (g.control) {
      ++controls[*g.control];
      ++cnots;
    }
  }
  for (int c : targets) EXPECT_TRUE(oracle::within_5_sigma(c, kDraws, 0.25));
  for (int c : controls) EXPECT_TRUE(oracle::within_5_sigma(c, cnots, 0.25));
}

TEST(RandomGene, FuzzedDrawsSatisfyInvariants) {
  Rng rng(4);
  for (int i = 0; i < 100000; ++i) {
    const int n = 1 + i % 6;
    const Gene g = random_gene(n, rng);
    validate_gene(g, n);
    if (g.is_rotation()) {
      ASSERT_TRUE(*g.angle >= 0.0 && *g.angle < kTwoPi);
      ASSERT_FALSE(g.control);
    } else {
      ASSERT_NE(*g.control, g.target);
      ASSERT_FALSE(g.angle);
    }
  }
}

TEST(RandomIndividual, LengthValidityAndDeterminism) {
  Rng a(42), b(42);
  const Individual x = random_individual(3, 7, a);
  const Individual y = random_individual(3, 7, b);
  EXPECT_EQ(x.size(), 7u);
  EXPECT_EQ(x, y);
  for (const Gene& g : x.genes()) expect_valid(g, 3);
  EXPECT_TRUE(random_individual(3, 0, a).empty());
}

TEST(Stats, HandComputedCases) {
  EXPECT_EQ(stats(Individual(2)), (CircuitStats{0, 0, 0}));
  EXPECT_EQ(stats(Individual(2, {Gene::rotation(GateKind::RX, 0, 1), Gene::rotation(GateKind::RY, 1, 1)})),
            (CircuitStats{2, 0, 1}));
  EXPECT_EQ(stats(Individual(2, {Gene::rotation(GateKind::RX, 0, 1), Gene::cnot(0, 1),
                                 Gene::rotation(GateKind::RZ, 1, 1)})),
            (CircuitStats{3, 1, 3}));
}

TEST(Stats, DepthMatchesLongestChainOracle) {
  Rng rng(5);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 1 + trial % 4;
    const Individual ind = random_individual(n, static_cast<std::size_t>(trial % 6), rng);
    const CircuitStats s = stats(ind);
    EXPECT_EQ(s.depth, oracle::depth_by_longest_chain(ind.genes()));
    EXPECT_LE(s.cnot_count, s.total_gates);
    EXPECT_LE(s.depth, s.total_gates);
  }
}

TEST(Stats, SharedQubitSerialisesEverything) {
  Rng rng(6);
  std::vector<Gene> genes;
  for (int i = 0; i < 12; ++i) {
    genes.push_back(i % 3 == 0 ? Gene::cnot(i % 2 ? 0 : 2, 1) : Gene::rotation(GateKind::RY, 1, 0.1 * i));
  }
  const CircuitStats s = stats(Individual(3, genes));
  EXPECT_EQ(s.depth, s.total_gates);
}

// Copyright 2026 The qunc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qunc/entropy.hpp"

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "support/generators.hpp"

using namespace qunc;
using qunc::testing::Engine;

namespace {

// Frozen from a 30-digit evaluation of 1/2 ln 2 + 1/3 ln 3 + 1/6 ln 6.
constexpr double kHalfThirdSixthEntropy = 1.01140426470735171864;
constexpr double kHalfThirdSixthVolume = 2.74945927399720525277;

}  // namespace

TEST(Shannon, Examples) {
  EXPECT_EQ(shannon(ProbDist({1, 0, 0})).value, 0.0);
  for (std::size_t n : {2u, 5u, 64u}) {
    EXPECT_NEAR(shannon(ProbDist::uniform(n)).value, std::log(static_cast<double>(n)), 1e-14);
  }
  const ProbDist p({0.5, 1.0 / 3, 1.0 / 6});
  const double by_hand = 0.5 * std::log(2.0) + std::log(3.0) / 3 + std::log(6.0) / 6;
  EXPECT_NEAR(shannon(p).value, by_hand, 1e-15);
  EXPECT_NEAR(shannon(p).value, kHalfThirdSixthEntropy, 1e-14);
}

TEST(Shannon, BoundsOnRandomDistributions) {
  Engine rng(21);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + trial % 12;
    const auto p = qunc::testing::random_dist(n, rng);
    const double h = shannon(p).value;
    EXPECT_GE(h, 0.0);
    EXPECT_LE(h, std::log(static_cast<double>(n)) + 1e-14);
  }
  EXPECT_EQ(shannon(ProbDist::point_mass(7, 3)).value, 0.0);
}

TEST(Faddeev, WorkedExample) {
  EXPECT_LE(check_faddeev(ProbDist({0.5, 1.0 / 3, 1.0 / 6})), 1e-12);
  // H(1/2,1/3,1/6) = H(1/2,1/2) + 1/2 H(2/3,1/3), both sides evaluated here by hand.
  const double rhs = std::log(2.0) + 0.5 * (-(2.0 / 3) * std::log(2.0 / 3) - (1.0 / 3) * std::log(1.0 / 3));
  EXPECT_NEAR(kHalfThirdSixthEntropy, rhs, 1e-14);
}

TEST(Faddeev, ZeroSecondPart) {
  EXPECT_LE(check_faddeev(ProbDist({0.2, 0.3, 0.5, 0.0})), 1e-12);
}

TEST(Faddeev, RejectsDegenerateSplit) {
  EXPECT_THROW(check_faddeev(ProbDist({1.0, 0.0, 0.0})), ValidationError);
  EXPECT_THROW(check_faddeev(ProbDist({1.0})), ValidationError);
}

TEST(Faddeev, RandomSplits) {
  Engine rng(31);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 2 + trial % 9;  // coarse size 2..10
    const auto fine = qunc::testing::random_dist(n + 1, rng);
    EXPECT_LE(check_faddeev(fine), 1e-12) << "trial " << trial;
  }
}

TEST(GroupingMixture, WorkedExample) {
  const std::vector<ProbDist> comps{ProbDist({1, 0, 0}), ProbDist({0, 2.0 / 3, 1.0 / 3})};
  EXPECT_LE(check_grouping_mixture(comps, Weights::equal(2)), 1e-12);
}

TEST(GroupingMixture, PointMassesGiveMixingEntropy) {
  Engine rng(41);
  const std::size_t n = 6;
  std::vector<ProbDist> comps;
  for (std::size_t i = 0; i < n; ++i) comps.push_back(ProbDist::point_mass(n, i));
  const Weights w(qunc::testing::random_probs(n, rng));
  EXPECT_LE(check_grouping_mixture(comps, w), 1e-12);
  EXPECT_NEAR(shannon(mix_dists(comps, w)).value, shannon(w.as_dist()).value, 1e-15);
}

TEST(GroupingMixture, SingleComponent) {
  const std::vector<ProbDist> comps{ProbDist({0.1, 0.9})};
  EXPECT_EQ(check_grouping_mixture(comps, Weights({1.0})), 0.0);
}

TEST(GroupingMixture, RejectsOverlap) {
  const std::vector<ProbDist> comps{ProbDist({0.5, 0.5, 0}), ProbDist({0, 0.5, 0.5})};
  EXPECT_THROW(check_grouping_mixture(comps, Weights::equal(2)), OverlapError);
}

TEST(GroupingMixture, RecoversFaddeevForm) {
  Engine rng(51);
  for (int trial = 0; trial < 200; ++trial) {
    const auto fine = qunc::testing::random_dist(3 + trial % 8, rng);
    const auto dec = faddeev_decomposition(fine);
    EXPECT_EQ(mix_dists(dec.components, dec.weights).size(), fine.size());
    for (std::size_t j = 0; j < fine.size(); ++j) {
      EXPECT_NEAR(mix_dists(dec.components, dec.weights)[j], fine[j], 1e-15);
    }
    // Mixture form: H(fine) = sum_i w_i H(c_i) + H(w) with H(point mass) = 0 and
    // w = coarse distribution, which is the Faddeev identity.
    EXPECT_EQ(dec.weights.as_dist(), coarsen_last_pair(fine));
    EXPECT_LE(check_grouping_mixture(dec.components, dec.weights), 1e-12);
    EXPECT_LE(check_faddeev(fine), 1e-12);
  }
}

TEST(VonNeumann, Examples) {
  Engine rng(61);
  EXPECT_NEAR(von_neumann(DensityOperator::from_pure(qunc::testing::random_pure(5, rng))).value, 0.0, 1e-12);
  EXPECT_NEAR(von_neumann(DensityOperator::maximally_mixed(4)).value, std::log(4.0), 1e-14);
  const ProbDist p({0.5, 1.0 / 3, 1.0 / 6});
  EXPECT_NEAR(von_neumann(DensityOperator::diagonal(p)).value, shannon(p).value, 1e-14);
}

TEST(VonNeumann, UnitarilyInvariant) {
  Engine rng(71);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 6;
    const auto rho = qunc::testing::random_density(n, rng);
    const auto u = qunc::testing::random_unitary(n, rng);
    EXPECT_NEAR(von_neumann(conjugate(rho, u)).value, von_neumann(rho).value, 1e-12);
  }
}

TEST(Volume, Examples) {
  EXPECT_EQ(volume_classical(ProbDist::point_mass(4, 2)).value, 1.0);
  EXPECT_NEAR(volume_quantum(DensityOperator::from_pure(PureState::basis_state(3, 1))).value, 1.0, 1e-14);
  EXPECT_NEAR(volume_classical(ProbDist::uniform(5)).value, 5.0, 1e-13);
  EXPECT_NEAR(volume_quantum(DensityOperator::maximally_mixed(6)).value, 6.0, 1e-13);
  EXPECT_NEAR(volume_classical(ProbDist({0.5, 0.5, 0})).value, 2.0, 1e-14);
  EXPECT_NEAR(volume_classical(ProbDist({0.5, 1.0 / 3, 1.0 / 6})).value, kHalfThirdSixthVolume, 1e-13);
}

TEST(Volume, ProductAndSubadditivity) {
  Engine rng(81);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = qunc::testing::random_density(2 + trial % 3, rng);
    const auto b = qunc::testing::random_density(2 + trial % 2, rng);
    EXPECT_NEAR(volume_quantum(tensor(a, b)).value, volume_quantum(a).value * volume_quantum(b).value, 1e-10);

    const std::size_t da = 2 + trial % 3, db = 2;
    const auto joint = qunc::testing::random_density_rank(da * db, 1 + trial % (da * db), rng);
    const double va = volume_quantum(partial_trace_second(joint, da, db)).value;
    const double vb = volume_quantum(partial_trace_first(joint, da, db)).value;
    EXPECT_LE(volume_quantum(joint).value, va * vb + 1e-10);
  }
}

TEST(PartialTrace, OfProductRecoversFactors) {
  Engine rng(91);
  const auto a = qunc::testing::random_density(3, rng);
  const auto b = qunc::testing::random_density(2, rng);
  const auto ab = tensor(a, b);
  EXPECT_LE(max_abs(partial_trace_second(ab, 3, 2).matrix() - a.matrix()), 1e-14);
  EXPECT_LE(max_abs(partial_trace_first(ab, 3, 2).matrix() - b.matrix()), 1e-14);
  EXPECT_THROW(partial_trace_second(ab, 2, 2), DimensionError);
}

TEST(VolumePostulates, FixtureReport) {
  Engine rng(101);
  VolumePostulateFixture fx;

  // (i) three blocks of two outcomes, each component a permutation of the same
  // two-outcome shape, so the volumes agree.
  const auto shape = qunc::testing::random_probs(2, rng);
  std::vector<ProbDist> blocks;
  for (std::size_t b = 0; b < 3; ++b) {
    std::vector<double> p(6, 0.0);
    p[2 * b] = shape[b % 2];
    p[2 * b + 1] = shape[1 - b % 2];
    blocks.emplace_back(std::move(p));
  }
  fx.classical_mixtures.push_back({blocks, Weights::equal(3)});
  fx.classical_mixtures.push_back({blocks, Weights({0.5, 0.3, 0.2})});

  const auto zero = DensityOperator::from_pure(PureState::basis_state(2, 0));
  const auto one = DensityOperator::from_pure(PureState::basis_state(2, 1));
  fx.quantum_mixtures.push_back({{zero, one}, Weights::equal(2)});

  fx.product_pairs.emplace_back(qunc::testing::random_density(2, rng), qunc::testing::random_density(3, rng));
  fx.joint_states.push_back({qunc::testing::random_density(6, rng), 2, 3});

  fx.conjugations.emplace_back(qunc::testing::random_density(4, rng), qunc::testing::random_unitary(4, rng));
  fx.permutations.emplace_back(qunc::testing::random_dist(5, rng), qunc::testing::random_permutation(5, rng));

  const auto report = check_volume_postulates(fx);
  EXPECT_TRUE(report.pass());
  EXPECT_EQ(report.mixture.cases, 3u);
  EXPECT_EQ(report.subsystems.cases, 2u);
  EXPECT_EQ(report.invariance.cases, 2u);
  EXPECT_LE(report.mixture.residual, 1e-10);

  const double v = volume_classical(blocks[0]).value;
  EXPECT_NEAR(volume_classical(mix_dists(blocks, Weights::equal(3))).value, 3 * v, 1e-10);
}

TEST(VolumePostulates, RejectsBadFixtures) {
  VolumePostulateFixture overlapping;
  overlapping.classical_mixtures.push_back(
      {{ProbDist({0.5, 0.5, 0}), ProbDist({0, 0.5, 0.5})}, Weights::equal(2)});
  EXPECT_THROW(check_volume_postulates(overlapping), OverlapError);

  VolumePostulateFixture unequal;
  unequal.classical_mixtures.push_back({{ProbDist({1, 0, 0}), ProbDist({0, 0.5, 0.5})}, Weights::equal(2)});
  EXPECT_THROW(check_volume_postulates(unequal), ValidationError);

  VolumePostulateFixture quantum_overlap;
  quantum_overlap.quantum_mixtures.push_back(
      {{DensityOperator::from_pure(PureState::basis_state(2, 0)), DensityOperator::maximally_mixed(2)},
       Weights::equal(2)});
  EXPECT_THROW(check_volume_postulates(quantum_overlap), ValidationError);
}

TEST(VolumePostulates, DetectsViolation) {
  // A fixture that is wrong on purpose: report must fail, not throw.
  VolumePostulateFixture fx;
  fx.product_pairs.emplace_back(DensityOperator::maximally_mixed(2), DensityOperator::maximally_mixed(2));
  VolumePostulateTolerances tight;
  tight.subsystems = -1.0;
  EXPECT_FALSE(check_volume_postulates(fx, tight).subsystems.pass);
}

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

#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "qunc/core.hpp"

namespace qunc {

/// Entropy in nats (natural logarithm, unit prefactor).
struct EntropyValue {
  double value = 0.0;
  friend auto operator<=>(const EntropyValue&, const EntropyValue&) = default;
};

/// Exponential of an entropy; V = e^S with unit prefactor, so 1 <= V <= n.
struct VolumeValue {
  double value = 1.0;
  friend auto operator<=>(const VolumeValue&, const VolumeValue&) = default;
};

/// Spectral entries below this are treated as exact zeros in the von Neumann sum.
inline constexpr double kSpectrumZeroTol = 1e-12;

/// -sum_i p_i ln p_i, with 0 ln 0 = 0.
EntropyValue shannon(const ProbDist& p);

/// Shannon entropy of the (clamped, renormalized) spectrum of rho.
EntropyValue von_neumann(const DensityOperator& rho);

VolumeValue volume_classical(const ProbDist& p);
VolumeValue volume_quantum(const DensityOperator& rho);

/// |H(p_1..p_{n-1}, q1, q2) - H(p_1..p_n) - p_n H(q1/p_n, q2/p_n)| where the
/// last two entries of `fine` are q1 and q2 and p_n = q1 + q2.
///
/// Throws ValidationError when fine has fewer than two entries or q1 + q2 = 0.
double check_faddeev(const ProbDist& fine);

/// Merges the last two outcomes of `fine` into one.
ProbDist coarsen_last_pair(const ProbDist& fine);

/// |H(sum_i w_i p^(i)) - sum_i w_i H(p^(i)) - H(w)| for pairwise non-overlapping
/// components. Throws OverlapError if any pair shares support.
double check_grouping_mixture(std::span<const ProbDist> components, const Weights& w);

/// Non-overlapping decomposition of (p_1..p_{n-1}, q1, q2): point masses on the
/// first n-1 outcomes plus (0..0, q1/p_n, q2/p_n), weighted by (p_1..p_n).
/// Feeding the result to check_grouping_mixture reproduces the Faddeev form.
struct Decomposition {
  std::vector<ProbDist> components;
  Weights weights;
};
Decomposition faddeev_decomposition(const ProbDist& fine);

/// Reduced state of the first factor of a (dim_a * dim_b) bipartite operator
/// laid out as in tensor().
DensityOperator partial_trace_second(const DensityOperator& rho_ab, std::size_t dim_a,
                                     std::size_t dim_b);
/// Reduced state of the second factor.
DensityOperator partial_trace_first(const DensityOperator& rho_ab, std::size_t dim_a,
                                    std::size_t dim_b);

// ---------------------------------------------------------------------------
// Volume postulates as executable checks.

struct BipartiteState {
  DensityOperator joint;
  std::size_t dim_a;
  std::size_t dim_b;
};

struct ClassicalMixture {
  std::vector<ProbDist> components;  ///< pairwise non-overlapping, equal volume
  Weights weights;
};

struct QuantumMixture {
  std::vector<DensityOperator> components;  ///< pairwise orthogonal supports, equal volume
  Weights weights;
};

struct VolumePostulateFixture {
  // (i) mixtures of non-overlapping, equal-volume ensembles
  std::vector<ClassicalMixture> classical_mixtures;
  std::vector<QuantumMixture> quantum_mixtures;
  // (ii) uncorrelated pairs (equality) and general joint states (inequality)
  std::vector<std::pair<DensityOperator, DensityOperator>> product_pairs;
  std::vector<BipartiteState> joint_states;
  // (iii) unitary conjugations and outcome permutations
  std::vector<std::pair<DensityOperator, Matrix>> conjugations;
  std::vector<std::pair<ProbDist, std::vector<std::size_t>>> permutations;
};

struct PostulateOutcome {
  bool pass = true;
  double residual = 0.0;   ///< worst violation seen
  double tolerance = 0.0;
  std::size_t cases = 0;
};

struct VolumePostulateReport {
  PostulateOutcome mixture;      ///< (i)
  PostulateOutcome subsystems;   ///< (ii)
  PostulateOutcome invariance;   ///< (iii)

  bool pass() const { return mixture.pass && subsystems.pass && invariance.pass; }
};

struct VolumePostulateTolerances {
  double mixture = 1e-10;
  double subsystems = 1e-10;
  double invariance = 1e-12;
};

/// Evaluates postulates (i)-(iii) on the fixture.
///
/// (i) is two-sided (|V(mix) - sum V_i|) for equal weights and one-sided
/// (V(mix) - sum V_i) otherwise. (ii) is two-sided for product pairs and
/// one-sided for joint states. (iii) is two-sided.
///
/// Throws OverlapError / ValidationError when a mixture's components overlap
/// or do not share a common volume.
VolumePostulateReport check_volume_postulates(const VolumePostulateFixture& fixture,
                                              const VolumePostulateTolerances& tol = {});

}  // namespace qunc

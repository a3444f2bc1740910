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
#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "qunc/core.hpp"

namespace qunc {

/// Engine behind every sampler. Bit-identical across runs for a fixed seed.
using Rng = std::mt19937_64;

struct RngSeed {
  std::uint64_t value = 0;
};

/// Deterministic sub-stream `stream` of the master seed. Stream 0 is the
/// single-threaded stream.
Rng make_stream(RngSeed seed, std::uint64_t stream = 0);

/// Haar-random n x n unitary: QR of a complex Ginibre matrix with each column
/// of Q rotated by the phase of the matching diagonal entry of R.
Matrix sample_haar_unitary(std::size_t n, Rng& rng);

/// Uniformly random pure state (normalized complex Gaussian vector).
PureState sample_haar_state(std::size_t n, Rng& rng);

/// Streaming mean/variance (Welford), mergeable across workers.
class RunningStats {
 public:
  void add(double x);
  void merge(const RunningStats& other);

  std::size_t count() const noexcept { return count_; }
  double mean() const noexcept { return mean_; }
  /// Unbiased sample variance.
  double variance() const noexcept;

 private:
  std::size_t count_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

/// Monte Carlo estimate: std_error = sample standard deviation / sqrt(samples).
struct HaarEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t samples = 0;
  std::string quantity_label;

  static HaarEstimate from(const RunningStats& stats, std::string label);
};

struct SamplingOptions {
  std::size_t samples = 100000;
  RngSeed seed{};
  /// 1 = single-threaded and bit-reproducible; >1 partitions the samples over
  /// independently seeded worker streams (statistically equivalent only).
  std::size_t workers = 1;
};

inline constexpr std::size_t kMinAvgInfoSamples = 100;
inline constexpr std::size_t kMinMomentSamples = 10000;

/// Estimates the Haar average of I(p) with p the outcome distribution of rho
/// measured in the rotated basis U|a_j>.
HaarEstimate estimate_avg_info(const DensityOperator& rho, const ObservableBasis& basis,
                               const SamplingOptions& opts);

/// Floor added in quadrature to the Monte Carlo error when forming z-scores,
/// so that identities that hold exactly (zero sample variance) compare against
/// rounding rather than against zero.
inline constexpr double kZScoreFloor = 1e-12;

double z_score(double observed, double expected, double std_error);

struct HaarAverageReport {
  double lhs = 0.0;        ///< I(rho)
  double rhs = 0.0;        ///< (n+1) * estimate
  double rhs_std_error = 0.0;
  double z_score = 0.0;
  bool pass = false;
  HaarEstimate estimate;
};

inline constexpr double kZThreshold = 3.0;

/// Compares I(rho) with (n+1) times the Haar average of I over observables,
/// starting from the computational basis. Passes iff z <= kZThreshold.
HaarAverageReport verify_haar_average(const DensityOperator& rho, const SamplingOptions& opts);

/// Haar average of |<a|b>|^4 over pure states |a> for a fixed |b> (default
/// |0>). Target 2 / (n (n+1)).
HaarEstimate estimate_fourth_moment(std::size_t n, const SamplingOptions& opts,
                                    const std::optional<PureState>& probe = std::nullopt);

/// Haar average of n <a|rho|a>^2 - 1/n over pure states |a>.
HaarEstimate estimate_state_average(const DensityOperator& rho, const SamplingOptions& opts);

/// Coefficients of  n * avg <a|rho|a>^2 - 1/n = alpha tr(rho^2) + beta,
/// determined from a pure probe |0><0| and the maximally mixed probe.
struct AlphaBeta {
  double alpha = 0.0;
  double beta = 0.0;
  std::size_t n = 0;
  double alpha_std_error = 0.0;
  double beta_std_error = 0.0;
  /// Error of beta + alpha/n, i.e. of the maximally mixed probe's average.
  double relation_std_error = 0.0;
  HaarEstimate pure_probe;
  HaarEstimate mixed_probe;
};

AlphaBeta estimate_alpha_beta(std::size_t n, const SamplingOptions& opts);

}  // namespace qunc

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

#include "qunc/haar.hpp"

#include <cmath>
#include <sstream>
#include <thread>
#include <vector>

namespace qunc {

namespace {

// Offset of the independent stream used for the second probe in
// estimate_alpha_beta.
constexpr std::uint64_t kSecondProbeSeedOffset = 0x9E3779B97F4A7C15ULL;

void require_sampling_dim(std::size_t n) {
  if (n < kMinDim || n > kMaxDim) {
    throw DimensionError("sampling dimension " + std::to_string(n) + " outside [" +
                         std::to_string(kMinDim) + ", " + std::to_string(kMaxDim) + "]");
  }
}

void require_samples(std::size_t samples, std::size_t minimum, const char* what) {
  if (samples < minimum) {
    std::ostringstream os;
    os << what << ": " << samples << " samples requested, at least " << minimum << " required";
    throw ValidationError(os.str());
  }
}

Vector gaussian_vector(std::size_t n, Rng& rng) {
  std::normal_distribution<double> normal;
  Vector v(static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double re = normal(rng);
    const double im = normal(rng);
    v(i) = Complex(re, im);
  }
  return v;
}

// Runs `sample(rng)` `samples` times, either on stream 0 or split across
// worker streams 1..workers, and merges the statistics.
template <typename SampleFn>
RunningStats run_sampling(const SamplingOptions& opts, SampleFn sample) {
  const std::size_t workers = std::max<std::size_t>(opts.workers, 1);
  if (workers == 1) {
    Rng rng = make_stream(opts.seed, 0);
    RunningStats stats;
    for (std::size_t s = 0; s < opts.samples; ++s) stats.add(sample(rng));
    return stats;
  }

  std::vector<RunningStats> partial(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t count = opts.samples / workers + (w < opts.samples % workers ? 1 : 0);
    threads.emplace_back([&, w, count] {
      Rng rng = make_stream(opts.seed, w + 1);
      for (std::size_t s = 0; s < count; ++s) partial[w].add(sample(rng));
    });
  }
  for (auto& t : threads) t.join();
  RunningStats total;
  for (const auto& p : partial) total.merge(p);
  return total;
}

}  // namespace

Rng make_stream(RngSeed seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed.value), static_cast<std::uint32_t>(seed.value >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return Rng(seq);
}

Matrix sample_haar_unitary(std::size_t n, Rng& rng) {
  require_sampling_dim(n);
  const auto dim = static_cast<Eigen::Index>(n);
  Matrix g(dim, dim);
  std::normal_distribution<double> normal;
  for (Eigen::Index j = 0; j < dim; ++j) {
    for (Eigen::Index i = 0; i < dim; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  }
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(dim, dim);
  const Matrix& r = qr.matrixQR();
  for (Eigen::Index j = 0; j < dim; ++j) {
    const Complex d = r(j, j);
    const double mag = std::abs(d);
    if (mag > 0.0) q.col(j) *= d / mag;
  }
  return q;
}

PureState sample_haar_state(std::size_t n, Rng& rng) {
  require_sampling_dim(n);
  return PureState(gaussian_vector(n, rng));
}

void RunningStats::add(double x) {
  ++count_;
  const double delta = x - mean_;
  mean_ += delta / static_cast<double>(count_);
  m2_ += delta * (x - mean_);
}

void RunningStats::merge(const RunningStats& other) {
  if (other.count_ == 0) return;
  if (count_ == 0) {
    *this = other;
    return;
  }
  const double total = static_cast<double>(count_ + other.count_);
  const double delta = other.mean_ - mean_;
  mean_ += delta * static_cast<double>(other.count_) / total;
  m2_ += other.m2_ + delta * delta * static_cast<double>(count_) * static_cast<double>(other.count_) / total;
  count_ += other.count_;
}

double RunningStats::variance() const noexcept {
  return count_ < 2 ? 0.0 : m2_ / static_cast<double>(count_ - 1);
}

HaarEstimate HaarEstimate::from(const RunningStats& stats, std::string label) {
  HaarEstimate e;
  e.mean = stats.mean();
  e.samples = stats.count();
  e.std_error = e.samples > 0 ? std::sqrt(stats.variance() / static_cast<double>(e.samples)) : 0.0;
  e.quantity_label = std::move(label);
  return e;
}

HaarEstimate estimate_avg_info(const DensityOperator& rho, const ObservableBasis& basis,
                               const SamplingOptions& opts) {
  if (rho.dim() != basis.dim()) throw DimensionError("estimate_avg_info: dimension mismatch");
  require_samples(opts.samples, kMinAvgInfoSamples, "estimate_avg_info");
  const std::size_t n = rho.dim();
  const double uniform = 1.0 / static_cast<double>(n);
  const Matrix& a = basis.unitary();
  const Matrix& m = rho.matrix();

  const auto stats = run_sampling(opts, [&](Rng& rng) {
    const Matrix w = sample_haar_unitary(n, rng) * a;
    const Matrix t = m * w;
    double info = 0.0;
    for (Eigen::Index j = 0; j < w.cols(); ++j) {
      const double p = w.col(j).dot(t.col(j)).real();
      info += (p - uniform) * (p - uniform);
    }
    return info;
  });
  return HaarEstimate::from(stats, "avg_info");
}

double z_score(double observed, double expected, double std_error) {
  return std::abs(observed - expected) / std::hypot(std_error, kZScoreFloor);
}

HaarAverageReport verify_haar_average(const DensityOperator& rho, const SamplingOptions& opts) {
  const auto scale = static_cast<double>(rho.dim() + 1);
  HaarAverageReport r;
  r.estimate = estimate_avg_info(rho, ObservableBasis::computational(rho.dim()), opts);
  r.lhs = rho.matrix().squaredNorm() - 1.0 / static_cast<double>(rho.dim());
  r.rhs = scale * r.estimate.mean;
  r.rhs_std_error = scale * r.estimate.std_error;
  r.z_score = z_score(r.lhs, r.rhs, r.rhs_std_error);
  r.pass = r.z_score <= kZThreshold;
  return r;
}

HaarEstimate estimate_fourth_moment(std::size_t n, const SamplingOptions& opts,
                                    const std::optional<PureState>& probe) {
  require_sampling_dim(n);
  require_samples(opts.samples, kMinMomentSamples, "estimate_fourth_moment");
  const PureState b = probe.value_or(PureState::basis_state(n, 0));
  if (b.dim() != n) throw DimensionError("estimate_fourth_moment: probe dimension mismatch");

  const auto stats = run_sampling(opts, [&](Rng& rng) {
    const Vector a = gaussian_vector(n, rng).normalized();
    const double y = std::norm(a.dot(b.amplitudes()));
    return y * y;
  });
  return HaarEstimate::from(stats, "fourth_moment");
}

HaarEstimate estimate_state_average(const DensityOperator& rho, const SamplingOptions& opts) {
  require_samples(opts.samples, kMinMomentSamples, "estimate_state_average");
  const std::size_t n = rho.dim();
  const auto nd = static_cast<double>(n);
  const Matrix& m = rho.matrix();

  const auto stats = run_sampling(opts, [&](Rng& rng) {
    const Vector a = gaussian_vector(n, rng).normalized();
    const double e = a.dot(m * a).real();
    return nd * e * e - 1.0 / nd;
  });
  return HaarEstimate::from(stats, "state_average");
}

AlphaBeta estimate_alpha_beta(std::size_t n, const SamplingOptions& opts) {
  require_sampling_dim(n);
  const auto nd = static_cast<double>(n);

  AlphaBeta ab;
  ab.n = n;
  ab.pure_probe = estimate_state_average(DensityOperator::from_pure(PureState::basis_state(n, 0)), opts);
  SamplingOptions mixed_opts = opts;
  mixed_opts.seed.value += kSecondProbeSeedOffset;
  ab.mixed_probe = estimate_state_average(DensityOperator::maximally_mixed(n), mixed_opts);

  // Pure probe: tr(rho^2) = 1; maximally mixed probe: tr(rho^2) = 1/n.
  const double gp = ab.pure_probe.mean;
  const double gm = ab.mixed_probe.mean;
  const double sp = ab.pure_probe.std_error;
  const double sm = ab.mixed_probe.std_error;
  ab.alpha = (gp - gm) / (1.0 - 1.0 / nd);
  ab.beta = gm - ab.alpha / nd;
  ab.alpha_std_error = std::hypot(sp, sm) * nd / (nd - 1.0);
  ab.beta_std_error = std::hypot(sm * nd / (nd - 1.0), sp / (nd - 1.0));
  ab.relation_std_error = sm;
  return ab;
}

}  // namespace qunc

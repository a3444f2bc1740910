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

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qunc {

namespace {

double entropy_sum(std::span<const double> p) {
  double h = 0.0;
  for (double x : p) {
    if (x > 0.0) h -= x * std::log(x);
  }
  return h;
}

bool is_equal_weighting(const Weights& w) {
  const double target = 1.0 / static_cast<double>(w.size());
  return std::ranges::all_of(w.values(), [&](double x) { return std::abs(x - target) <= 1e-12; });
}

template <typename T, typename VolumeFn, typename OverlapFn>
void check_mixture(std::span<const T> components, const Weights& w, double mixed_volume,
                   VolumeFn&& volume, OverlapFn&& disjoint, double tol, PostulateOutcome& out) {
  if (components.size() != w.size()) throw DimensionError("volume mixture: weight count mismatch");
  double sum = 0.0;
  const double v0 = volume(components.front());
  for (std::size_t i = 0; i < components.size(); ++i) {
    const double vi = volume(components[i]);
    if (std::abs(vi - v0) > kValidationTol) {
      std::ostringstream os;
      os << "volume mixture: component " << i << " has volume " << vi << ", expected " << v0;
      throw ValidationError(os.str());
    }
    for (std::size_t k = i + 1; k < components.size(); ++k) {
      if (!disjoint(components[i], components[k])) {
        throw OverlapError("volume mixture: components " + std::to_string(i) + " and " +
                           std::to_string(k) + " overlap");
      }
    }
    sum += vi;
  }
  const double diff = mixed_volume - sum;
  const double violation = is_equal_weighting(w) ? std::abs(diff) : std::max(diff, 0.0);
  out.residual = std::max(out.residual, violation);
  out.pass = out.pass && violation <= tol;
  ++out.cases;
}

void record(PostulateOutcome& out, double violation, double tol) {
  out.residual = std::max(out.residual, violation);
  out.pass = out.pass && violation <= tol;
  ++out.cases;
}

}  // namespace

EntropyValue shannon(const ProbDist& p) { return {entropy_sum(p.probs())}; }

EntropyValue von_neumann(const DensityOperator& rho) {
  std::vector<double> spectrum(rho.eigenvalues().begin(), rho.eigenvalues().end());
  for (double& x : spectrum) {
    if (x < kSpectrumZeroTol) x = 0.0;
  }
  return shannon(ProbDist(std::move(spectrum)));
}

VolumeValue volume_classical(const ProbDist& p) { return {std::exp(shannon(p).value)}; }

VolumeValue volume_quantum(const DensityOperator& rho) {
  return {std::exp(von_neumann(rho).value)};
}

ProbDist coarsen_last_pair(const ProbDist& fine) {
  if (fine.size() < 2) throw ValidationError("coarsen: need at least two outcomes");
  std::vector<double> coarse(fine.probs().begin(), fine.probs().end() - 1);
  coarse.back() += fine[fine.size() - 1];
  return ProbDist(std::move(coarse));
}

double check_faddeev(const ProbDist& fine) {
  if (fine.size() < 2) throw ValidationError("faddeev: need at least two outcomes");
  const double q1 = fine[fine.size() - 2];
  const double q2 = fine[fine.size() - 1];
  const double pn = q1 + q2;
  if (pn <= 0.0) throw ValidationError("faddeev: split outcome has zero probability");

  const double lhs = shannon(fine).value;
  const double rhs = shannon(coarsen_last_pair(fine)).value +
                     pn * shannon(ProbDist({q1 / pn, q2 / pn})).value;
  return std::abs(lhs - rhs);
}

double check_grouping_mixture(std::span<const ProbDist> components, const Weights& w) {
  if (components.empty()) throw DimensionError("grouping: no components");
  for (std::size_t i = 0; i < components.size(); ++i) {
    for (std::size_t k = i + 1; k < components.size(); ++k) {
      if (!nonoverlapping(components[i], components[k])) {
        throw OverlapError("grouping: components " + std::to_string(i) + " and " +
                           std::to_string(k) + " overlap");
      }
    }
  }
  const ProbDist mixed = mix_dists(components, w);
  double average = 0.0;
  for (std::size_t i = 0; i < components.size(); ++i) average += w[i] * shannon(components[i]).value;
  return std::abs(shannon(mixed).value - average - shannon(w.as_dist()).value);
}

Decomposition faddeev_decomposition(const ProbDist& fine) {
  if (fine.size() < 2) throw ValidationError("faddeev: need at least two outcomes");
  const std::size_t size = fine.size();
  const double q1 = fine[size - 2];
  const double q2 = fine[size - 1];
  const double pn = q1 + q2;
  if (pn <= 0.0) throw ValidationError("faddeev: split outcome has zero probability");

  std::vector<ProbDist> components;
  std::vector<double> weights;
  for (std::size_t i = 0; i + 2 < size; ++i) {
    components.push_back(ProbDist::point_mass(size, i));
    weights.push_back(fine[i]);
  }
  std::vector<double> tail(size, 0.0);
  tail[size - 2] = q1 / pn;
  tail[size - 1] = q2 / pn;
  components.emplace_back(std::move(tail));
  weights.push_back(pn);
  return {std::move(components), Weights(std::move(weights))};
}

DensityOperator partial_trace_second(const DensityOperator& rho_ab, std::size_t dim_a,
                                     std::size_t dim_b) {
  if (dim_a * dim_b != rho_ab.dim()) throw DimensionError("partial trace: factor dimensions do not match");
  const auto na = static_cast<Eigen::Index>(dim_a);
  const auto nb = static_cast<Eigen::Index>(dim_b);
  Matrix out = Matrix::Zero(na, na);
  for (Eigen::Index i = 0; i < na; ++i) {
    for (Eigen::Index j = 0; j < na; ++j) {
      out(i, j) = rho_ab.matrix().block(i * nb, j * nb, nb, nb).trace();
    }
  }
  return DensityOperator(std::move(out));
}

DensityOperator partial_trace_first(const DensityOperator& rho_ab, std::size_t dim_a,
                                    std::size_t dim_b) {
  if (dim_a * dim_b != rho_ab.dim()) throw DimensionError("partial trace: factor dimensions do not match");
  const auto na = static_cast<Eigen::Index>(dim_a);
  const auto nb = static_cast<Eigen::Index>(dim_b);
  Matrix out = Matrix::Zero(nb, nb);
  for (Eigen::Index i = 0; i < na; ++i) out += rho_ab.matrix().block(i * nb, i * nb, nb, nb);
  return DensityOperator(std::move(out));
}

VolumePostulateReport check_volume_postulates(const VolumePostulateFixture& fixture,
                                              const VolumePostulateTolerances& tol) {
  VolumePostulateReport report;
  report.mixture.tolerance = tol.mixture;
  report.subsystems.tolerance = tol.subsystems;
  report.invariance.tolerance = tol.invariance;

  for (const auto& mix : fixture.classical_mixtures) {
    if (mix.components.empty()) throw DimensionError("volume mixture: no components");
    const double mixed = volume_classical(mix_dists(mix.components, mix.weights)).value;
    check_mixture<ProbDist>(
        mix.components, mix.weights, mixed, [](const ProbDist& p) { return volume_classical(p).value; },
        [](const ProbDist& a, const ProbDist& b) { return nonoverlapping(a, b); }, tol.mixture,
        report.mixture);
  }
  for (const auto& mix : fixture.quantum_mixtures) {
    if (mix.components.empty()) throw DimensionError("volume mixture: no components");
    const double mixed = volume_quantum(mix_states(mix.components, mix.weights)).value;
    check_mixture<DensityOperator>(
        mix.components, mix.weights, mixed,
        [](const DensityOperator& r) { return volume_quantum(r).value; },
        [](const DensityOperator& a, const DensityOperator& b) { return quantum_nonoverlapping(a, b); },
        tol.mixture, report.mixture);
  }

  for (const auto& [a, b] : fixture.product_pairs) {
    const double joint = volume_quantum(tensor(a, b)).value;
    record(report.subsystems, std::abs(joint - volume_quantum(a).value * volume_quantum(b).value),
           tol.subsystems);
  }
  for (const auto& s : fixture.joint_states) {
    const double joint = volume_quantum(s.joint).value;
    const double va = volume_quantum(partial_trace_second(s.joint, s.dim_a, s.dim_b)).value;
    const double vb = volume_quantum(partial_trace_first(s.joint, s.dim_a, s.dim_b)).value;
    record(report.subsystems, std::max(joint - va * vb, 0.0), tol.subsystems);
  }

  for (const auto& [rho, u] : fixture.conjugations) {
    record(report.invariance,
           std::abs(volume_quantum(conjugate(rho, u)).value - volume_quantum(rho).value),
           tol.invariance);
  }
  for (const auto& [p, perm] : fixture.permutations) {
    record(report.invariance,
           std::abs(volume_classical(permute(p, perm)).value - volume_classical(p).value),
           tol.invariance);
  }
  return report;
}

}  // namespace qunc

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

#include "qunc/totalinfo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace qunc {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    std::ostringstream os;
    os << what << ": dimension mismatch (" << a << " vs " << b << ")";
    throw DimensionError(os.str());
  }
}

ObservableBasis pauli_basis(char axis) {
  const double s = 1.0 / std::numbers::sqrt2;
  const Complex i{0.0, 1.0};
  Matrix u(2, 2);
  switch (axis) {
    case 'Z':
      u << 1.0, 0.0, 0.0, 1.0;
      break;
    case 'X':
      u << s, s, s, -s;
      break;
    default:  // Y
      u << s, s, s * i, -s * i;
      break;
  }
  return ObservableBasis(std::move(u), std::string(1, axis));
}

}  // namespace

InfoValue info_classical(const ProbDist& p) {
  double sq = 0.0;
  for (double x : p.probs()) sq += x * x;
  return {sq - 1.0 / static_cast<double>(p.size())};
}

InfoValue info_classical_distance(const ProbDist& p) {
  const double u = 1.0 / static_cast<double>(p.size());
  double sq = 0.0;
  for (double x : p.probs()) sq += (x - u) * (x - u);
  return {sq};
}

double purity(const DensityOperator& rho) { return rho.matrix().squaredNorm(); }

InfoValue info_quantum(const DensityOperator& rho) {
  return {purity(rho) - 1.0 / static_cast<double>(rho.dim())};
}

IprValue ipr_classical(const ProbDist& p) {
  double sq = 0.0;
  for (double x : p.probs()) sq += x * x;
  return {1.0 / sq};
}

IprValue ipr_quantum(const DensityOperator& rho) { return {1.0 / purity(rho)}; }

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

MubSet::MubSet(std::size_t dim, std::vector<ObservableBasis> bases)
    : dim_(dim), bases_(std::move(bases)) {
  if (bases_.size() != dim_ + 1) {
    throw ValidationError("MUB set for dimension " + std::to_string(dim_) + " needs " +
                          std::to_string(dim_ + 1) + " bases, got " + std::to_string(bases_.size()));
  }
  for (const auto& b : bases_) require_same_dim(b.dim(), dim_, "MUB set");
  const double dev = max_overlap_deviation();
  if (dev > kValidationTol) {
    std::ostringstream os;
    os << "bases are not mutually unbiased (max | |<a|b>|^2 - 1/n | = " << dev << ")";
    throw ValidationError(os.str());
  }
}

double MubSet::max_overlap_deviation() const {
  const double target = 1.0 / static_cast<double>(dim_);
  double dev = 0.0;
  for (std::size_t k = 0; k < bases_.size(); ++k) {
    for (std::size_t l = k + 1; l < bases_.size(); ++l) {
      const Matrix g = bases_[k].unitary().adjoint() * bases_[l].unitary();
      dev = std::max(dev, (g.cwiseAbs2().array() - target).abs().maxCoeff());
    }
  }
  return dev;
}

MubSet build_mub(std::size_t n) {
  if (!is_prime(n) || n > kMaxMubDim) throw UnsupportedDimension(n);
  if (n == 2) return MubSet(2, {pauli_basis('Z'), pauli_basis('X'), pauli_basis('Y')});

  const auto dim = static_cast<Eigen::Index>(n);
  const double amp = 1.0 / std::sqrt(static_cast<double>(n));
  const double step = 2.0 * std::numbers::pi / static_cast<double>(n);

  std::vector<ObservableBasis> bases;
  bases.reserve(n + 1);
  bases.push_back(ObservableBasis::computational(n));
  for (std::size_t k = 0; k < n; ++k) {
    Matrix u(dim, dim);
    for (std::size_t m = 0; m < n; ++m) {
      for (std::size_t j = 0; j < n; ++j) {
        // Reduce the exponent mod n before taking the phase.
        const std::size_t r = (k * j % n * j + m * j) % n;
        u(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(m)) =
            std::polar(amp, step * static_cast<double>(r));
      }
    }
    bases.emplace_back(std::move(u), "quadratic-" + std::to_string(k));
  }
  return MubSet(n, std::move(bases));
}

double check_reconstruction(const DensityOperator& rho, const MubSet& mubs) {
  require_same_dim(rho.dim(), mubs.dim(), "reconstruction");
  const auto n = static_cast<Eigen::Index>(rho.dim());
  Matrix sum = -Matrix::Identity(n, n);
  for (const auto& basis : mubs.bases()) sum += dephase(rho, basis).matrix();
  return max_abs(sum - rho.matrix());
}

AdditivityCheck check_additivity(const DensityOperator& rho, const MubSet& mubs) {
  require_same_dim(rho.dim(), mubs.dim(), "additivity");
  AdditivityCheck out;
  for (const auto& basis : mubs.bases()) {
    const double i = info_classical(measure(rho, basis)).value;
    out.per_basis.push_back(i);
    out.lhs += i;
  }
  out.rhs = info_quantum(rho).value;
  out.residual = std::abs(out.lhs - out.rhs);
  return out;
}

double check_ipr_relation(const DensityOperator& rho, const MubSet& mubs) {
  require_same_dim(rho.dim(), mubs.dim(), "ipr relation");
  double sum = 0.0;
  for (const auto& basis : mubs.bases()) sum += 1.0 / ipr_classical(measure(rho, basis)).value;
  return std::abs(1.0 / ipr_quantum(rho).value - sum + 1.0);
}

}  // namespace qunc

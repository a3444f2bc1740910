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

#include "qunc/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace qunc {

UnsupportedDimension::UnsupportedDimension(std::size_t dim)
    : Error("no complete set of mutually unbiased bases is constructed for dimension " +
            std::to_string(dim) +
            ": complete sets are only known to exist for Hilbert space dimensions that are "
            "prime or powers of 2, and only prime dimensions are implemented"),
      dim_(dim) {}

namespace {

void require_dim_range(std::size_t n, const char* what) {
  if (n < kMinDim || n > kMaxDim) {
    std::ostringstream os;
    os << what << ": dimension " << n << " outside supported range [" << kMinDim << ", "
       << kMaxDim << "]";
    throw DimensionError(os.str());
  }
}

void require_square(const Matrix& m, const char* what) {
  if (m.rows() != m.cols()) {
    std::ostringstream os;
    os << what << ": matrix is " << m.rows() << "x" << m.cols() << ", expected square";
    throw DimensionError(os.str());
  }
  require_dim_range(static_cast<std::size_t>(m.rows()), what);
  if (!m.allFinite()) throw ValidationError(std::string(what) + ": non-finite entry");
}

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    std::ostringstream os;
    os << what << ": dimension mismatch (" << a << " vs " << b << ")";
    throw DimensionError(os.str());
  }
}

// Modified Gram-Schmidt on the columns, in place.
void orthonormalize_columns(Matrix& u) {
  for (Eigen::Index j = 0; j < u.cols(); ++j) {
    for (Eigen::Index k = 0; k < j; ++k) {
      const Complex c = u.col(k).dot(u.col(j));
      u.col(j) -= c * u.col(k);
    }
    u.col(j) /= u.col(j).norm();
  }
}

}  // namespace

double max_abs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double unitarity_residual(const Matrix& u) {
  const Matrix id = Matrix::Identity(u.rows(), u.cols());
  return max_abs(u * u.adjoint() - id);
}

std::vector<double> hermitian_eigenvalues(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw ValidationError("eigendecomposition did not converge");
  std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(ev.begin(), ev.end(), std::greater<>());
  return ev;
}

// ---------------------------------------------------------------------------
// ProbDist

ProbDist::ProbDist(std::vector<double> probs) : probs_(std::move(probs)) {
  if (probs_.empty()) throw ValidationError("distribution has no outcomes");
  double sum = 0.0;
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    const double p = probs_[i];
    if (!std::isfinite(p)) throw ValidationError("distribution entry " + std::to_string(i) + " is not finite");
    if (p < -kValidationTol) {
      std::ostringstream os;
      os.precision(17);
      os << "distribution entry " << i << " is negative (" << p << ")";
      throw ValidationError(os.str());
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > kValidationTol) {
    std::ostringstream os;
    os.precision(17);
    os << "distribution sums to " << sum << ", expected 1";
    throw ValidationError(os.str());
  }
  sum = 0.0;
  for (double& p : probs_) {
    p = std::max(p, 0.0);
    sum += p;
  }
  for (double& p : probs_) p /= sum;
}

ProbDist ProbDist::uniform(std::size_t n) {
  if (n == 0) throw ValidationError("distribution has no outcomes");
  return ProbDist(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

ProbDist ProbDist::point_mass(std::size_t n, std::size_t index) {
  if (index >= n) throw DimensionError("point mass index out of range");
  std::vector<double> p(n, 0.0);
  p[index] = 1.0;
  return ProbDist(std::move(p));
}

// ---------------------------------------------------------------------------
// PureState

PureState::PureState(Vector amplitudes) : amplitudes_(std::move(amplitudes)) {
  require_dim_range(dim(), "pure state");
  if (!amplitudes_.allFinite()) throw ValidationError("pure state: non-finite amplitude");
  const double norm = amplitudes_.norm();
  if (norm == 0.0) throw ValidationError("pure state: zero vector");
  amplitudes_ /= norm;
}

PureState PureState::basis_state(std::size_t n, std::size_t index) {
  if (index >= n) throw DimensionError("basis state index out of range");
  Vector v = Vector::Zero(static_cast<Eigen::Index>(n));
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return PureState(std::move(v));
}

// ---------------------------------------------------------------------------
// DensityOperator

DensityOperator::DensityOperator(Matrix m) {
  require_square(m, "density operator");
  const double herm = max_abs(m - m.adjoint());
  if (herm > kValidationTol) {
    std::ostringstream os;
    os << "density operator is not Hermitian (max |M - M^dagger| = " << herm << ")";
    throw ValidationError(os.str());
  }
  const Complex tr = m.trace();
  if (std::abs(tr.real() - 1.0) > kValidationTol || std::abs(tr.imag()) > kValidationTol) {
    std::ostringstream os;
    os.precision(17);
    os << "density operator trace is " << tr.real() << ", expected 1";
    throw ValidationError(os.str());
  }
  Matrix h = 0.5 * (m + m.adjoint());

  Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw ValidationError("eigendecomposition did not converge");
  const double min_ev = es.eigenvalues().minCoeff();
  if (min_ev < -kValidationTol) {
    std::ostringstream os;
    os << "density operator has negative eigenvalue " << min_ev;
    throw ValidationError(os.str());
  }

  Eigen::VectorXd ev = es.eigenvalues();
  if (min_ev < 0.0) {
    Eigen::SelfAdjointEigenSolver<Matrix> full(h);
    ev = full.eigenvalues().cwiseMax(0.0);
    h = full.eigenvectors() * ev.cast<Complex>().asDiagonal() * full.eigenvectors().adjoint();
  }
  const double trace = h.trace().real();
  h /= trace;
  ev /= ev.sum();
  // Exact Hermiticity after scaling.
  matrix_ = 0.5 * (h + h.adjoint());

  eigenvalues_.assign(ev.data(), ev.data() + ev.size());
  std::sort(eigenvalues_.begin(), eigenvalues_.end(), std::greater<>());
}

DensityOperator DensityOperator::maximally_mixed(std::size_t n) {
  require_dim_range(n, "density operator");
  const auto dim = static_cast<Eigen::Index>(n);
  return DensityOperator(Matrix::Identity(dim, dim) / static_cast<double>(n));
}

DensityOperator DensityOperator::from_pure(const PureState& psi) {
  return DensityOperator(psi.amplitudes() * psi.amplitudes().adjoint());
}

DensityOperator DensityOperator::diagonal(const ProbDist& p) {
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(p.size()), static_cast<Eigen::Index>(p.size()));
  for (std::size_t i = 0; i < p.size(); ++i) {
    m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = p[i];
  }
  return DensityOperator(std::move(m));
}

// ---------------------------------------------------------------------------
// ObservableBasis

ObservableBasis::ObservableBasis(Matrix unitary, std::optional<std::string> label)
    : unitary_(std::move(unitary)), label_(std::move(label)) {
  require_square(unitary_, "observable basis");
  const Matrix id = Matrix::Identity(unitary_.rows(), unitary_.cols());
  const double res = max_abs(unitary_.adjoint() * unitary_ - id);
  if (res > kValidationTol) {
    std::ostringstream os;
    os << "observable basis is not orthonormal (max |U^dagger U - 1| = " << res << ")";
    throw ValidationError(os.str());
  }
  orthonormalize_columns(unitary_);
}

ObservableBasis ObservableBasis::computational(std::size_t n) {
  require_dim_range(n, "observable basis");
  const auto dim = static_cast<Eigen::Index>(n);
  return ObservableBasis(Matrix::Identity(dim, dim), "computational");
}

// ---------------------------------------------------------------------------
// Operations

ProbDist measure(const DensityOperator& rho, const ObservableBasis& basis) {
  require_same_dim(rho.dim(), basis.dim(), "measure");
  const Matrix& u = basis.unitary();
  std::vector<double> p(rho.dim());
  for (std::size_t j = 0; j < p.size(); ++j) {
    const auto col = u.col(static_cast<Eigen::Index>(j));
    p[j] = col.dot(rho.matrix() * col).real();
  }
  return ProbDist(std::move(p));
}

DensityOperator dephase(const DensityOperator& rho, const ObservableBasis& basis) {
  const ProbDist p = measure(rho, basis);
  Eigen::VectorXd diag(static_cast<Eigen::Index>(p.size()));
  for (std::size_t j = 0; j < p.size(); ++j) diag(static_cast<Eigen::Index>(j)) = p[j];
  const Matrix& u = basis.unitary();
  return DensityOperator(u * diag.cast<Complex>().asDiagonal() * u.adjoint());
}

bool nonoverlapping(const ProbDist& a, const ProbDist& b, double tol) {
  require_same_dim(a.size(), b.size(), "nonoverlapping");
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] > tol && b[j] > tol) return false;
  }
  return true;
}

bool quantum_nonoverlapping(const DensityOperator& a, const DensityOperator& b, double tol) {
  require_same_dim(a.dim(), b.dim(), "quantum_nonoverlapping");
  const Matrix prod = a.matrix() * b.matrix();
  Eigen::JacobiSVD<Matrix> svd(prod);
  return svd.singularValues()(0) <= tol;
}

ProbDist mix_dists(std::span<const ProbDist> components, const Weights& w) {
  if (components.empty()) throw DimensionError("mix_dists: no components");
  require_same_dim(components.size(), w.size(), "mix_dists weights");
  const std::size_t n = components.front().size();
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < components.size(); ++i) {
    require_same_dim(components[i].size(), n, "mix_dists components");
    for (std::size_t j = 0; j < n; ++j) out[j] += w[i] * components[i][j];
  }
  return ProbDist(std::move(out));
}

DensityOperator mix_states(std::span<const DensityOperator> components, const Weights& w) {
  if (components.empty()) throw DimensionError("mix_states: no components");
  require_same_dim(components.size(), w.size(), "mix_states weights");
  const auto n = static_cast<Eigen::Index>(components.front().dim());
  Matrix out = Matrix::Zero(n, n);
  for (std::size_t i = 0; i < components.size(); ++i) {
    require_same_dim(components[i].dim(), static_cast<std::size_t>(n), "mix_states components");
    out += w[i] * components[i].matrix();
  }
  return DensityOperator(std::move(out));
}

DensityOperator tensor(const DensityOperator& a, const DensityOperator& b) {
  const Matrix& ma = a.matrix();
  const Matrix& mb = b.matrix();
  const Eigen::Index na = ma.rows();
  const Eigen::Index nb = mb.rows();
  if (static_cast<std::size_t>(na * nb) > kMaxDim) {
    throw DimensionError("tensor: product dimension " + std::to_string(na * nb) +
                         " exceeds " + std::to_string(kMaxDim));
  }
  Matrix out(na * nb, na * nb);
  for (Eigen::Index i = 0; i < na; ++i) {
    for (Eigen::Index j = 0; j < na; ++j) {
      out.block(i * nb, j * nb, nb, nb) = ma(i, j) * mb;
    }
  }
  return DensityOperator(std::move(out));
}

DensityOperator conjugate(const DensityOperator& rho, const Matrix& u) {
  require_same_dim(rho.dim(), static_cast<std::size_t>(u.rows()), "conjugate");
  require_same_dim(static_cast<std::size_t>(u.rows()), static_cast<std::size_t>(u.cols()), "conjugate");
  if (unitarity_residual(u) > kValidationTol) throw ValidationError("conjugate: matrix is not unitary");
  return DensityOperator(u * rho.matrix() * u.adjoint());
}

ProbDist permute(const ProbDist& p, std::span<const std::size_t> perm) {
  require_same_dim(p.size(), perm.size(), "permute");
  std::vector<bool> seen(perm.size(), false);
  std::vector<double> out(p.size(), 0.0);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (perm[i] >= perm.size() || seen[perm[i]]) throw ValidationError("permute: not a permutation");
    seen[perm[i]] = true;
    out[perm[i]] = p[i];
  }
  return ProbDist(std::move(out));
}

}  // namespace qunc

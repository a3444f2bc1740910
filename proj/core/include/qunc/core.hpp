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

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qunc/errors.hpp"

namespace qunc {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Tolerance applied when validating user-supplied probabilities, traces,
/// Hermiticity and orthonormality. Inputs inside it are renormalized exactly.
inline constexpr double kValidationTol = 1e-10;

/// Default tolerance of the overlap predicates.
inline constexpr double kOverlapTol = 1e-10;

/// Dense operations are supported for 2 <= n <= kMaxDim.
inline constexpr std::size_t kMinDim = 2;
inline constexpr std::size_t kMaxDim = 64;

/// A finite discrete probability distribution.
///
/// Construction validates non-negativity and normalization against
/// kValidationTol, then clamps tiny negatives to zero and rescales so the
/// stored entries sum to one to rounding.
class ProbDist {
 public:
  explicit ProbDist(std::vector<double> probs);

  static ProbDist uniform(std::size_t n);
  static ProbDist point_mass(std::size_t n, std::size_t index);

  std::span<const double> probs() const noexcept { return probs_; }
  std::size_t size() const noexcept { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }

  friend bool operator==(const ProbDist&, const ProbDist&) = default;

 private:
  std::vector<double> probs_;
};

/// Mixing coefficients. Same invariants as ProbDist but a distinct type so a
/// weight vector is never passed where a component is expected.
class Weights {
 public:
  explicit Weights(std::vector<double> w) : dist_(std::move(w)) {}
  explicit Weights(ProbDist d) : dist_(std::move(d)) {}

  static Weights equal(std::size_t m) { return Weights(ProbDist::uniform(m)); }

  std::span<const double> values() const noexcept { return dist_.probs(); }
  std::size_t size() const noexcept { return dist_.size(); }
  double operator[](std::size_t i) const { return dist_[i]; }
  const ProbDist& as_dist() const noexcept { return dist_; }

 private:
  ProbDist dist_;
};

/// A unit-norm state vector.
class PureState {
 public:
  /// Rejects a zero vector; any other vector is normalized.
  explicit PureState(Vector amplitudes);

  static PureState basis_state(std::size_t n, std::size_t index);

  const Vector& amplitudes() const noexcept { return amplitudes_; }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(amplitudes_.size()); }

 private:
  Vector amplitudes_;
};

/// n x n Hermitian, positive semidefinite, unit-trace matrix.
///
/// The spectrum (sorted descending, clamped at zero and renormalized) is
/// computed once on construction and cached.
class DensityOperator {
 public:
  explicit DensityOperator(Matrix m);

  static DensityOperator maximally_mixed(std::size_t n);
  static DensityOperator from_pure(const PureState& psi);
  static DensityOperator diagonal(const ProbDist& p);

  const Matrix& matrix() const noexcept { return matrix_; }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(matrix_.rows()); }
  std::span<const double> eigenvalues() const noexcept { return eigenvalues_; }

 private:
  Matrix matrix_;
  std::vector<double> eigenvalues_;
};

/// Orthonormal eigenbasis standing in for a non-degenerate observable. The
/// columns of unitary() are the basis vectors |a_j>.
class ObservableBasis {
 public:
  explicit ObservableBasis(Matrix unitary, std::optional<std::string> label = std::nullopt);

  static ObservableBasis computational(std::size_t n);

  const Matrix& unitary() const noexcept { return unitary_; }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(unitary_.rows()); }
  Vector vector(std::size_t j) const { return unitary_.col(static_cast<Eigen::Index>(j)); }
  const std::optional<std::string>& label() const noexcept { return label_; }

 private:
  Matrix unitary_;
  std::optional<std::string> label_;
};

/// Outcome distribution p_j = <a_j|rho|a_j> of measuring rho in `basis`.
ProbDist measure(const DensityOperator& rho, const ObservableBasis& basis);

/// Post-measurement state sum_j |a_j><a_j|rho|a_j><a_j|.
DensityOperator dephase(const DensityOperator& rho, const ObservableBasis& basis);

/// True iff no outcome carries probability above `tol` under both a and b.
bool nonoverlapping(const ProbDist& a, const ProbDist& b, double tol = kOverlapTol);

/// True iff the supports of a and b are orthogonal, i.e. ||a b||_op <= tol.
bool quantum_nonoverlapping(const DensityOperator& a, const DensityOperator& b,
                            double tol = kOverlapTol);

ProbDist mix_dists(std::span<const ProbDist> components, const Weights& w);
DensityOperator mix_states(std::span<const DensityOperator> components, const Weights& w);

/// Kronecker product a (x) b; the first factor is the slow index.
DensityOperator tensor(const DensityOperator& a, const DensityOperator& b);

/// U rho U^dagger. U must be unitary within kValidationTol.
DensityOperator conjugate(const DensityOperator& rho, const Matrix& u);

/// Applies a permutation of outcomes: result[perm[i]] = p[i].
ProbDist permute(const ProbDist& p, std::span<const std::size_t> perm);

/// max_ij |U U^dagger - 1|_ij.
double unitarity_residual(const Matrix& u);

/// Hermitian eigenvalues sorted descending.
std::vector<double> hermitian_eigenvalues(const Matrix& m);

/// Largest absolute entry of a matrix.
double max_abs(const Matrix& m);

}  // namespace qunc

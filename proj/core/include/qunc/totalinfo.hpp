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
#include <vector>

#include "qunc/core.hpp"

namespace qunc {

/// Squared distance from the maximally random state; 0 <= I <= (n-1)/n.
struct InfoValue {
  double value = 0.0;
  friend auto operator<=>(const InfoValue&, const InfoValue&) = default;
};

/// Inverse participation ratio; 1 <= R <= n.
struct IprValue {
  double value = 1.0;
  friend auto operator<=>(const IprValue&, const IprValue&) = default;
};

/// sum_j p_j^2 - 1/n.
InfoValue info_classical(const ProbDist& p);

/// sum_j (p_j - 1/n)^2. Agrees with info_classical to rounding.
InfoValue info_classical_distance(const ProbDist& p);

/// tr(rho^2) - 1/n.
InfoValue info_quantum(const DensityOperator& rho);

/// tr(rho^2) as a sum of |rho_ij|^2.
double purity(const DensityOperator& rho);

IprValue ipr_classical(const ProbDist& p);
IprValue ipr_quantum(const DensityOperator& rho);

/// A complete set of n+1 mutually unbiased bases for a prime dimension n.
class MubSet {
 public:
  /// Checks orthonormality of each basis and |<a|b>|^2 = 1/n across bases,
  /// both within kValidationTol. Throws ValidationError on failure.
  MubSet(std::size_t dim, std::vector<ObservableBasis> bases);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<ObservableBasis>& bases() const noexcept { return bases_; }

  /// Largest deviation of any cross-basis squared overlap from 1/n.
  double max_overlap_deviation() const;

 private:
  std::size_t dim_;
  std::vector<ObservableBasis> bases_;
};

bool is_prime(std::size_t n);

inline constexpr std::size_t kMaxMubDim = 61;

/// Computational basis plus n quadratic-phase bases for odd prime n; the
/// Pauli Z, X, Y eigenbases for n = 2. Throws UnsupportedDimension otherwise.
MubSet build_mub(std::size_t n);

/// max_ij |(sum_i dephase(rho, A_i) - 1) - rho|_ij.
double check_reconstruction(const DensityOperator& rho, const MubSet& mubs);

struct AdditivityCheck {
  double lhs = 0.0;  ///< sum_i I(A_i)
  double rhs = 0.0;  ///< I(rho)
  double residual = 0.0;
  std::vector<double> per_basis;
};

AdditivityCheck check_additivity(const DensityOperator& rho, const MubSet& mubs);

/// |1/R(rho) - sum_i 1/R(A_i) + 1|.
double check_ipr_relation(const DensityOperator& rho, const MubSet& mubs);

}  // namespace qunc

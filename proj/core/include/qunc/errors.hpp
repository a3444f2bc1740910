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

#include <stdexcept>
#include <string>

namespace qunc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not agree, or a dimension is outside the supported range.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Input violates a domain invariant beyond tolerance (normalization,
/// Hermiticity, positivity, orthonormality, argument ranges).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Components that are required to be non-overlapping share support.
class OverlapError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// No complete set of mutually unbiased bases is constructed for this dimension.
class UnsupportedDimension : public Error {
 public:
  explicit UnsupportedDimension(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }

 private:
  std::size_t dim_;
};

}  // namespace qunc

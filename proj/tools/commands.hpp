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

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "document.hpp"
#include "report.hpp"

namespace qunc::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitInputError = 2,
  kExitUnsupportedDimension = 3,
};

inline constexpr double kAxiomTol = 1e-12;
inline constexpr double kIdentityTol = 1e-10;

Report cmd_entropy(const InputDocument& doc, std::optional<double> tol = std::nullopt);

Report cmd_totalinfo(const InputDocument& doc, bool with_mub, std::optional<double> tol = std::nullopt);

struct HaarVerifyOptions {
  std::size_t dim = 2;
  std::size_t samples = 100000;
  std::uint64_t seed = 0;
  std::size_t workers = 1;
  /// Defaults to |0><0| in `dim` dimensions.
  std::optional<InputDocument> density;
};

Report cmd_haar_verify(const HaarVerifyOptions& opts);

struct AxiomsOptions {
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  std::optional<double> tol;
  /// User-supplied components checked with the grouping-mixture form.
  std::vector<InputDocument> components;
  std::optional<std::vector<double>> weights;
};

Report cmd_axioms(const AxiomsOptions& opts);

/// Full command-line entry point. Reports go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qunc::cli

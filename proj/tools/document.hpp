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

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qunc/core.hpp"

namespace qunc::cli {

/// Malformed input text: not JSON, wrong shapes, non-numeric entries.
class ParseError : public Error {
 public:
  using Error::Error;
};

enum class DocumentKind { distribution, density, basis };

std::string to_string(DocumentKind kind);

/// An input file as stored on disk. The raw payload is kept verbatim so that
/// serialize(parse(x)) reproduces it exactly; validated views are produced on
/// demand.
///
/// Layout:
///   {"kind": "distribution", "probs": [...]}
///   {"kind": "density", "matrix": {"re": [[...]], "im": [[...]]}}
///   {"kind": "basis", "matrix": {"re": ..., "im": ...}, "label": "..."}
/// "im" may be omitted (all zeros); "dim", when present, must match.
struct InputDocument {
  DocumentKind kind = DocumentKind::distribution;
  std::vector<double> probs;
  Matrix matrix;
  std::optional<std::string> label;

  std::size_t dim() const;

  ProbDist as_distribution() const;
  DensityOperator as_density() const;
  ObservableBasis as_basis() const;
};

/// Parses and validates against the core invariants. Throws ParseError for
/// structural problems and ValidationError / DimensionError for invariant
/// violations.
InputDocument parse_document(const nlohmann::json& j);
InputDocument parse_document_text(const std::string& text);
InputDocument load_document(const std::filesystem::path& path);

nlohmann::json serialize(const InputDocument& doc);

InputDocument make_document(const ProbDist& p);
InputDocument make_document(const DensityOperator& rho);

/// {"re": [[...]], "im": [[...]]}
nlohmann::json matrix_to_json(const Matrix& m);

}  // namespace qunc::cli

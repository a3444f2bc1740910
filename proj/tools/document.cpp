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

#include "document.hpp"

#include <fstream>
#include <sstream>

namespace qunc::cli {

namespace {

double number_at(const nlohmann::json& v, const std::string& where) {
  if (!v.is_number()) throw ParseError(where + ": expected a number, got " + std::string(v.type_name()));
  return v.get<double>();
}

std::vector<std::vector<double>> real_rows(const nlohmann::json& v, const std::string& where) {
  if (!v.is_array()) throw ParseError(where + ": expected an array of rows");
  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& row = v[i];
    const std::string at = where + "[" + std::to_string(i) + "]";
    if (!row.is_array()) throw ParseError(at + ": expected an array");
    std::vector<double> r;
    for (std::size_t k = 0; k < row.size(); ++k) r.push_back(number_at(row[k], at + "[" + std::to_string(k) + "]"));
    rows.push_back(std::move(r));
  }
  return rows;
}

Matrix parse_matrix(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("re")) throw ParseError("matrix: expected an object with \"re\" and \"im\"");
  const auto re = real_rows(j.at("re"), "matrix.re");
  const std::size_t rows = re.size();
  if (rows == 0) throw ParseError("matrix.re: empty");
  const std::size_t cols = re.front().size();
  for (const auto& r : re) {
    if (r.size() != cols) throw ParseError("matrix.re: ragged rows");
  }
  std::vector<std::vector<double>> im;
  if (j.contains("im")) {
    im = real_rows(j.at("im"), "matrix.im");
    if (im.size() != rows) throw ParseError("matrix.im: row count differs from matrix.re");
    for (const auto& r : im) {
      if (r.size() != cols) throw ParseError("matrix.im: column count differs from matrix.re");
    }
  }
  Matrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t k = 0; k < cols; ++k) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) =
          Complex(re[i][k], im.empty() ? 0.0 : im[i][k]);
    }
  }
  return m;
}

}  // namespace

std::string to_string(DocumentKind kind) {
  switch (kind) {
    case DocumentKind::distribution:
      return "distribution";
    case DocumentKind::density:
      return "density";
    case DocumentKind::basis:
      return "basis";
  }
  return "unknown";
}

std::size_t InputDocument::dim() const {
  return kind == DocumentKind::distribution ? probs.size() : static_cast<std::size_t>(matrix.rows());
}

ProbDist InputDocument::as_distribution() const {
  if (kind != DocumentKind::distribution) throw ValidationError("expected a distribution document, got " + to_string(kind));
  return ProbDist(probs);
}

DensityOperator InputDocument::as_density() const {
  if (kind != DocumentKind::density) throw ValidationError("expected a density document, got " + to_string(kind));
  return DensityOperator(matrix);
}

ObservableBasis InputDocument::as_basis() const {
  if (kind != DocumentKind::basis) throw ValidationError("expected a basis document, got " + to_string(kind));
  return ObservableBasis(matrix, label);
}

InputDocument parse_document(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("document: expected a JSON object");
  if (!j.contains("kind") || !j.at("kind").is_string()) throw ParseError("document: missing string field \"kind\"");
  const auto kind = j.at("kind").get<std::string>();

  InputDocument doc;
  if (kind == "distribution") {
    doc.kind = DocumentKind::distribution;
    if (!j.contains("probs") || !j.at("probs").is_array()) throw ParseError("distribution: missing array \"probs\"");
    const auto& arr = j.at("probs");
    for (std::size_t i = 0; i < arr.size(); ++i) doc.probs.push_back(number_at(arr[i], "probs[" + std::to_string(i) + "]"));
  } else if (kind == "density" || kind == "basis") {
    doc.kind = kind == "density" ? DocumentKind::density : DocumentKind::basis;
    if (!j.contains("matrix")) throw ParseError(kind + ": missing \"matrix\"");
    doc.matrix = parse_matrix(j.at("matrix"));
    if (j.contains("label")) {
      if (!j.at("label").is_string()) throw ParseError("label: expected a string");
      doc.label = j.at("label").get<std::string>();
    }
  } else {
    throw ParseError("document: unknown kind \"" + kind + "\"");
  }

  if (j.contains("dim")) {
    const auto& d = j.at("dim");
    if (!d.is_number_unsigned()) throw ParseError("dim: expected a non-negative integer");
    if (d.get<std::size_t>() != doc.dim()) {
      throw DimensionError("dim field says " + std::to_string(d.get<std::size_t>()) + " but payload has dimension " +
                           std::to_string(doc.dim()));
    }
  }

  switch (doc.kind) {
    case DocumentKind::distribution:
      (void)doc.as_distribution();
      break;
    case DocumentKind::density:
      (void)doc.as_density();
      break;
    case DocumentKind::basis:
      (void)doc.as_basis();
      break;
  }
  return doc;
}

InputDocument parse_document_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return parse_document(j);
}

InputDocument load_document(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_document_text(ss.str());
}

nlohmann::json matrix_to_json(const Matrix& m) {
  nlohmann::json re = nlohmann::json::array();
  nlohmann::json im = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::json rr = nlohmann::json::array();
    nlohmann::json ri = nlohmann::json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      rr.push_back(m(i, k).real());
      ri.push_back(m(i, k).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ri));
  }
  return {{"re", std::move(re)}, {"im", std::move(im)}};
}

nlohmann::json serialize(const InputDocument& doc) {
  nlohmann::json j;
  j["kind"] = to_string(doc.kind);
  j["dim"] = doc.dim();
  if (doc.kind == DocumentKind::distribution) {
    j["probs"] = doc.probs;
  } else {
    j["matrix"] = matrix_to_json(doc.matrix);
    if (doc.label) j["label"] = *doc.label;
  }
  return j;
}

InputDocument make_document(const ProbDist& p) {
  InputDocument doc;
  doc.kind = DocumentKind::distribution;
  doc.probs.assign(p.probs().begin(), p.probs().end());
  return doc;
}

InputDocument make_document(const DensityOperator& rho) {
  InputDocument doc;
  doc.kind = DocumentKind::density;
  doc.matrix = rho.matrix();
  return doc;
}

}  // namespace qunc::cli

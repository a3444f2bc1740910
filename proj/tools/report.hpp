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

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qunc/core.hpp"

namespace qunc::cli {

/// Significant digits used for every number written to a report.
inline constexpr int kReportDigits = 12;

/// Rounds to kReportDigits significant digits.
double round_for_report(double x);

/// SHA-256 of the compact dump of `j`, hex encoded.
std::string digest(const nlohmann::json& j);

struct Check {
  std::string name;
  std::string metric;  ///< "residual" or "z_score"
  double value = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Outcome of one subcommand. Serialization is deterministic: object keys are
/// sorted and checks keep insertion order.
class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  void set_inputs(const nlohmann::json& inputs);
  void set_note(const std::string& key, nlohmann::json value);

  void add_result(const std::string& name, double value);
  void add_result(const std::string& name, std::size_t value);
  void add_result(const std::string& name, const std::vector<double>& values);
  void add_result(const std::string& name, const Matrix& m);

  /// Records value <= tolerance.
  const Check& add_check(const std::string& name, const std::string& metric, double value, double tolerance);

  const std::string& command() const noexcept { return command_; }
  const std::vector<Check>& checks() const noexcept { return checks_; }
  const nlohmann::json& results() const noexcept { return results_; }
  bool all_pass() const;

  nlohmann::json to_json() const;
  std::string to_text() const;

 private:
  std::string command_;
  std::string inputs_digest_;
  nlohmann::json inputs_ = nlohmann::json::object();
  nlohmann::json results_ = nlohmann::json::object();
  nlohmann::json notes_ = nlohmann::json::object();
  std::vector<Check> checks_;
};

}  // namespace qunc::cli

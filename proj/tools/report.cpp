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

#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

namespace qunc::cli {

double round_for_report(double x) {
  if (!std::isfinite(x) || x == 0.0) return x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", kReportDigits, x);
  return std::strtod(buf, nullptr);
}

std::string digest(const nlohmann::json& j) {
  const std::string text = j.dump();
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr);
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return "sha256:" + os.str();
}

void Report::set_inputs(const nlohmann::json& inputs) {
  inputs_ = inputs;
  inputs_digest_ = digest(inputs);
}

void Report::set_note(const std::string& key, nlohmann::json value) { notes_[key] = std::move(value); }

void Report::add_result(const std::string& name, double value) { results_[name] = round_for_report(value); }

void Report::add_result(const std::string& name, std::size_t value) { results_[name] = value; }

void Report::add_result(const std::string& name, const std::vector<double>& values) {
  nlohmann::json arr = nlohmann::json::array();
  for (double v : values) arr.push_back(round_for_report(v));
  results_[name] = std::move(arr);
}

void Report::add_result(const std::string& name, const Matrix& m) {
  nlohmann::json re = nlohmann::json::array();
  nlohmann::json im = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::json rr = nlohmann::json::array();
    nlohmann::json ri = nlohmann::json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      rr.push_back(round_for_report(m(i, k).real()));
      ri.push_back(round_for_report(m(i, k).imag()));
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ri));
  }
  results_[name] = {{"re", std::move(re)}, {"im", std::move(im)}};
}

const Check& Report::add_check(const std::string& name, const std::string& metric, double value,
                               double tolerance) {
  checks_.push_back({name, metric, value, tolerance, std::isfinite(value) && value <= tolerance});
  return checks_.back();
}

bool Report::all_pass() const {
  for (const auto& c : checks_) {
    if (!c.pass) return false;
  }
  return true;
}

nlohmann::json Report::to_json() const {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : checks_) {
    checks.push_back({{"name", c.name},
                      {"metric", c.metric},
                      {"value", round_for_report(c.value)},
                      {"tolerance", c.tolerance},
                      {"pass", c.pass}});
  }
  nlohmann::json j;
  j["command"] = command_;
  j["inputs"] = {{"digest", inputs_digest_}, {"parameters", inputs_}};
  j["results"] = results_;
  j["checks"] = std::move(checks);
  j["pass"] = all_pass();
  if (!notes_.empty()) j["notes"] = notes_;
  return j;
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << "command: " << command_ << "\n";
  if (!inputs_digest_.empty()) os << "inputs:  " << inputs_digest_ << "\n";
  for (const auto& [key, value] : results_.items()) os << "  " << key << " = " << value.dump() << "\n";
  for (const auto& [key, value] : notes_.items()) os << "  # " << key << ": " << value.dump() << "\n";
  os << std::setprecision(kReportDigits);
  for (const auto& c : checks_) {
    os << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << "  " << c.metric << "=" << c.value
       << "  tol=" << c.tolerance << "\n";
  }
  os << (all_pass() ? "all checks passed" : "some checks FAILED") << "\n";
  return os.str();
}

}  // namespace qunc::cli

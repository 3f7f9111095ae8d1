// Copyright 2026 The photonsim Authors
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

#ifndef PHOTONSIM_HARNESS_REPORT_HPP_
#define PHOTONSIM_HARNESS_REPORT_HPP_

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "photonsim/harness/config.hpp"

namespace photonsim::harness {

// value ± error. A metric with an expected value is a pass/fail check:
// it passes iff |value - expected| <= tolerance.
struct Metric {
  std::string name;
  double value = 0.0;
  std::optional<double> error;
  std::optional<double> expected;
  double tolerance = 0.0;

  bool checked() const { return expected.has_value(); }
  bool passed() const;
};

using Cell = std::variant<double, long long, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  bool empty() const { return columns.empty(); }
  void add_row(std::vector<Cell> row);
};

struct RunReport {
  std::string experiment;
  std::map<std::string, std::string> config;
  std::vector<Metric> metrics;
  Table table;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
  // Measured but never serialized, so reruns stay byte-identical.
  double wall_seconds = 0.0;

  Metric& add(std::string name, double value);
  Metric& check(std::string name, double value, double expected, double tolerance);
  const Metric* find(const std::string& name) const;

  bool passed() const;
  std::vector<std::string> failures() const;

  std::string to_csv() const;
  std::string to_json() const;
  std::string serialize(OutputFormat format) const;
};

// Where a report goes when no path was given.
std::string default_output_path(const std::string& experiment, OutputFormat format);
void write_text(const std::string& path, const std::string& text);

}  // namespace photonsim::harness

#endif  // PHOTONSIM_HARNESS_REPORT_HPP_

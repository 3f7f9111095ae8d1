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

#include "photonsim/harness/report.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace photonsim::harness {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string cell_text(const Cell& c) {
  if (const double* d = std::get_if<double>(&c)) return format_double(*d);
  if (const long long* i = std::get_if<long long>(&c)) return std::to_string(*i);
  return csv_field(std::get<std::string>(c));
}

nlohmann::ordered_json cell_json(const Cell& c) {
  if (const double* d = std::get_if<double>(&c)) return *d;
  if (const long long* i = std::get_if<long long>(&c)) return *i;
  return std::get<std::string>(c);
}

void join(std::ostringstream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << fields[i];
  out << "\n";
}

}  // namespace

bool Metric::passed() const {
  if (!expected) return true;
  return std::isfinite(value) && std::abs(value - *expected) <= tolerance;
}

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) throw InvalidArgument("table row has the wrong number of cells");
  rows.push_back(std::move(row));
}

Metric& RunReport::add(std::string name, double value) {
  metrics.push_back(Metric{std::move(name), value, std::nullopt, std::nullopt, 0.0});
  return metrics.back();
}

Metric& RunReport::check(std::string name, double value, double expected, double tolerance) {
  metrics.push_back(Metric{std::move(name), value, std::nullopt, expected, tolerance});
  return metrics.back();
}

const Metric* RunReport::find(const std::string& name) const {
  for (const Metric& m : metrics) {
    if (m.name == name) return &m;
  }
  return nullptr;
}

bool RunReport::passed() const { return failures().empty(); }

std::vector<std::string> RunReport::failures() const {
  std::vector<std::string> out;
  for (const Metric& m : metrics) {
    if (!m.passed()) out.push_back(m.name);
  }
  return out;
}

std::string RunReport::to_csv() const {
  std::ostringstream out;
  for (const auto& [k, v] : config) out << "# " << k << "=" << v << "\n";
  std::vector<std::string> header, row;
  for (const Metric& m : metrics) {
    header.push_back(csv_field(m.name));
    row.push_back(format_double(m.value));
    if (m.error) {
      header.push_back(csv_field(m.name + "_stderr"));
      row.push_back(format_double(*m.error));
    }
  }
  header.push_back("passed");
  row.push_back(passed() ? "1" : "0");
  join(out, header);
  join(out, row);
  if (!table.empty()) {
    out << "\n";
    std::vector<std::string> cols;
    for (const std::string& c : table.columns) cols.push_back(csv_field(c));
    join(out, cols);
    for (const auto& r : table.rows) {
      std::vector<std::string> cells;
      for (const Cell& c : r) cells.push_back(cell_text(c));
      join(out, cells);
    }
  }
  return out.str();
}

std::string RunReport::to_json() const {
  nlohmann::ordered_json j;
  j["experiment"] = experiment;
  j["config"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : config) j["config"][k] = v;
  j["passed"] = passed();
  j["metrics"] = nlohmann::ordered_json::array();
  for (const Metric& m : metrics) {
    nlohmann::ordered_json e;
    e["name"] = m.name;
    e["value"] = m.value;
    if (m.error) e["stderr"] = *m.error;
    if (m.expected) {
      e["expected"] = *m.expected;
      e["tolerance"] = m.tolerance;
      e["passed"] = m.passed();
    }
    j["metrics"].push_back(e);
  }
  if (!table.empty()) {
    j["table"]["columns"] = table.columns;
    j["table"]["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : table.rows) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (const Cell& c : r) row.push_back(cell_json(c));
      j["table"]["rows"].push_back(row);
    }
  }
  j["details"] = details;
  return j.dump(2) + "\n";
}

std::string RunReport::serialize(OutputFormat format) const {
  return format == OutputFormat::kCsv ? to_csv() : to_json();
}

std::string default_output_path(const std::string& experiment, OutputFormat format) {
  const char* dir = std::getenv("PHOTONSIM_OUT_DIR");
  std::filesystem::path p = dir && *dir ? std::filesystem::path(dir) : std::filesystem::path(".");
  return (p / (experiment + "." + format_name(format))).string();
}

void write_text(const std::string& path, const std::string& text) {
  const std::filesystem::path p(path);
  std::error_code ec;
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path(), ec);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw OutputError("cannot open " + path + " for writing");
  out << text;
  out.flush();
  if (!out) throw OutputError("write to " + path + " failed");
}

}  // namespace photonsim::harness

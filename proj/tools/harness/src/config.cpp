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

#include "photonsim/harness/config.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace photonsim::harness {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::uint64_t parse_seed(const std::string& v) {
  if (v.empty() || v[0] == '-') throw ConfigurationError("seed must be a non-negative integer, got '" + v + "'");
  char* end = nullptr;
  errno = 0;
  const unsigned long long s = std::strtoull(v.c_str(), &end, 0);
  if (errno != 0 || *end != '\0') throw ConfigurationError("seed must be a 64-bit integer, got '" + v + "'");
  return s;
}

double parse_double(const std::string& key, const std::string& v) {
  char* end = nullptr;
  const double d = std::strtod(v.c_str(), &end);
  if (v.empty() || *end != '\0' || !std::isfinite(d)) {
    throw ConfigurationError("parameter '" + key + "' expects a number, got '" + v + "'");
  }
  return d;
}

std::int64_t parse_int(const std::string& key, const std::string& v) {
  char* end = nullptr;
  errno = 0;
  const long long i = std::strtoll(v.c_str(), &end, 10);
  if (v.empty() || *end != '\0' || errno != 0) {
    // Accept integral values written as floats, e.g. 1e5.
    const double d = parse_double(key, v);
    if (d != std::floor(d) || std::abs(d) > 9.0e15) {
      throw ConfigurationError("parameter '" + key + "' expects an integer, got '" + v + "'");
    }
    return static_cast<std::int64_t>(d);
  }
  return i;
}

std::vector<double> parse_list(const std::string& key, const std::string& v) {
  std::vector<double> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_double(key, trim(item)));
  if (out.empty()) throw ConfigurationError("parameter '" + key + "' expects a comma-separated list");
  return out;
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

OutputFormat parse_format(const std::string& name) {
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "json") return OutputFormat::kJson;
  throw ConfigurationError("format must be csv or json, got '" + name + "'");
}

std::string format_name(OutputFormat format) {
  return format == OutputFormat::kCsv ? "csv" : "json";
}

void ExperimentConfig::set(const std::string& key, const std::string& value) {
  if (key.empty()) throw ConfigurationError("empty parameter name");
  if (key == "seed") {
    seed = parse_seed(value);
  } else if (key == "format") {
    format = parse_format(value);
  } else if (key == "out") {
    out = value;
  } else if (key == "experiment") {
    if (!experiment.empty() && experiment != value) {
      throw ConfigurationError("config is for experiment '" + value + "', not '" + experiment + "'");
    }
    experiment = value;
  } else {
    params[key] = value;
  }
}

void ExperimentConfig::assign(const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos) throw ConfigurationError("expected key=value, got '" + assignment + "'");
  set(trim(assignment.substr(0, eq)), trim(assignment.substr(eq + 1)));
}

ExperimentConfig ExperimentConfig::parse_text(const std::string& text, const std::string& origin) {
  ExperimentConfig c;
  std::stringstream ss(text);
  std::string line;
  int number = 0;
  while (std::getline(ss, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.find('=') == std::string::npos) {
      throw ConfigurationError(origin + ":" + std::to_string(number) + ": expected key = value");
    }
    c.assign(line);
  }
  return c;
}

ExperimentConfig ExperimentConfig::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw OutputError("cannot read config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str(), path);
}

ResolvedConfig::ResolvedConfig(const ExperimentConfig& config, const std::vector<ParamSpec>& schema)
    : experiment_(config.experiment), seed_(config.seed), format_(config.format) {
  std::map<std::string, const ParamSpec*> by_key;
  for (const ParamSpec& p : schema) by_key[p.key] = &p;
  for (const auto& [k, v] : config.params) {
    if (!by_key.count(k)) {
      throw ConfigurationError("experiment '" + experiment_ + "' has no parameter '" + k + "'");
    }
  }
  for (const ParamSpec& p : schema) {
    auto it = config.params.find(p.key);
    const std::string& v = it == config.params.end() ? p.default_value : it->second;
    switch (p.type) {
      case ParamType::kInt:
        values_[p.key] = std::to_string(parse_int(p.key, v));
        break;
      case ParamType::kDouble:
        values_[p.key] = format_double(parse_double(p.key, v));
        break;
      case ParamType::kDoubleList: {
        std::string joined;
        for (double d : parse_list(p.key, v)) joined += (joined.empty() ? "" : ",") + format_double(d);
        values_[p.key] = joined;
        break;
      }
      case ParamType::kString:
        values_[p.key] = v;
        break;
    }
  }
}

const std::string& ResolvedConfig::raw(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) throw ConfigurationError("no parameter '" + key + "'");
  return it->second;
}

double ResolvedConfig::number(const std::string& key) const { return std::strtod(raw(key).c_str(), nullptr); }

std::int64_t ResolvedConfig::integer(const std::string& key) const {
  return std::strtoll(raw(key).c_str(), nullptr, 10);
}

const std::string& ResolvedConfig::text(const std::string& key) const { return raw(key); }

std::vector<double> ResolvedConfig::numbers(const std::string& key) const { return parse_list(key, raw(key)); }

std::map<std::string, std::string> ResolvedConfig::echo() const {
  std::map<std::string, std::string> e = values_;
  e["experiment"] = experiment_;
  e["seed"] = std::to_string(seed_);
  e["format"] = format_name(format_);
  return e;
}

}  // namespace photonsim::harness

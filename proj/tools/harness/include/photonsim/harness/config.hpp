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

#ifndef PHOTONSIM_HARNESS_CONFIG_HPP_
#define PHOTONSIM_HARNESS_CONFIG_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "photonsim/errors.hpp"

namespace photonsim::harness {

class UnknownExperiment : public ConfigurationError {
 public:
  using ConfigurationError::ConfigurationError;
};

class OutputError : public Error {
 public:
  using Error::Error;
};

enum class OutputFormat { kCsv, kJson };

OutputFormat parse_format(const std::string& name);
std::string format_name(OutputFormat format);

// What the user asked for, before defaults are filled in. Files hold one
// `key = value` per line with `#` comments; `seed`, `format` and `out` are
// reserved keys, everything else is an experiment parameter.
struct ExperimentConfig {
  std::string experiment;
  std::uint64_t seed = 0;
  OutputFormat format = OutputFormat::kCsv;
  // Empty means $PHOTONSIM_OUT_DIR (or the working directory) /<experiment>.<ext>.
  std::string out;
  std::map<std::string, std::string> params;

  static ExperimentConfig parse_text(const std::string& text, const std::string& origin = "config");
  static ExperimentConfig parse_file(const std::string& path);

  // Applies one `key=value` assignment; later assignments win.
  void set(const std::string& key, const std::string& value);
  void assign(const std::string& assignment);
};

enum class ParamType { kInt, kDouble, kString, kDoubleList };

struct ParamSpec {
  std::string key;
  ParamType type;
  std::string default_value;
  std::string help;
};

// Parameters checked against an experiment's schema with every default
// materialized. Values are kept in canonical text form for the echo.
class ResolvedConfig {
 public:
  ResolvedConfig(const ExperimentConfig& config, const std::vector<ParamSpec>& schema);

  const std::string& experiment() const { return experiment_; }
  std::uint64_t seed() const { return seed_; }
  OutputFormat format() const { return format_; }

  double number(const std::string& key) const;
  std::int64_t integer(const std::string& key) const;
  const std::string& text(const std::string& key) const;
  std::vector<double> numbers(const std::string& key) const;

  // experiment, seed, format and every parameter, sorted by key.
  std::map<std::string, std::string> echo() const;

 private:
  const std::string& raw(const std::string& key) const;

  std::string experiment_;
  std::uint64_t seed_;
  OutputFormat format_;
  std::map<std::string, std::string> values_;
};

// %.17g, the round-trip format used in every output.
std::string format_double(double v);

}  // namespace photonsim::harness

#endif  // PHOTONSIM_HARNESS_CONFIG_HPP_

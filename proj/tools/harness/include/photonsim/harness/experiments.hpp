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

#ifndef PHOTONSIM_HARNESS_EXPERIMENTS_HPP_
#define PHOTONSIM_HARNESS_EXPERIMENTS_HPP_

#include <functional>
#include <string>
#include <vector>

#include "photonsim/harness/config.hpp"
#include "photonsim/harness/report.hpp"

namespace photonsim::harness {

struct ExperimentDef {
  std::string name;
  std::string summary;
  std::vector<ParamSpec> params;
  std::function<void(const ResolvedConfig&, RunReport&)> body;
};

const std::vector<ExperimentDef>& experiments();
// Throws UnknownExperiment.
const ExperimentDef& find_experiment(const std::string& name);

// Resolves the config, runs the experiment and fills the echo and wall time.
// Nothing is written.
RunReport execute(const ExperimentConfig& config);

// execute() plus writing the serialized report to config.out (or the
// default path). Returns the report; the path written goes to `written`.
RunReport run(const ExperimentConfig& config, std::string* written = nullptr);

// Every oracle comparison and invariant suite, plus determinism and
// forced-failure diagnostics. Failures are metrics, never exceptions.
RunReport verify();

}  // namespace photonsim::harness

#endif  // PHOTONSIM_HARNESS_EXPERIMENTS_HPP_

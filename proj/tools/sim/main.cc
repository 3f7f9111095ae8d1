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

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "photonsim/harness/experiments.hpp"

namespace h = photonsim::harness;

namespace {

enum Exit { kPass = 0, kFail = 1, kBadConfig = 2, kIo = 3, kOther = 4 };

void print_summary(const h::RunReport& r, const std::string& written) {
  int checked = 0;
  for (const h::Metric& m : r.metrics) {
    if (!m.checked()) continue;
    ++checked;
    if (m.passed()) continue;
    std::printf("  FAIL %s = %.17g (expected %.17g +- %.3g)\n", m.name.c_str(), m.value, *m.expected, m.tolerance);
  }
  std::printf("%s: %s (%d checks)", r.experiment.c_str(), r.passed() ? "PASS" : "FAIL", checked);
  if (!written.empty()) std::printf(" -> %s", written.c_str());
  std::printf("\n");
  std::fprintf(stderr, "wall time %.3f s\n", r.wall_seconds);
}

struct RunOptions {
  std::string config_file;
  std::string seed;
  std::string out;
  std::string format;
  std::vector<std::string> sets;
};

void add_run_options(CLI::App* cmd, RunOptions& o) {
  cmd->add_option("--config", o.config_file, "key = value config file");
  cmd->add_option("--seed", o.seed, "64-bit seed (default 0)");
  cmd->add_option("--out", o.out, "output path (default $PHOTONSIM_OUT_DIR/<experiment>.<format>)");
  cmd->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--set", o.sets, "parameter override key=value (repeatable)");
}

h::ExperimentConfig build_config(const std::string& experiment, const RunOptions& o) {
  h::ExperimentConfig c;
  if (!o.config_file.empty()) c = h::ExperimentConfig::parse_file(o.config_file);
  if (!c.experiment.empty() && c.experiment != experiment) {
    throw photonsim::ConfigurationError("config file is for '" + c.experiment + "', not '" + experiment + "'");
  }
  c.experiment = experiment;
  // Flags beat the file.
  if (!o.seed.empty()) c.set("seed", o.seed);
  if (!o.format.empty()) c.set("format", o.format);
  if (!o.out.empty()) c.set("out", o.out);
  for (const std::string& s : o.sets) c.assign(s);
  return c;
}

int list_experiments() {
  for (const h::ExperimentDef& e : h::experiments()) {
    std::printf("%s\n  %s\n", e.name.c_str(), e.summary.c_str());
    for (const h::ParamSpec& p : e.params) {
      std::printf("    %-24s %-20s %s\n", p.key.c_str(), p.default_value.c_str(), p.help.c_str());
    }
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"photonic quantum computing simulator: experiments and verification"};
  app.require_subcommand(1);

  std::vector<RunOptions> options(h::experiments().size());
  std::vector<CLI::App*> commands;
  for (std::size_t i = 0; i < h::experiments().size(); ++i) {
    const h::ExperimentDef& e = h::experiments()[i];
    CLI::App* cmd = app.add_subcommand(e.name, e.summary);
    add_run_options(cmd, options[i]);
    commands.push_back(cmd);
  }
  std::string verify_out, verify_format = "json";
  CLI::App* verify = app.add_subcommand("verify", "run every oracle comparison and invariant suite");
  verify->add_option("--out", verify_out, "also write the report here");
  verify->add_option("--format", verify_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  CLI::App* list = app.add_subcommand("list", "list experiments and their parameters");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kBadConfig;
  }

  try {
    if (list->parsed()) return list_experiments();
    if (verify->parsed()) {
      const h::RunReport r = h::verify();
      if (!verify_out.empty()) h::write_text(verify_out, r.serialize(h::parse_format(verify_format)));
      print_summary(r, verify_out);
      return r.passed() ? kPass : kFail;
    }
    for (std::size_t i = 0; i < commands.size(); ++i) {
      if (!commands[i]->parsed()) continue;
      std::string written;
      const h::RunReport r = h::run(build_config(h::experiments()[i].name, options[i]), &written);
      print_summary(r, written);
      return r.passed() ? kPass : kFail;
    }
  } catch (const photonsim::ConfigurationError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kBadConfig;
  } catch (const h::OutputError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kIo;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kOther;
  }
  return kOther;
}

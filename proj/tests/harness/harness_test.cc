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

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "photonsim/harness/experiments.hpp"

using namespace photonsim;
using namespace photonsim::harness;

namespace {

ExperimentConfig config_for(const std::string& name) {
  ExperimentConfig c;
  c.experiment = name;
  return c;
}

std::vector<std::vector<std::string>> csv_block(const std::string& text, int block) {
  std::vector<std::vector<std::string>> rows;
  std::stringstream ss(text);
  std::string line;
  int at = 0;
  while (std::getline(ss, line)) {
    if (!line.empty() && line[0] == '#') continue;
    if (line.empty()) {
      ++at;
      continue;
    }
    if (at != block) continue;
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("photonsim_harness_" + name)).string();
}

}  // namespace

TEST(Config, ParsesFileWithCommentsAndReservedKeys) {
  const ExperimentConfig c = ExperimentConfig::parse_text(
      "# HOM sweep\nexperiment = hom-dip\nseed = 42\nformat = json\n\ngamma = 2.5   # faster decay\npoints=11\n");
  EXPECT_EQ(c.experiment, "hom-dip");
  EXPECT_EQ(c.seed, 42u);
  EXPECT_EQ(c.format, OutputFormat::kJson);
  EXPECT_EQ(c.params.at("gamma"), "2.5");
  EXPECT_EQ(c.params.at("points"), "11");
}

TEST(Config, LaterAssignmentsWin) {
  ExperimentConfig c = ExperimentConfig::parse_text("gamma = 1\nseed = 3\n");
  c.assign("gamma=4");
  c.set("seed", "9");
  EXPECT_EQ(c.params.at("gamma"), "4");
  EXPECT_EQ(c.seed, 9u);
}

TEST(Config, RejectsMalformedInput) {
  EXPECT_THROW(ExperimentConfig::parse_text("gamma 1\n"), ConfigurationError);
  EXPECT_THROW(ExperimentConfig::parse_text("seed = -1\n"), ConfigurationError);
  EXPECT_THROW(ExperimentConfig::parse_text("seed = 1.5\n"), ConfigurationError);
  EXPECT_THROW(ExperimentConfig::parse_text("format = xml\n"), ConfigurationError);
  ExperimentConfig c = config_for("hom-dip");
  EXPECT_THROW(c.set("experiment", "ns-gate"), ConfigurationError);
  EXPECT_THROW(ExperimentConfig::parse_file("/nonexistent/photonsim.cfg"), OutputError);
}

TEST(Config, SeedAcceptsFull64Bits) {
  const ExperimentConfig c = ExperimentConfig::parse_text("seed = 18446744073709551615\n");
  EXPECT_EQ(c.seed, 18446744073709551615ULL);
}

TEST(ResolvedConfig, MaterializesDefaultsAndValidatesTypes) {
  const std::vector<ParamSpec> schema{{"n", ParamType::kInt, "5", ""},
                                      {"x", ParamType::kDouble, "0.1", ""},
                                      {"xs", ParamType::kDoubleList, "1, 2.5", ""},
                                      {"name", ParamType::kString, "recycle", ""}};
  ExperimentConfig c = config_for("demo");
  c.set("n", "1e3");
  const ResolvedConfig r(c, schema);
  EXPECT_EQ(r.integer("n"), 1000);
  EXPECT_EQ(r.number("x"), 0.1);
  EXPECT_EQ(r.numbers("xs"), (std::vector<double>{1.0, 2.5}));
  EXPECT_EQ(r.text("name"), "recycle");
  const auto echo = r.echo();
  EXPECT_EQ(echo.at("x"), "0.10000000000000001");
  EXPECT_EQ(echo.at("xs"), "1,2.5");
  EXPECT_EQ(echo.at("seed"), "0");
  EXPECT_EQ(echo.at("experiment"), "demo");

  ExperimentConfig bad = config_for("demo");
  bad.set("n", "2.5");
  EXPECT_THROW(ResolvedConfig(bad, schema), ConfigurationError);
  bad = config_for("demo");
  bad.set("x", "fast");
  EXPECT_THROW(ResolvedConfig(bad, schema), ConfigurationError);
  bad = config_for("demo");
  bad.set("x", "inf");
  EXPECT_THROW(ResolvedConfig(bad, schema), ConfigurationError);
  bad = config_for("demo");
  bad.set("typo", "1");
  EXPECT_THROW(ResolvedConfig(bad, schema), ConfigurationError);
}

TEST(Registry, AllExperimentsPresent) {
  std::vector<std::string> names;
  for (const ExperimentDef& e : experiments()) names.push_back(e.name);
  EXPECT_EQ(names, (std::vector<std::string>{"hom-dip", "ns-gate", "cz-gate", "mbqc-cnot", "fusion-growth",
                                             "cat-overlap", "gkp-density", "gkp-kraus", "gbs-herald",
                                             "detector-povm"}));
  EXPECT_THROW(find_experiment("teleport"), UnknownExperiment);
  EXPECT_THROW(execute(config_for("teleport")), ConfigurationError);
}

TEST(Report, MetricPassRule) {
  Metric m{"x", 1.0, std::nullopt, 1.5, 0.5};
  EXPECT_TRUE(m.passed());
  m.value = 0.4999;
  EXPECT_FALSE(m.passed());
  m.value = std::nan("");
  EXPECT_FALSE(m.passed());
  Metric free{"y", 123.0, std::nullopt, std::nullopt, 0.0};
  EXPECT_TRUE(free.passed());
  EXPECT_FALSE(free.checked());
}

TEST(Report, CsvSchema) {
  RunReport r;
  r.experiment = "demo";
  r.config = {{"experiment", "demo"}, {"seed", "0"}};
  r.check("p", 0.1, 0.1, 0.0).error = 0.25;
  r.add("q", 2.0);
  r.table.columns = {"k", "label"};
  r.table.add_row({3LL, std::string("a,b")});
  EXPECT_THROW(r.table.add_row({1.0}), InvalidArgument);
  EXPECT_EQ(r.to_csv(),
            "# experiment=demo\n# seed=0\n"
            "p,p_stderr,q,passed\n0.10000000000000001,0.25,2,1\n"
            "\nk,label\n3,\"a,b\"\n");
}

TEST(Report, JsonSchema) {
  RunReport r;
  r.experiment = "demo";
  r.config = {{"seed", "0"}};
  r.check("p", 0.3, 0.25, 0.01);
  r.wall_seconds = 12.0;
  const auto j = nlohmann::json::parse(r.to_json());
  EXPECT_EQ(j["experiment"], "demo");
  EXPECT_EQ(j["config"]["seed"], "0");
  EXPECT_EQ(j["passed"], false);
  EXPECT_EQ(j["metrics"][0]["name"], "p");
  EXPECT_EQ(j["metrics"][0]["passed"], false);
  EXPECT_EQ(j["metrics"][0]["value"].get<double>(), 0.3);
  EXPECT_FALSE(j.contains("wall_seconds"));
  EXPECT_FALSE(j.contains("table"));
  EXPECT_EQ(r.failures(), (std::vector<std::string>{"p"}));
}

TEST(Run, HomDipCsvMatchesClosedForm) {
  ExperimentConfig c = config_for("hom-dip");
  c.out = temp_path("hom.csv");
  std::string written;
  const RunReport r = run(c, &written);
  EXPECT_EQ(written, c.out);
  EXPECT_TRUE(r.passed());
  std::ifstream in(written);
  std::stringstream ss;
  ss << in.rdbuf();
  const auto rows = csv_block(ss.str(), 1);
  ASSERT_EQ(rows.size(), 51u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"tau", "coincidence", "closed_form"}));
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double tau = std::stod(rows[i][0]);
    EXPECT_NEAR(std::stod(rows[i][1]), 0.5 * (1 - std::exp(-std::abs(tau))), 1e-8);
  }
  std::filesystem::remove(written);
}

TEST(Run, DefaultOutputDirectoryFromEnvironment) {
  const std::string dir = temp_path("outdir");
  setenv("PHOTONSIM_OUT_DIR", dir.c_str(), 1);
  ExperimentConfig c = config_for("detector-povm");
  c.format = OutputFormat::kJson;
  std::string written;
  run(c, &written);
  unsetenv("PHOTONSIM_OUT_DIR");
  EXPECT_EQ(written, (std::filesystem::path(dir) / "detector-povm.json").string());
  EXPECT_TRUE(std::filesystem::exists(written));
  std::filesystem::remove_all(dir);
}

TEST(Run, UnwritableOutputIsAnIoError) {
  ExperimentConfig c = config_for("detector-povm");
  c.out = "/proc/photonsim/report.csv";
  EXPECT_THROW(run(c), OutputError);
}

TEST(Run, NsGateDefaultsPass) {
  const RunReport r = execute(config_for("ns-gate"));
  const Metric* p = r.find("herald_probability");
  ASSERT_NE(p, nullptr);
  EXPECT_NEAR(p->value, 0.25, 1e-9);
  EXPECT_TRUE(p->passed());
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.table.rows.size(), 100u);
}

TEST(Run, NsGateCorruptedAngleIsReportedNotThrown) {
  ExperimentConfig c = config_for("ns-gate");
  c.set("theta2", "60");
  const RunReport r = execute(c);
  EXPECT_FALSE(r.passed());
  EXPECT_FALSE(r.find("self_check_probability_error")->passed());
  EXPECT_EQ(r.config.at("theta2"), "60");
}

TEST(Run, EchoIsCompleteAndTyped) {
  ExperimentConfig c = config_for("cat-overlap");
  c.set("alphas", "0.5, 1");
  const RunReport r = execute(c);
  EXPECT_EQ(r.config.at("alphas"), "0.5,1");
  EXPECT_EQ(r.config.at("cutoff"), "40");
  EXPECT_EQ(r.config.at("seed"), "0");
  EXPECT_EQ(r.table.rows.size(), 2u);
  c.set("cutoff", "many");
  EXPECT_THROW(execute(c), ConfigurationError);
}

TEST(Run, FusionGrowthIsDeterministic) {
  ExperimentConfig c = config_for("fusion-growth");
  c.set("trials", "3000");
  c.seed = 5;
  const RunReport first = execute(c);
  EXPECT_EQ(first.to_csv(), execute(c).to_csv());
  EXPECT_EQ(first.to_json(), execute(c).to_json());
  // More workers give the same numbers; only the echoed worker count differs.
  ExperimentConfig w = c;
  w.set("workers", "3");
  EXPECT_EQ(execute(w).find("mean_cost")->value, first.find("mean_cost")->value);
  c.seed = 6;
  EXPECT_NE(execute(c).find("mean_cost")->value, first.find("mean_cost")->value);
}

TEST(Run, GbsDetailsCarryTheFit) {
  const RunReport r = execute(config_for("gbs-herald"));
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.details["herald"], nlohmann::ordered_json::array({1, 1}));
  EXPECT_EQ(r.details["coefficients"].size(), 3u);
  EXPECT_TRUE(r.details.contains("xi1"));
  EXPECT_TRUE(r.details.contains("d1"));
}

TEST(Run, DetectorBucketOnTwoPhotons) {
  const RunReport r = execute(config_for("detector-povm"));
  EXPECT_NEAR(r.find("no_click")->value, 0.25, 1e-12);
  EXPECT_NEAR(r.find("click")->value, 0.75, 1e-12);
  EXPECT_TRUE(r.passed());
}

// Copyright 2026 The gridxai Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <filesystem>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "gridxai/cli/app.h"
#include "gridxai/cli/commands.h"
#include "gridxai/cli/config.h"
#include "gridxai/cli/report.h"
#include "gridxai/common/csv.h"
#include "gridxai/common/error.h"
#include "gridxai/common/sha256.h"
#include "test_util.h"

namespace gridxai::cli {
namespace {

namespace fs = std::filesystem;

struct RunOutput {
  int code;
  std::string out;
  std::string err;
};

RunOutput Invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "gridxai");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = RunApp(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path WriteConfig(const fs::path& dir, const nlohmann::json& j) {
  const fs::path p = dir / "config.json";
  WriteFileAtomic(p, j.dump(2));
  return p;
}

nlohmann::json SmallSynthConfig(const fs::path& out) {
  return {{"out", out.string()},
          {"synthetic", {{"n_days", 20}, {"n_noise_features", 1}}},
          {"hyperparameters", {{"n_trees", 30}, {"max_depth", 3}}},
          {"report", {{"bins_x", 8}, {"bins_y", 6}, {"kde_grid", 10}}}};
}

TEST(Config, DefaultsValidateAndRoundTrip) {
  RunConfig c = DefaultConfig();
  EXPECT_NO_THROW(c.Validate());
  c.ApplySeed(42);
  EXPECT_EQ(c.hyperparameters.seed, 42u);
  EXPECT_EQ(c.cv.split.seed, 42u);
  const RunConfig back = ConfigFromJson(ConfigToJson(c));
  EXPECT_EQ(ConfigToJson(back), ConfigToJson(c));
  EXPECT_EQ(c.BundleDir(), c.out / "bundle");
}

TEST(Config, RejectsUnknownKeysAndBadValues) {
  EXPECT_THROW(ConfigFromJson(nlohmann::json::parse(R"({"bogus": 1})")), ConfigError);
  EXPECT_THROW(ConfigFromJson(nlohmann::json::parse(R"({"feature_set": "tiny"})")),
               ConfigError);
  EXPECT_THROW(
      ConfigFromJson(nlohmann::json::parse(R"({"hyperparameters": {"max_depth": -1}})")),
      ConfigError);
  EXPECT_THROW(ConfigFromJson(nlohmann::json::parse(
                   R"({"window": {"start": "2021-01-02T00:00:00Z", "end": "2021-01-01T00:00:00Z"}})")),
               ConfigError);
}

TEST(ExitCodes, MapErrorClasses) {
  EXPECT_EQ(ExitCodeFor(ConfigError("x")), kExitConfig);
  EXPECT_EQ(ExitCodeFor(Error(ErrorKind::kAuth, "x")), kExitConfig);
  EXPECT_EQ(ExitCodeFor(SchemaError("x")), kExitData);
  EXPECT_EQ(ExitCodeFor(Error(ErrorKind::kMissingArtifact, "x")), kExitData);
  EXPECT_EQ(ExitCodeFor(Error(ErrorKind::kNetwork, "x")), kExitRuntime);
  EXPECT_EQ(ExitCodeFor(std::runtime_error("x")), kExitRuntime);
}

TEST(App, UsageAndConfigErrors) {
  EXPECT_EQ(Invoke({}).code, kExitConfig);
  EXPECT_EQ(Invoke({"frobnicate"}).code, kExitConfig);
  EXPECT_EQ(Invoke({"--help"}).code, kExitOk);
  const auto dir = testing::TempDir("cli_bad_config");
  const auto cfg = WriteConfig(dir, {{"bogus", true}});
  EXPECT_EQ(Invoke({"--config", cfg.string(), "build"}).code, kExitConfig);
  EXPECT_EQ(Invoke({"--config", (dir / "absent.json").string(), "build"}).code, kExitConfig);
}

TEST(App, MissingUpstreamArtifactNamesPrerequisite) {
  const auto dir = testing::TempDir("cli_missing");
  const auto r = Invoke({"--out", dir.string(), "build"});
  EXPECT_EQ(r.code, kExitData);
  EXPECT_NE(r.err.find("gridxai ingest"), std::string::npos);
  const auto t = Invoke({"--out", dir.string(), "train"});
  EXPECT_EQ(t.code, kExitData);
  EXPECT_NE(t.err.find("gridxai build"), std::string::npos);
  const auto e = Invoke({"--out", dir.string(), "explain"});
  EXPECT_EQ(e.code, kExitData);
  EXPECT_NE(e.err.find("gridxai train"), std::string::npos);
}

TEST(App, OfflineWithoutCacheOrFixturesIsAConfigError) {
  const auto dir = testing::TempDir("cli_offline");
  const auto r = Invoke({"--out", dir.string(), "--offline", "ingest"});
  EXPECT_EQ(r.code, kExitConfig);
  EXPECT_FALSE(r.err.empty());
}

TEST(App, LiveIngestWithoutTokenIsAnAuthError) {
  const auto dir = testing::TempDir("cli_live");
  unsetenv("ENTSOE_API_TOKEN");
  const auto cfg = WriteConfig(
      dir, {{"out", dir.string()},
            {"window", {{"start", "2021-10-01T00:00:00Z"}, {"end", "2021-10-02T00:00:00Z"}}}});
  const auto r = Invoke({"--config", cfg.string(), "ingest"});
  EXPECT_EQ(r.code, kExitConfig);
  EXPECT_NE(r.err.find("ENTSOE_API_TOKEN"), std::string::npos);
}

TEST(App, FixtureIngestBuildIsIdempotent) {
  const auto dir = testing::TempDir("cli_fixture");
  const auto cfg = WriteConfig(
      dir, {{"out", (dir / "run").string()},
            {"window", {{"start", "2021-10-01T00:00:00Z"}, {"end", "2021-11-01T00:00:00Z"}}}});
  const std::string fixtures = (testing::FixturesDir() / "entsoe").string();
  ASSERT_EQ(Invoke({"--config", cfg.string(), "--fixtures", fixtures, "ingest"}).code, kExitOk);
  const std::string manifest = ReadFile(dir / "run" / "bundle" / "manifest.json");
  ASSERT_EQ(Invoke({"--config", cfg.string(), "--fixtures", fixtures, "ingest"}).code, kExitOk);
  EXPECT_EQ(ReadFile(dir / "run" / "bundle" / "manifest.json"), manifest);
  ASSERT_EQ(Invoke({"--config", cfg.string(), "build"}).code, kExitOk);
  const auto ds = ReadFile(dir / "run" / "dataset.csv");
  const auto header = ds.substr(0, ds.find('\n'));
  EXPECT_EQ(header, "hour,volume,wind_north,hydro_south,flow_DK,flow_FR,solar_DE,"
                    "residual_load_transnet");
  EXPECT_EQ(std::count(ds.begin(), ds.end(), '\n'), 745);
  EXPECT_TRUE(fs::exists(dir / "run" / "config.json"));
}

TEST(App, SyntheticPipelineIsByteIdenticalAcrossReruns) {
  const auto dir = testing::TempDir("cli_rerun");
  std::map<std::string, std::string> first;
  for (int pass = 0; pass < 2; ++pass) {
    const auto out = dir / ("run" + std::to_string(pass));
    const auto cfg = WriteConfig(dir, SmallSynthConfig(out));
    for (const char* cmd : {"synth", "train", "explain", "report"}) {
      const auto r = Invoke({"--config", cfg.string(), "--seed", "3", cmd});
      ASSERT_EQ(r.code, kExitOk) << cmd << ": " << r.err;
    }
    std::map<std::string, std::string> files;
    for (const auto& e : fs::recursive_directory_iterator(out)) {
      if (!e.is_regular_file()) continue;
      const auto rel = fs::relative(e.path(), out).string();
      if (rel == "config.json") continue;  // records its own output path
      files[rel] = Sha256File(e.path());
    }
    if (pass == 0) {
      first = files;
      // One dependence file per active feature.
      std::size_t dependence = 0;
      for (const auto& [rel, sha] : files) dependence += rel.rfind("report/dependence/", 0) == 0;
      EXPECT_EQ(dependence, 7u);
      EXPECT_TRUE(files.count("report/metadata.json"));
      EXPECT_TRUE(files.count("report/heatmap_wind_north__flow_DK.csv"));
      EXPECT_TRUE(files.count("report/kde_wind_north__flow_DK.csv"));
    } else {
      EXPECT_EQ(files, first);
    }
  }
}

TEST(Report, MarginalMeansMatchDirectGroupBy) {
  Rng rng(5);
  std::vector<double> x(3000), y(3000), z(3000);
  for (std::size_t i = 0; i < x.size(); ++i) {
    x[i] = rng.Uniform(0, 100);
    y[i] = rng.Normal(0, 10);
    z[i] = 0.5 * x[i] + rng.Normal();
  }
  const BinnedGrid grid = BinnedMeans(x, y, z, 30, 30);
  const auto marginal = MarginalMeansX(grid);
  // Independent group-by over the x bin edges.
  const double lo = *std::min_element(x.begin(), x.end());
  const double hi = *std::max_element(x.begin(), x.end());
  const double width = (hi - lo) / 30.0;
  std::vector<double> sum(30, 0.0);
  std::vector<int> count(30, 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    int b = static_cast<int>(std::floor((x[i] - lo) / width));
    b = std::clamp(b, 0, 29);
    sum[b] += z[i];
    ++count[b];
  }
  for (int b = 0; b < 30; ++b) {
    ASSERT_GT(count[b], 0);
    EXPECT_NEAR(marginal[b], sum[b] / count[b], 1e-9);
  }
  std::size_t total = 0;
  for (auto c : grid.count) total += c;
  EXPECT_EQ(total, x.size());
}

TEST(Report, EmptyCellsAreBlankInCsv) {
  const std::vector<double> x = {0, 10}, y = {0, 10}, z = {1, 3};
  const auto grid = BinnedMeans(x, y, z, 2, 2);
  EXPECT_TRUE(std::isnan(grid.Mean(0, 1)));
  EXPECT_EQ(grid.Mean(1, 1), 3.0);
  const std::string csv = BinnedGridCsv(grid);
  EXPECT_NE(csv.find(",0,\n"), std::string::npos);
}

TEST(Report, KdeIntegratesToOneAndUsesScott) {
  Rng rng(2);
  std::vector<double> x(500), y(500);
  for (std::size_t i = 0; i < x.size(); ++i) {
    x[i] = rng.Normal(0, 1);
    y[i] = rng.Normal(5, 2);
  }
  const auto kde = GaussianKde2d(x, y, 80);
  double mass = 0.0;
  const double dx = kde.xs[1] - kde.xs[0];
  const double dy = kde.ys[1] - kde.ys[0];
  for (double d : kde.density) mass += d * dx * dy;
  EXPECT_NEAR(mass, 1.0, 0.05);
  double mean = 0, var = 0;
  for (double v : x) mean += v;
  mean /= 500;
  for (double v : x) var += (v - mean) * (v - mean);
  const double sd = std::sqrt(var / 499);
  EXPECT_NEAR(kde.bandwidth_x, sd * std::pow(500.0, -1.0 / 6.0), 1e-12);
  EXPECT_NEAR(ScottBandwidth(x, 2), kde.bandwidth_x, 1e-15);
}

}  // namespace
}  // namespace gridxai::cli

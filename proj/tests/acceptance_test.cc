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

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "gridxai/cli/commands.h"
#include "gridxai/cli/config.h"
#include "gridxai/common/csv.h"
#include "gridxai/common/error.h"
#include "gridxai/common/sha256.h"
#include "gridxai/dataset/dataset_io.h"
#include "gridxai/dataset/features.h"
#include "gridxai/dataset/intervention.h"
#include "gridxai/dataset/pipeline.h"
#include "gridxai/eval/cross_validation.h"
#include "gridxai/eval/metrics.h"
#include "gridxai/eval/rfe.h"
#include "gridxai/eval/split.h"
#include "gridxai/eval/synthetic.h"
#include "gridxai/gbt/model_io.h"
#include "gridxai/gbt/predict.h"
#include "gridxai/gbt/trainer.h"
#include "gridxai/ingest/redispatch_csv.h"
#include "gridxai/ingest/transport.h"
#include "gridxai/shap/brute_force.h"
#include "gridxai/shap/importance.h"
#include "gridxai/shap/interaction.h"
#include "gridxai/shap/tree_shap.h"
#include "test_util.h"

namespace gridxai {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

// Frozen from the first run on the committed fixtures.
constexpr const char* kGoldenFixtureDataset =
    "58df44da293c466986e219bc85f038e73e51ac42fdf4651a23dec446fe7bfca9";
constexpr const char* kGoldenHourlyTarget =
    "ebc5391c555930f493af58b38d65b06fc20bb72bf67355446657f81d639bac2b";

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void Check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

double Seconds(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Trained models are collected for the local-accuracy check.
std::vector<std::pair<gbt::Ensemble, FeatureMatrix>>& TrainedModels() {
  static std::vector<std::pair<gbt::Ensemble, FeatureMatrix>> models;
  return models;
}

gbt::Hyperparameters StudyHp(std::uint64_t seed) {
  gbt::Hyperparameters hp;
  hp.n_trees = 100;
  hp.max_depth = 4;
  hp.learning_rate = 0.1;
  hp.seed = seed;
  return hp;
}

void Criterion1(Outcome& o) {
  const auto t0 = Clock::now();
  Rng rng(20240101);
  double worst = 0.0;
  for (int m = 0; m < 200; ++m) {
    const auto model = testing::RandomEnsemble(rng, 6, 4, 10);
    for (int s = 0; s < 20; ++s) {
      const auto row = testing::RandomRow(rng, model.n_features());
      const auto fast = shap::TreeShapRow(model, row);
      const auto slow = shap::BruteForceShap(model, row);
      for (std::size_t j = 0; j < fast.size(); ++j) {
        worst = std::max(worst, std::abs(fast[j] - slow[j]));
      }
    }
  }
  o.Check(worst <= 1e-9, "tree_shap vs brute force");
  double worst_local = 0.0;
  std::size_t samples = 0;
  for (const auto& [model, x] : TrainedModels()) {
    const auto result = shap::TreeShap(model, x);
    const auto pred = gbt::Predict(model, x);
    for (std::size_t i = 0; i < result.n_samples; ++i) {
      double sum = result.base_value;
      for (double v : result.row(i)) sum += v;
      worst_local = std::max(worst_local, std::abs(sum - pred[i]));
      ++samples;
    }
  }
  o.Check(samples > 0, "no trained models");
  o.Check(worst_local <= 1e-9, "local accuracy");
  const double secs = Seconds(t0);
  o.Check(secs <= 120.0, "runtime");
  o.detail << "max|tree-brute|=" << worst << " max local error=" << worst_local
           << " over " << samples << " samples of " << TrainedModels().size()
           << " trained models, " << secs << "s";
}

void Criterion2(Outcome& o) {
  Rng rng(20240101);
  double worst_sum = 0.0;
  for (int m = 0; m < 200; ++m) {
    const auto model = testing::RandomEnsemble(rng, 6, 4, 10);
    const std::size_t n = model.n_features();
    for (int s = 0; s < 20; ++s) {
      const auto row = testing::RandomRow(rng, n);
      const auto phi = shap::TreeShapRow(model, row);
      const auto inter = shap::InteractionRow(model, row);
      for (std::size_t a = 0; a < n; ++a) {
        double sum = 0.0;
        for (std::size_t b = 0; b < n; ++b) sum += inter[a * n + b];
        worst_sum = std::max(worst_sum, std::abs(sum - phi[a]));
      }
    }
  }
  double worst_off = 0.0;
  for (int m = 0; m < 100; ++m) {
    const auto model = testing::RandomEnsemble(rng, 6, 1, 10);  // stumps only
    const std::size_t n = model.n_features();
    for (int s = 0; s < 20; ++s) {
      const auto inter = shap::InteractionRow(model, testing::RandomRow(rng, n));
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          if (a != b) worst_off = std::max(worst_off, std::abs(inter[a * n + b]));
        }
      }
    }
  }
  o.Check(worst_sum <= 1e-8, "row sums");
  o.Check(worst_off <= 1e-9, "additive off-diagonal");
  o.detail << "max|rowsum-phi|=" << worst_sum << " max additive off-diagonal=" << worst_off;
}

void Criterion3(Outcome& o) {
  int explained = 0;
  for (const auto& [model, x] : TrainedModels()) {
    // An appended constant column is never split on.
    FeatureMatrix with_unused = x;
    with_unused.AddColumn({"unused_constant", "MW"}, std::vector<double>(x.rows(), 1.0));
    gbt::Ensemble widened = model;
    widened.feature_names.push_back("unused_constant");
    const auto fi = shap::ComputeFeatureImportance(shap::TreeShap(widened, with_unused));
    const double top = *std::max_element(fi.values.begin(), fi.values.end());
    o.Check(top == 1.0, "max FI == 1");
    o.Check(fi.values.back() == 0.0, "unused FI == 0");
    std::vector<bool> used(widened.n_features(), false);
    for (const auto& t : widened.trees) {
      for (const auto& n : t.nodes) {
        if (!n.is_leaf()) used[static_cast<std::size_t>(n.split_feature)] = true;
      }
    }
    for (std::size_t j = 0; j < used.size(); ++j) {
      if (!used[j]) o.Check(fi.values[j] == 0.0, "unused feature " + fi.feature_names[j]);
    }
    ++explained;
  }
  o.Check(explained > 0, "no datasets explained");
  o.detail << explained << " explained datasets";
}

void Criterion4(Outcome& o) {
  const auto records = dataset::RecordsFromJsonLines(
      ReadFile(testing::FixturesDir() / "interventions_1000.jsonl"));
  const TimeWindow window{MakeUtc(2021, 3, 1), MakeUtc(2021, 4, 1)};
  const auto target = dataset::HourlyVolume(records, window);
  double expected = 0.0;
  for (const auto& r : records) expected += r.power_mw * r.duration_hours();
  const double total =
      std::accumulate(target.volume_mwh.begin(), target.volume_mwh.end(), 0.0);
  const double rel = std::abs(total - expected) / expected;
  o.Check(rel <= 1e-6, "energy conservation");

  std::size_t cross_border_ct = 0;
  for (const auto& r : records) {
    cross_border_ct += r.cross_border && r.kind == dataset::MeasureKind::kCountertrade;
  }
  const auto completed = dataset::CompleteCrossBorder(records);
  const std::size_t added = completed.size() - records.size();
  o.Check(added == cross_border_ct, "one mirror per cross-border countertrade");
  o.Check(dataset::CompleteCrossBorder(completed).size() == completed.size(),
          "completion idempotent");

  std::ostringstream target_csv;
  for (std::size_t i = 0; i < target.hours.size(); ++i) {
    target_csv << FormatIso(target.hours[i]) << ',' << FormatDouble(target.volume_mwh[i])
               << '\n';
  }
  const std::string target_sha = Sha256Hex(target_csv.str());

  // Fixture month end to end, twice.
  std::vector<std::string> dataset_sha;
  for (int pass = 0; pass < 2; ++pass) {
    cli::RunConfig c = cli::DefaultConfig();
    c.out = testing::TempDir("acceptance_c4_" + std::to_string(pass));
    c.fixtures = testing::FixturesDir() / "entsoe";
    c.window = {MakeUtc(2021, 10, 1), MakeUtc(2021, 11, 1)};
    std::ostringstream log;
    cli::RunIngest(c, log);
    cli::RunBuild(c, log);
    dataset_sha.push_back(Sha256File(c.DatasetPath()));
  }
  o.Check(dataset_sha[0] == dataset_sha[1], "rerun checksum");
  o.Check(dataset_sha[0] == kGoldenFixtureDataset, "golden dataset checksum");
  o.Check(target_sha == kGoldenHourlyTarget, "golden hourly target checksum");
  o.detail << "relative energy error=" << rel << ", mirrors added=" << added << "/"
           << cross_border_ct << ", dataset sha=" << dataset_sha[0].substr(0, 16)
           << ", target sha=" << target_sha.substr(0, 16);
}

void Criterion5(Outcome& o) {
  // Hourly stamps with holes, as left after dropping incomplete rows.
  Rng holes(5);
  std::vector<UtcHour> hours;
  for (UtcHour h = MakeUtcHour(2021, 1, 1); h < MakeUtcHour(2021, 3, 2);
       h += std::chrono::hours(1)) {
    if (holes.Uniform() < 0.95) hours.push_back(h);
  }
  std::size_t pairs = 0;
  std::size_t violations = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto folds = eval::GroupGapSplit(hours, {.n_folds = 5, .seed = seed});
    for (const auto& f : folds) {
      for (auto a : f.train) {
        for (auto b : f.test) {
          ++pairs;
          if (std::chrono::abs(hours[a] - hours[b]) <= std::chrono::hours(24)) ++violations;
        }
      }
    }
  }
  o.Check(violations == 0, "train hour within 24 h of a test hour");
  o.detail << pairs << " train/test pairs checked over 50 seeds, " << violations
           << " violations";
}

bool NoiseEliminatedFirst(const eval::RfeTrace& trace) {
  const auto informative = eval::StudyInformativeFeatures();
  int last_noise = -1;
  int first_informative = static_cast<int>(trace.steps.size());
  for (int k = 0; k < static_cast<int>(trace.steps.size()); ++k) {
    const std::string& e = trace.steps[static_cast<std::size_t>(k)].eliminated;
    if (e.rfind("noise_", 0) == 0) last_noise = k;
    if (std::find(informative.begin(), informative.end(), e) != informative.end()) {
      first_informative = std::min(first_informative, k);
    }
  }
  return last_noise < first_informative;
}

void Criterion6(Outcome& o) {
  const auto t0 = Clock::now();
  // (i), (ii): the reduced model on synthetic study data.
  const auto study = eval::GenerateStudy({.n_days = 60, .seed = 1, .n_noise_features = 0});
  eval::CvConfig cv;
  cv.split.seed = 1;
  const auto result = eval::CrossValidate(study.x, study.y, StudyHp(1), cv, true);
  const auto fi = shap::AverageImportance(result.fold_importance);
  const std::string top = fi.feature_names[fi.ArgMax()];
  o.Check(result.mean_r2 >= 0.85, "mean CV R2 >= 0.85");
  o.Check(top == "wind_north", "wind_north ranked first");
  const auto model = gbt::Fit(study.x, study.y, StudyHp(1));
  TrainedModels().emplace_back(model, study.x);

  // (iii): RFE with injected noise features over 50 seeds.
  int ok = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto data = eval::GenerateStudy(
        {.n_days = 40, .seed = 100 + seed, .n_noise_features = 2});
    auto hp = StudyHp(seed);
    hp.n_trees = 60;
    eval::CvConfig rcv;
    rcv.split.seed = seed;
    ok += NoiseEliminatedFirst(eval::RecursiveFeatureElimination(data.x, data.y, hp, rcv));
  }
  o.Check(ok >= 45, "noise eliminated first in >= 45/50 seeds");
  o.detail << "mean CV R2=" << result.mean_r2 << ", top feature=" << top
           << ", noise-first seeds=" << ok << "/50";

  // Real data, when supplied.
  if (const char* real = std::getenv("GRIDXAI_REAL_DATASET")) {
    const auto ds = dataset::LoadDataset(real);
    const auto x = ds.x.Select(dataset::ReducedFeatureNames());
    const auto r = eval::CrossValidate(x, ds.y, StudyHp(0), {});
    o.Check(r.mean_r2 >= 0.65, "real-data mean CV R2 >= 0.65");
    o.detail << ", real-data mean CV R2=" << r.mean_r2;
  } else {
    o.detail << ", real-data check skipped (GRIDXAI_REAL_DATASET unset)";
  }
  o.detail << ", " << Seconds(t0) << "s";
}

void Criterion7(Outcome& o) {
  const auto train = eval::GenerateLinear(2000, 7);
  const auto test = eval::GenerateLinear(1000, 8);
  gbt::Hyperparameters hp;
  hp.n_trees = 300;
  hp.max_depth = 3;
  gbt::FitTrace trace;
  const auto model = gbt::Fit(train.x, train.y, hp, Execution::kParallel, &trace);
  const double r2 = eval::R2(test.y, gbt::Predict(model, test.x));
  o.Check(r2 >= 0.95, "held-out R2 >= 0.95");
  bool monotone = true;
  for (std::size_t i = 1; i < trace.training_mse.size(); ++i) {
    monotone &= trace.training_mse[i] <= trace.training_mse[i - 1];
  }
  o.Check(monotone, "training loss non-increasing");
  const std::string text = gbt::SerializeModel(model);
  const auto back = gbt::DeserializeModel(text);
  o.Check(back == model, "model JSON round-trip");
  o.Check(gbt::Predict(back, test.x) == gbt::Predict(model, test.x), "round-trip predictions");
  TrainedModels().emplace_back(model, test.x);
  o.detail << "held-out R2=" << r2 << ", " << model.trees.size()
           << " trees with non-increasing loss, JSON round-trip exact";
}

void Criterion8(Outcome& o) {
  auto distinct_hours = [](const fs::path& p) {
    const auto parsed = ingest::ParseRedispatchCsv(ReadFile(p));
    std::vector<UtcHour> h;
    for (const auto& r : parsed.records) h.push_back(FloorHour(r.start));
    std::sort(h.begin(), h.end());
    h.erase(std::unique(h.begin(), h.end()), h.end());
    return std::make_pair(h.size(), parsed.rejects.size());
  };
  const auto fall = distinct_hours(testing::FixturesDir() / "redispatch_dst_fall.csv");
  const auto spring = distinct_hours(testing::FixturesDir() / "redispatch_dst_spring.csv");
  o.Check(fall.first == 25 && fall.second == 0, "fall-back day has 25 UTC hours");
  o.Check(spring.first == 23 && spring.second == 0, "spring-forward day has 23 UTC hours");

  const std::vector<std::pair<std::string, double>> numerics = {
      {"1.234,5", 1234.5}, {"0,1", 0.1}, {"-12,75", -12.75}, {"1.000.000", 1e6},
      {"3,14159", 3.14159}};
  bool exact = true;
  for (const auto& [text, value] : numerics) {
    const auto parsed = ParseGermanDecimal(text);
    exact &= parsed.has_value() && *parsed == value;
  }
  o.Check(exact, "German numerics exact");

  const std::size_t before = ingest::NetworkOperationCount();
  cli::RunConfig c = cli::DefaultConfig();
  c.out = testing::TempDir("acceptance_c8");
  c.fixtures = testing::FixturesDir() / "entsoe";
  c.window = {MakeUtc(2021, 10, 1), MakeUtc(2021, 11, 1)};
  std::ostringstream log;
  cli::RunIngest(c, log);
  cli::RunBuild(c, log);
  const std::size_t network_ops = ingest::NetworkOperationCount() - before;
  o.Check(network_ops == 0, "zero network operations in fixture mode");

  // The fixture dataset is also explained for the importance check.
  const auto ds = dataset::LoadDataset(c.DatasetPath());
  TrainedModels().emplace_back(gbt::Fit(ds.x, ds.y, StudyHp(0)), ds.x);
  o.detail << "fall day " << fall.first << " hours, spring day " << spring.first
           << " hours, German numerics exact, network operations=" << network_ops;
}

}  // namespace
}  // namespace gridxai

int main() {
  using gridxai::Outcome;
  // Model-producing criteria run first; 1 and 3 check every trained model.
  const std::vector<std::pair<int, std::function<void(Outcome&)>>> order = {
      {7, gridxai::Criterion7}, {6, gridxai::Criterion6}, {8, gridxai::Criterion8},
      {1, gridxai::Criterion1}, {2, gridxai::Criterion2}, {3, gridxai::Criterion3},
      {4, gridxai::Criterion4}, {5, gridxai::Criterion5}};
  std::map<int, std::string> lines;
  bool all = true;
  for (const auto& [id, fn] : order) {
    Outcome o;
    try {
      fn(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    all &= o.pass;
    lines[id] = (o.pass ? "PASS" : "FAIL") + std::string(" criterion ") +
                std::to_string(id) + ": " + o.detail.str();
  }
  for (const auto& [id, line] : lines) std::cout << line << "\n";
  return all ? 0 : 1;
}

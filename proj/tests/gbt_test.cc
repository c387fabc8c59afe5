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
#include <limits>
#include <vector>

#include <gtest/gtest.h>

#include "gridxai/common/error.h"
#include "gridxai/common/random.h"
#include "gridxai/eval/metrics.h"
#include "gridxai/eval/synthetic.h"
#include "gridxai/gbt/binning.h"
#include "gridxai/gbt/model_io.h"
#include "gridxai/gbt/predict.h"
#include "gridxai/gbt/trainer.h"
#include "test_util.h"

namespace gridxai::gbt {
namespace {

using testing::MakeMatrix;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

TEST(Binning, ThresholdsSeparateDistinctValues) {
  const std::vector<double> v = {3, 1, 2, 2, 1, 3, kNaN};
  const FeatureBins bins = ComputeBins(v, 256);
  ASSERT_EQ(bins.thresholds.size(), 2u);
  EXPECT_EQ(bins.Code(1.0), 0);
  EXPECT_EQ(bins.Code(2.0), 1);
  EXPECT_EQ(bins.Code(3.0), 2);
  EXPECT_EQ(bins.Code(kNaN), bins.missing_code());
  // Codes agree with the tree's `x < threshold` rule.
  for (double x : {1.0, 2.0, 3.0}) {
    const auto c = bins.Code(x);
    if (c > 0) EXPECT_GE(x, bins.thresholds[c - 1]);
    if (c < bins.thresholds.size()) EXPECT_LT(x, bins.thresholds[c]);
  }
}

TEST(Binning, RespectsBinLimit) {
  Rng rng(1);
  std::vector<double> v(5000);
  for (auto& x : v) x = rng.Normal();
  const FeatureBins bins = ComputeBins(v, 32);
  EXPECT_LE(bins.value_bins(), 32u);
  for (std::size_t i = 1; i < bins.thresholds.size(); ++i) {
    EXPECT_LT(bins.thresholds[i - 1], bins.thresholds[i]);
  }
}

// Exhaustive split search written directly from the gain definition.
SplitCandidate OracleSplit(const BinnedMatrix& binned,
                           const std::vector<std::size_t>& rows,
                           const std::vector<double>& g, double min_cover,
                           double l2) {
  auto score = [&](double gs, double n) { return gs * gs / (n + l2); };
  double gt = 0.0;
  for (auto r : rows) gt += g[r];
  const double parent = score(gt, static_cast<double>(rows.size()));
  SplitCandidate best;
  for (std::size_t f = 0; f < binned.bins.size(); ++f) {
    const auto codes = binned.column(f);
    const auto missing = binned.bins[f].missing_code();
    for (int b = 0; b + 1 < static_cast<int>(binned.bins[f].value_bins()); ++b) {
      for (Branch dir : {Branch::kLeft, Branch::kRight}) {
        double gl = 0, nl = 0, gr = 0, nr = 0, nl_value = 0, nr_value = 0;
        for (auto r : rows) {
          const bool is_missing = codes[r] == missing;
          const bool left = is_missing ? dir == Branch::kLeft : codes[r] <= b;
          (left ? gl : gr) += g[r];
          (left ? nl : nr) += 1;
          if (!is_missing) (left ? nl_value : nr_value) += 1;
        }
        if (nl_value == 0 || nr_value == 0) continue;
        if (nl < std::max(min_cover, 1.0) || nr < std::max(min_cover, 1.0)) continue;
        const double gain = score(gl, nl) + score(gr, nr) - parent;
        if (gain > best.gain + 1e-12) {
          best.feature = static_cast<int>(f);
          best.bin = b;
          best.gain = gain;
        }
      }
    }
  }
  return best;
}

TEST(FindBestSplit, MatchesExhaustiveOracleSerialAndParallel) {
  Rng rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 60 + rng.Index(100);
    std::vector<std::vector<double>> cols(4, std::vector<double>(n));
    for (auto& c : cols) {
      for (auto& v : c) {
        v = rng.Uniform() < 0.1 ? kNaN : std::round(rng.Uniform(0, 12));
      }
    }
    const auto x = MakeMatrix({"a", "b", "c", "d"}, cols);
    const BinnedMatrix binned = Quantize(x, 256);
    std::vector<double> g(n);
    for (auto& v : g) v = rng.Normal();
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < n; ++i) {
      if (rng.Uniform() < 0.8) rows.push_back(i);
    }
    const std::vector<int> features = {0, 1, 2, 3};
    const double min_cover = static_cast<double>(rng.Integer(1, 5));
    const SplitCandidate oracle = OracleSplit(binned, rows, g, min_cover, 1.0);
    for (Execution exec : {Execution::kSerial, Execution::kParallel}) {
      const SplitCandidate s =
          FindBestSplit(binned, rows, g, features, min_cover, 1.0, exec);
      ASSERT_EQ(s.valid(), oracle.valid());
      if (!oracle.valid()) continue;
      EXPECT_NEAR(s.gain, oracle.gain, 1e-9 * std::max(1.0, oracle.gain));
      EXPECT_EQ(s.feature, oracle.feature);
      EXPECT_EQ(s.bin, oracle.bin);
    }
  }
}

TEST(Fit, TrainingLossNonIncreasingPerTree) {
  const auto data = eval::GenerateStudy({.n_days = 20, .seed = 3});
  Hyperparameters hp;
  hp.n_trees = 60;
  hp.max_depth = 4;
  FitTrace trace;
  const Ensemble model = Fit(data.x, data.y, hp, Execution::kParallel, &trace);
  ASSERT_EQ(trace.training_mse.size(), 61u);
  for (std::size_t i = 1; i < trace.training_mse.size(); ++i) {
    EXPECT_LE(trace.training_mse[i], trace.training_mse[i - 1]);
  }
  // The trace agrees with predictions from the finished model.
  const auto pred = Predict(model, data.x);
  EXPECT_NEAR(eval::MeanSquaredError(pred, data.y), trace.training_mse.back(),
              1e-9 * trace.training_mse.back());
}

TEST(Fit, SerialAndParallelProduceIdenticalModels) {
  const auto data = eval::GenerateStudy({.n_days = 15, .seed = 11});
  Hyperparameters hp;
  hp.n_trees = 40;
  hp.max_depth = 5;
  hp.subsample_rows = 0.8;
  hp.subsample_features = 0.7;
  hp.seed = 5;
  const Ensemble a = Fit(data.x, data.y, hp, Execution::kSerial);
  const Ensemble b = Fit(data.x, data.y, hp, Execution::kParallel);
  EXPECT_EQ(a, b);
  EXPECT_EQ(Predict(a, data.x, Execution::kSerial),
            Predict(b, data.x, Execution::kParallel));
}

TEST(Fit, SameSeedIsDeterministicDifferentSeedDiffers) {
  const auto data = eval::GenerateStudy({.n_days = 10, .seed = 2});
  Hyperparameters hp;
  hp.n_trees = 20;
  hp.subsample_rows = 0.7;
  hp.seed = 1;
  const Ensemble a = Fit(data.x, data.y, hp);
  const Ensemble b = Fit(data.x, data.y, hp);
  EXPECT_EQ(a, b);
  hp.seed = 2;
  EXPECT_NE(a, Fit(data.x, data.y, hp));
}

TEST(Fit, RecoversLinearTarget) {
  const auto train = eval::GenerateLinear(2000, 1);
  const auto test = eval::GenerateLinear(500, 2);
  Hyperparameters hp;
  hp.n_trees = 300;
  hp.max_depth = 3;
  const Ensemble model = Fit(train.x, train.y, hp);
  EXPECT_GE(eval::R2(test.y, Predict(model, test.x)), 0.95);
}

TEST(Fit, CoversMatchTrainingRowsAndTreesValidate) {
  const auto data = eval::GenerateStudy({.n_days = 10, .seed = 4});
  Hyperparameters hp;
  hp.n_trees = 10;
  const Ensemble model = Fit(data.x, data.y, hp);
  EXPECT_NO_THROW(model.Validate());
  for (const auto& tree : model.trees) {
    EXPECT_EQ(tree.nodes[0].cover, static_cast<double>(data.x.rows()));
    EXPECT_LE(tree.MaxDepth(), hp.max_depth);
  }
}

TEST(Fit, ConstantTargetYieldsStumpAtMean) {
  const auto x = MakeMatrix({"a"}, {{1, 2, 3, 4, 5}});
  const std::vector<double> y(5, 7.5);
  const Ensemble model = Fit(x, y, Hyperparameters{});
  for (double p : Predict(model, x)) EXPECT_DOUBLE_EQ(p, 7.5);
}

TEST(Fit, RejectsInvalidInput) {
  const auto x = MakeMatrix({"a"}, {{1, 2, 3}});
  EXPECT_THROW(Fit(x, std::vector<double>{1, 2}, Hyperparameters{}),
               InvalidInputError);
  EXPECT_THROW(Fit(x, std::vector<double>{1, kNaN, 2}, Hyperparameters{}),
               InvalidInputError);
  Hyperparameters bad;
  bad.max_depth = 0;
  EXPECT_THROW(bad.Validate(), InvalidInputError);
  bad = {};
  bad.learning_rate = 0.0;
  EXPECT_THROW(bad.Validate(), InvalidInputError);
  bad = {};
  bad.subsample_rows = 1.5;
  EXPECT_THROW(bad.Validate(), InvalidInputError);
}

TEST(Predict, HandlesMissingValuesWithDefaultBranch) {
  Ensemble model;
  model.feature_names = {"a"};
  RegressionTree tree;
  tree.nodes.resize(3);
  tree.nodes[0] = {.split_feature = 0, .threshold = 1.0, .left = 1, .right = 2,
                   .default_branch = Branch::kRight, .cover = 4};
  tree.nodes[1].leaf_value = -1;
  tree.nodes[1].cover = 1;
  tree.nodes[2].leaf_value = 5;
  tree.nodes[2].cover = 3;
  model.trees.push_back(tree);
  EXPECT_EQ(PredictRow(model, std::vector<double>{0.5}), -1.0);
  EXPECT_EQ(PredictRow(model, std::vector<double>{1.0}), 5.0);
  EXPECT_EQ(PredictRow(model, std::vector<double>{kNaN}), 5.0);
}

TEST(Predict, SchemaMismatchRaises) {
  Rng rng(3);
  const Ensemble model = testing::RandomEnsemble(rng, 3);
  const auto x = MakeMatrix({"zz"}, {{1.0}});
  EXPECT_THROW(Predict(model, x), SchemaError);
}

TEST(ModelIo, RoundTripIsValueExact) {
  const auto data = eval::GenerateStudy({.n_days = 10, .seed = 9});
  Hyperparameters hp;
  hp.n_trees = 25;
  hp.learning_rate = 0.1234567890123;
  const Ensemble model = Fit(data.x, data.y, hp);
  const std::string text = SerializeModel(model);
  const Ensemble back = DeserializeModel(text);
  EXPECT_EQ(back, model);
  EXPECT_EQ(SerializeModel(back), text);
  EXPECT_EQ(Predict(back, data.x), Predict(model, data.x));
}

TEST(ModelIo, RandomEnsemblesRoundTrip) {
  Rng rng(12);
  for (int i = 0; i < 50; ++i) {
    const Ensemble model = testing::RandomEnsemble(rng);
    EXPECT_EQ(DeserializeModel(SerializeModel(model)), model);
  }
}

TEST(ModelIo, RejectsCorruptModels) {
  Rng rng(5);
  Ensemble model = testing::RandomEnsemble(rng, 3, 3, 2);
  while (model.trees[0].nodes.size() < 3) model = testing::RandomEnsemble(rng, 3, 3, 2);
  auto j = ModelToJson(model);
  auto broken = j;
  broken["trees"][0]["nodes"][0]["cover"] = 1e9;
  EXPECT_THROW(ModelFromJson(broken), ModelIntegrityError);
  broken = j;
  broken["trees"][0]["nodes"][0]["split_feature"] = 99;
  EXPECT_THROW(ModelFromJson(broken), ModelIntegrityError);
  broken = j;
  broken["format_version"] = "999";
  EXPECT_THROW(ModelFromJson(broken), Error);
  EXPECT_THROW(DeserializeModel("{not json"), Error);
}

TEST(TreeValidate, DetectsCycles) {
  RegressionTree tree;
  tree.nodes.resize(3);
  tree.nodes[0] = {.split_feature = 0, .left = 1, .right = 0, .cover = 2};
  tree.nodes[1].cover = 1;
  EXPECT_THROW(tree.Validate(1), ModelIntegrityError);
}


TEST(Fit, SeparableStepGivesExactStump) {
  const auto x = MakeMatrix({"x"}, {{0, 0, 1, 1, 0, 1}});
  const std::vector<double> y = {0, 0, 10, 10, 0, 10};
  Hyperparameters hp;
  hp.n_trees = 1;
  hp.max_depth = 1;
  hp.learning_rate = 1.0;
  hp.l2_leaf_penalty = 0.0;
  const Ensemble model = Fit(x, y, hp);
  ASSERT_EQ(model.trees.size(), 1u);
  EXPECT_EQ(model.trees[0].nodes.size(), 3u);
  EXPECT_EQ(model.base_score, 5.0);
  EXPECT_EQ(Predict(model, x), y);
}

TEST(Predict, ConstantModelReturnsBase) {
  Ensemble model;
  model.feature_names = {"a", "b"};
  model.base_score = 5.0;
  const auto x = MakeMatrix({"a", "b"}, {{1, kNaN}, {3, 4}});
  EXPECT_EQ(Predict(model, x), (std::vector<double>{5.0, 5.0}));
}

// Independent recursive evaluator.
double Descend(const RegressionTree& t, int i, const std::vector<double>& row) {
  const TreeNode& n = t.nodes[static_cast<std::size_t>(i)];
  if (n.split_feature == kNoFeature) return n.leaf_value;
  const double v = row[static_cast<std::size_t>(n.split_feature)];
  bool left;
  if (v != v) {
    left = n.default_branch == Branch::kLeft;
  } else {
    left = v < n.threshold;
  }
  return Descend(t, left ? n.left : n.right, row);
}

TEST(Predict, MatchesRecursiveOracle) {
  Rng rng(31);
  for (int m = 0; m < 50; ++m) {
    const Ensemble model = testing::RandomEnsemble(rng);
    std::vector<std::vector<double>> cols(model.n_features(), std::vector<double>(30));
    std::vector<std::vector<double>> rows(30);
    for (std::size_t r = 0; r < 30; ++r) {
      rows[r] = testing::RandomRow(rng, model.n_features());
      for (std::size_t c = 0; c < model.n_features(); ++c) cols[c][r] = rows[r][c];
    }
    const auto pred = Predict(model, MakeMatrix(model.feature_names, cols));
    for (std::size_t r = 0; r < 30; ++r) {
      double expected = model.base_score;
      for (const auto& t : model.trees) expected += Descend(t, 0, rows[r]);
      EXPECT_NEAR(pred[r], expected, 1e-12 * std::max(1.0, std::abs(expected)));
    }
  }
}

TEST(Fit, ProducesRequestedTreeCountAndMeanBase) {
  const auto data = eval::GenerateStudy({.n_days = 5, .seed = 8});
  Hyperparameters hp;
  hp.n_trees = 17;
  const Ensemble model = Fit(data.x, data.y, hp);
  EXPECT_EQ(model.trees.size(), 17u);
  double mean = 0.0;
  for (double v : data.y) mean += v;
  EXPECT_DOUBLE_EQ(model.base_score, mean / static_cast<double>(data.y.size()));
}

}  // namespace
}  // namespace gridxai::gbt

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
#include <vector>

#include <gtest/gtest.h>

#include "gridxai/common/error.h"
#include "gridxai/eval/synthetic.h"
#include "gridxai/gbt/predict.h"
#include "gridxai/gbt/trainer.h"
#include "gridxai/shap/brute_force.h"
#include "gridxai/shap/dependence.h"
#include "gridxai/shap/export.h"
#include "gridxai/shap/importance.h"
#include "gridxai/shap/interaction.h"
#include "gridxai/shap/tree_shap.h"
#include "test_util.h"

namespace gridxai::shap {
namespace {

using testing::MakeMatrix;
using testing::RandomEnsemble;
using testing::RandomRow;

TEST(TreeShap, MatchesBruteForceOnRandomEnsembles) {
  Rng rng(101);
  for (int m = 0; m < 60; ++m) {
    const gbt::Ensemble model = RandomEnsemble(rng);
    for (int s = 0; s < 10; ++s) {
      const auto row = RandomRow(rng, model.n_features());
      const auto fast = TreeShapRow(model, row);
      const auto slow = BruteForceShap(model, row);
      ASSERT_EQ(fast.size(), slow.size());
      for (std::size_t j = 0; j < fast.size(); ++j) {
        EXPECT_NEAR(fast[j], slow[j], 1e-9);
      }
    }
  }
}

TEST(TreeShap, LocalAccuracy) {
  Rng rng(5);
  for (int m = 0; m < 30; ++m) {
    const gbt::Ensemble model = RandomEnsemble(rng);
    const double base = ExpectedValue(model);
    for (int s = 0; s < 10; ++s) {
      const auto row = RandomRow(rng, model.n_features());
      double sum = base;
      for (double v : TreeShapRow(model, row)) sum += v;
      EXPECT_NEAR(sum, gbt::PredictRow(model, row), 1e-9);
    }
  }
}

TEST(TreeShap, ExpectedValueIsCoverWeightedMean) {
  gbt::Ensemble model;
  model.feature_names = {"a"};
  model.base_score = 1.0;
  gbt::RegressionTree tree;
  tree.nodes.resize(3);
  tree.nodes[0] = {.split_feature = 0, .threshold = 0.0, .left = 1, .right = 2,
                   .cover = 4};
  tree.nodes[1] = {.leaf_value = 2.0, .cover = 1};
  tree.nodes[2] = {.leaf_value = 6.0, .cover = 3};
  model.trees.push_back(tree);
  EXPECT_DOUBLE_EQ(ExpectedValue(model), 1.0 + (2.0 * 1 + 6.0 * 3) / 4.0);
  // Single split: phi = f(x) - E[f].
  const auto phi = TreeShapRow(model, std::vector<double>{-1.0});
  EXPECT_DOUBLE_EQ(phi[0], 2.0 - 5.0);
}

TEST(TreeShap, SerialAndParallelAgree) {
  const auto data = eval::GenerateStudy({.n_days = 10, .seed = 1});
  gbt::Hyperparameters hp;
  hp.n_trees = 30;
  const auto model = gbt::Fit(data.x, data.y, hp);
  const auto a = TreeShap(model, data.x, Execution::kSerial);
  const auto b = TreeShap(model, data.x, Execution::kParallel);
  EXPECT_EQ(a.attributions, b.attributions);
  EXPECT_EQ(a.base_value, b.base_value);
  EXPECT_EQ(a.hours, data.x.hours());
}

TEST(TreeShap, RejectsZeroCoverInternalNodes) {
  Rng rng(2);
  gbt::Ensemble model = RandomEnsemble(rng, 2, 2, 1);
  while (model.trees[0].nodes.size() < 3) model = RandomEnsemble(rng, 2, 2, 1);
  EXPECT_NO_THROW(CheckCovers(model));
  for (auto& n : model.trees[0].nodes) n.cover = 0.0;
  EXPECT_THROW(CheckCovers(model), ModelIntegrityError);
  EXPECT_THROW(ExpectedValue(model), ModelIntegrityError);
}

TEST(Interactions, MatchBruteForce) {
  Rng rng(77);
  for (int m = 0; m < 40; ++m) {
    const gbt::Ensemble model = RandomEnsemble(rng, 5, 4, 6);
    const std::size_t n = model.n_features();
    for (int s = 0; s < 5; ++s) {
      const auto row = RandomRow(rng, n);
      const auto fast = InteractionRow(model, row);
      const auto slow = BruteForceInteractions(model, row);
      ASSERT_EQ(fast.size(), n * n);
      for (std::size_t k = 0; k < fast.size(); ++k) {
        EXPECT_NEAR(fast[k], slow[k], 1e-9);
      }
    }
  }
}

TEST(Interactions, RowSumsReproduceShapAndMatrixIsSymmetric) {
  Rng rng(8);
  for (int m = 0; m < 40; ++m) {
    const gbt::Ensemble model = RandomEnsemble(rng);
    const std::size_t n = model.n_features();
    const auto row = RandomRow(rng, n);
    const auto phi = TreeShapRow(model, row);
    const auto inter = InteractionRow(model, row);
    for (std::size_t a = 0; a < n; ++a) {
      double sum = 0.0;
      for (std::size_t b = 0; b < n; ++b) {
        sum += inter[a * n + b];
        EXPECT_NEAR(inter[a * n + b], inter[b * n + a], 1e-12);
      }
      EXPECT_NEAR(sum, phi[a], 1e-8);
    }
  }
}

TEST(Interactions, AdditiveModelHasZeroOffDiagonal) {
  Rng rng(4);
  for (int m = 0; m < 20; ++m) {
    // Every tree is a stump, so the model is additively separable.
    const gbt::Ensemble model = RandomEnsemble(rng, 6, 1, 10);
    const std::size_t n = model.n_features();
    const auto row = RandomRow(rng, n);
    const auto inter = InteractionRow(model, row);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (a != b) EXPECT_NEAR(inter[a * n + b], 0.0, 1e-9);
      }
    }
  }
}

TEST(Interactions, SerialAndParallelAgree) {
  const auto data = eval::GenerateStudy({.n_days = 4, .seed = 3});
  gbt::Hyperparameters hp;
  hp.n_trees = 15;
  const auto model = gbt::Fit(data.x, data.y, hp);
  const auto a = InteractionValues(model, data.x, Execution::kSerial);
  const auto b = InteractionValues(model, data.x, Execution::kParallel);
  EXPECT_EQ(a.values, b.values);
}

TEST(BruteForce, RefusesTooManyFeatures) {
  gbt::Ensemble model;
  for (std::size_t i = 0; i <= kBruteForceMaxFeatures; ++i) {
    model.feature_names.push_back("f" + std::to_string(i));
  }
  gbt::RegressionTree stump;
  stump.nodes.resize(1);
  stump.nodes[0].cover = 1;
  model.trees.push_back(stump);
  const std::vector<double> row(model.n_features(), 0.0);
  EXPECT_THROW(BruteForceShap(model, row), CapacityError);
}

TEST(Importance, MaxIsOneAndUnusedIsZero) {
  const auto data = eval::GenerateStudy({.n_days = 10, .seed = 6});
  FeatureMatrix x = data.x;
  x.AddColumn({"unused", "MW"}, std::vector<double>(x.rows(), 3.0));
  gbt::Hyperparameters hp;
  hp.n_trees = 30;
  const auto model = gbt::Fit(x, data.y, hp);
  const auto fi = ComputeFeatureImportance(TreeShap(model, x));
  EXPECT_EQ(*std::max_element(fi.values.begin(), fi.values.end()), 1.0);
  EXPECT_EQ(fi.values[x.IndexOf("unused")], 0.0);
  EXPECT_EQ(fi.feature_names[fi.ArgMax()], "wind_north");
  // Oracle: mean |phi| per column divided by the largest one.
  const auto shap = TreeShap(model, x);
  std::vector<double> mean_abs(x.cols(), 0.0);
  for (std::size_t s = 0; s < shap.n_samples; ++s) {
    for (std::size_t j = 0; j < x.cols(); ++j) mean_abs[j] += std::abs(shap.at(s, j));
  }
  const double top = *std::max_element(mean_abs.begin(), mean_abs.end());
  for (std::size_t j = 0; j < x.cols(); ++j) {
    EXPECT_NEAR(fi.values[j], mean_abs[j] / top, 1e-12);
  }
}

TEST(Importance, AllZeroAttributionsAreDegenerate) {
  ShapResult shap;
  shap.feature_names = {"a", "b"};
  shap.n_samples = 2;
  shap.attributions.assign(4, 0.0);
  const auto fi = ComputeFeatureImportance(shap);
  EXPECT_TRUE(fi.degenerate);
  EXPECT_EQ(fi.values, (std::vector<double>{0.0, 0.0}));
}

TEST(Dependence, PairsFeatureValuesWithAttributions) {
  const auto data = eval::GenerateStudy({.n_days = 5, .seed = 2});
  gbt::Hyperparameters hp;
  hp.n_trees = 20;
  const auto model = gbt::Fit(data.x, data.y, hp);
  const auto shap = TreeShap(model, data.x);
  const auto inter = InteractionValues(model, data.x);
  const auto table = DependenceData(shap, data.x, "wind_north", std::nullopt, &inter);
  ASSERT_EQ(table.rows.size(), data.x.rows());
  const std::size_t j = data.x.IndexOf("wind_north");
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    EXPECT_EQ(table.rows[i].feature_value, data.x.at(i, j));
    EXPECT_EQ(table.rows[i].shap_value, shap.at(i, j));
  }
  EXPECT_EQ(table.color_feature, StrongestInteractionPartner(inter, "wind_north"));
  EXPECT_NE(table.color_feature, "wind_north");
  EXPECT_THROW(DependenceData(shap, data.x, "nope", std::string("wind_north")),
               InvalidInputError);
}

TEST(Export, CsvShapes) {
  const auto data = eval::GenerateStudy({.n_days = 2, .seed = 2});
  gbt::Hyperparameters hp;
  hp.n_trees = 5;
  const auto model = gbt::Fit(data.x, data.y, hp);
  const auto shap = TreeShap(model, data.x);
  const std::string csv = AttributionsCsv(shap);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'),
            static_cast<long>(data.x.rows() + 1));
  const std::string fi = ImportanceCsv(ComputeFeatureImportance(shap));
  EXPECT_EQ(std::count(fi.begin(), fi.end(), '\n'),
            static_cast<long>(data.x.cols() + 1));
}


TEST(TreeShap, ConstantModelAndBalancedStump) {
  gbt::Ensemble constant;
  constant.feature_names = {"a", "b"};
  constant.base_score = 5.0;
  EXPECT_EQ(ExpectedValue(constant), 5.0);
  EXPECT_EQ(TreeShapRow(constant, std::vector<double>{1, 2}),
            (std::vector<double>{0.0, 0.0}));

  gbt::Ensemble stump;
  stump.feature_names = {"x0", "x1"};
  gbt::RegressionTree t;
  t.nodes.resize(3);
  t.nodes[0] = {.split_feature = 0, .threshold = 0.5, .left = 1, .right = 2, .cover = 100};
  t.nodes[1] = {.leaf_value = 0.0, .cover = 50};
  t.nodes[2] = {.leaf_value = 10.0, .cover = 50};
  stump.trees.push_back(t);
  EXPECT_EQ(ExpectedValue(stump), 5.0);
  const auto phi = TreeShapRow(stump, std::vector<double>{1.0, 7.0});
  EXPECT_EQ(phi, (std::vector<double>{5.0, 0.0}));
  EXPECT_EQ(BruteForceShap(stump, std::vector<double>{1.0, 7.0}), phi);
}

TEST(BruteForce, ShapleyAxioms) {
  // f = 10 * [x0 >= 0] * [x1 >= 0] with equal covers: x0 and x1 are
  // symmetric, x2 is a dummy.
  gbt::Ensemble model;
  model.feature_names = {"x0", "x1", "x2"};
  gbt::RegressionTree t;
  t.nodes.resize(7);
  t.nodes[0] = {.split_feature = 0, .threshold = 0.0, .left = 1, .right = 2, .cover = 8};
  t.nodes[1] = {.split_feature = 1, .threshold = 0.0, .left = 3, .right = 4, .cover = 4};
  t.nodes[2] = {.split_feature = 1, .threshold = 0.0, .left = 5, .right = 6, .cover = 4};
  t.nodes[3] = {.leaf_value = 0.0, .cover = 2};
  t.nodes[4] = {.leaf_value = 0.0, .cover = 2};
  t.nodes[5] = {.leaf_value = 0.0, .cover = 2};
  t.nodes[6] = {.leaf_value = 10.0, .cover = 2};
  model.trees.push_back(t);
  const std::vector<double> row = {1.0, 1.0, 3.0};
  const auto phi = BruteForceShap(model, row);
  EXPECT_EQ(phi[2], 0.0);
  EXPECT_NEAR(phi[0], phi[1], 1e-15);
  EXPECT_NEAR(phi[0] + phi[1] + phi[2], gbt::PredictRow(model, row) - ExpectedValue(model),
              1e-12);
  // Efficiency on random instances.
  Rng rng(3);
  for (int m = 0; m < 20; ++m) {
    const auto e = RandomEnsemble(rng);
    const auto x = RandomRow(rng, e.n_features());
    double sum = 0.0;
    for (double v : BruteForceShap(e, x)) sum += v;
    EXPECT_NEAR(sum, gbt::PredictRow(e, x) - ExpectedValue(e), 1e-10);
  }
  // The AND pattern interacts.
  const auto inter = InteractionRow(model, row);
  EXPECT_GT(std::abs(inter[0 * 3 + 1]), 0.1);
  EXPECT_NEAR(inter[0 * 3 + 1], inter[1 * 3 + 0], 1e-15);
  const auto slow = BruteForceInteractions(model, row);
  for (std::size_t k = 0; k < inter.size(); ++k) EXPECT_NEAR(inter[k], slow[k], 1e-12);
}

TEST(Importance, ScaleFreeAndSingleFeature) {
  ShapResult shap;
  shap.feature_names = {"a", "b", "c"};
  shap.n_samples = 3;
  shap.attributions = {1, -2, 0.5, 3, 0.25, -1, -2, 1, 0};
  ShapResult scaled = shap;
  for (double& v : scaled.attributions) v *= 7.5;
  const auto fi = ComputeFeatureImportance(shap);
  const auto fs = ComputeFeatureImportance(scaled);
  for (std::size_t j = 0; j < 3; ++j) EXPECT_NEAR(fi.values[j], fs.values[j], 1e-15);
  EXPECT_NEAR(fs.normalizer, 7.5 * fi.normalizer, 1e-12);
  for (double v : fi.values) {
    EXPECT_GE(v, 0.0);
    EXPECT_LE(v, 1.0);
  }
  ShapResult single;
  single.feature_names = {"a"};
  single.n_samples = 2;
  single.attributions = {0.3, -0.7};
  EXPECT_EQ(ComputeFeatureImportance(single).values, (std::vector<double>{1.0}));
}

TEST(Dependence, MonotoneModelGivesMonotonePairs) {
  std::vector<double> x(200), y(200);
  for (std::size_t i = 0; i < x.size(); ++i) {
    x[i] = static_cast<double>(i);
    y[i] = 3.0 * static_cast<double>(i);
  }
  const auto m = MakeMatrix({"x"}, {x});
  gbt::Hyperparameters hp;
  hp.n_trees = 50;
  const auto model = gbt::Fit(m, y, hp);
  const auto table = DependenceData(TreeShap(model, m), m, "x", std::string("x"));
  for (std::size_t i = 1; i < table.rows.size(); ++i) {
    EXPECT_GE(table.rows[i].shap_value, table.rows[i - 1].shap_value);
  }
}

}  // namespace
}  // namespace gridxai::shap

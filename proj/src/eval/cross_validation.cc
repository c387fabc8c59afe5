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

#include "gridxai/eval/cross_validation.h"

#include "gridxai/common/error.h"
#include "gridxai/eval/metrics.h"
#include "gridxai/gbt/predict.h"
#include "gridxai/gbt/trainer.h"
#include "gridxai/shap/tree_shap.h"

namespace gridxai::eval {

nlohmann::json CvConfigToJson(const CvConfig& c) {
  return {{"n_folds", c.split.n_folds},
          {"gap_hours", c.split.gap.count()},
          {"seed", c.split.seed}};
}

CvConfig CvConfigFromJson(const nlohmann::json& j) {
  CvConfig c;
  try {
    c.split.n_folds = j.value("n_folds", c.split.n_folds);
    c.split.gap = std::chrono::hours(j.value("gap_hours", c.split.gap.count()));
    c.split.seed = j.value("seed", c.split.seed);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("invalid cv settings: ") + e.what());
  }
  if (c.split.n_folds < 2) throw ConfigError("cv.n_folds must be at least 2");
  if (c.split.gap.count() < 0) throw ConfigError("cv.gap_hours must be >= 0");
  return c;
}

CvResult CrossValidate(const FeatureMatrix& x, std::span<const double> y,
                       const gbt::Hyperparameters& hp, const CvConfig& config,
                       bool with_importance) {
  if (x.rows() != y.size()) {
    throw InvalidInputError("feature rows and target length differ");
  }
  const auto folds = GroupGapSplit(x.hours(), config.split);
  CvResult result;
  for (const auto& fold : folds) {
    const FeatureMatrix train = x.TakeRows(fold.train);
    const FeatureMatrix test = x.TakeRows(fold.test);
    std::vector<double> y_train(fold.train.size());
    std::vector<double> y_test(fold.test.size());
    for (std::size_t i = 0; i < fold.train.size(); ++i) y_train[i] = y[fold.train[i]];
    for (std::size_t i = 0; i < fold.test.size(); ++i) y_test[i] = y[fold.test[i]];

    const gbt::Ensemble model = gbt::Fit(train, y_train, hp, config.exec);
    const std::vector<double> pred = gbt::Predict(model, test, config.exec);
    result.fold_r2.push_back(R2(y_test, pred));
    if (with_importance) {
      result.fold_importance.push_back(shap::ComputeFeatureImportance(
          shap::TreeShap(model, test, config.exec)));
    }
  }
  double sum = 0.0;
  for (double r : result.fold_r2) sum += r;
  result.mean_r2 = sum / static_cast<double>(result.fold_r2.size());
  return result;
}

}  // namespace gridxai::eval

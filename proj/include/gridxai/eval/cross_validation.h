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

#ifndef GRIDXAI_EVAL_CROSS_VALIDATION_H_
#define GRIDXAI_EVAL_CROSS_VALIDATION_H_

#include <span>
#include <vector>

#include "gridxai/common/feature_matrix.h"
#include "gridxai/common/parallel.h"
#include "gridxai/gbt/hyperparameters.h"
#include "gridxai/eval/split.h"
#include "gridxai/shap/importance.h"
#include "json.hpp"

namespace gridxai::eval {

struct CvConfig {
  GroupGapSplitConfig split;
  Execution exec = Execution::kParallel;
};

nlohmann::json CvConfigToJson(const CvConfig& c);
CvConfig CvConfigFromJson(const nlohmann::json& j);

struct CvResult {
  std::vector<double> fold_r2;
  double mean_r2 = 0.0;
  // Per fold, from TreeSHAP on the fold's test rows. Filled when requested.
  std::vector<shap::FeatureImportance> fold_importance;
};

// Fits one model per fold and scores it on the fold's test rows.
CvResult CrossValidate(const FeatureMatrix& x, std::span<const double> y,
                       const gbt::Hyperparameters& hp, const CvConfig& config,
                       bool with_importance = false);

}  // namespace gridxai::eval

#endif  // GRIDXAI_EVAL_CROSS_VALIDATION_H_

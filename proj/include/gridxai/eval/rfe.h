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

#ifndef GRIDXAI_EVAL_RFE_H_
#define GRIDXAI_EVAL_RFE_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gridxai/common/feature_matrix.h"
#include "gridxai/eval/cross_validation.h"
#include "gridxai/gbt/hyperparameters.h"

namespace gridxai::eval {

struct RfeStep {
  std::vector<std::string> active;
  std::vector<double> fold_r2;
  double mean_r2 = 0.0;
  // Fold-averaged importance of each active feature, in `active` order.
  std::vector<double> importance;
  // Empty for the closing single-feature record.
  std::string eliminated;
};

struct RfeTrace {
  // One step per elimination: n_features - 1 entries.
  std::vector<RfeStep> steps;
  // Score of the last remaining feature.
  RfeStep final_step;

  // The step (or final record) with the given active feature count.
  const RfeStep* WithFeatureCount(std::size_t n) const;
};

// Repeatedly cross-validates, averages per-fold TreeSHAP importances and drops
// the least important feature. Ties drop the later column. Requires at least
// two features.
RfeTrace RecursiveFeatureElimination(const FeatureMatrix& x,
                                     std::span<const double> y,
                                     const gbt::Hyperparameters& hp,
                                     const CvConfig& cv);

// One JSON object per step, then the final record.
std::string RfeTraceJsonLines(const RfeTrace& trace);
RfeTrace RfeTraceFromJsonLines(std::string_view text);
// `n_features,mean_r2,fold_1..fold_k`, one row per active feature count.
std::string RfeSummaryCsv(const RfeTrace& trace);

}  // namespace gridxai::eval

#endif  // GRIDXAI_EVAL_RFE_H_

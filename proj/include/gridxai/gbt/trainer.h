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

#ifndef GRIDXAI_GBT_TRAINER_H_
#define GRIDXAI_GBT_TRAINER_H_

#include <cstddef>
#include <span>
#include <vector>

#include "gridxai/common/feature_matrix.h"
#include "gridxai/common/parallel.h"
#include "gridxai/gbt/binning.h"
#include "gridxai/gbt/hyperparameters.h"
#include "gridxai/gbt/tree.h"

namespace gridxai::gbt {

// In-sample mean squared error before the first tree and after each tree.
struct FitTrace {
  std::vector<double> training_mse;
};

// Squared-error gradient boosting with histogram split search.
//
// base_score is mean(y). Each tree is grown level by level up to
// hp.max_depth; leaves take the Newton step -G / (H + l2) scaled by the
// learning rate. Boosting stops early when a tree cannot split its root. The
// result is a pure function of (x, y, hp) for either execution mode.
Ensemble Fit(const FeatureMatrix& x, std::span<const double> y,
             const Hyperparameters& hp,
             Execution exec = Execution::kParallel, FitTrace* trace = nullptr);

struct SplitCandidate {
  int feature = kNoFeature;
  int bin = -1;  // rows with code <= bin (and missing if default left) go left
  double gain = 0.0;
  Branch default_branch = Branch::kLeft;
  double left_cover = 0.0;
  double right_cover = 0.0;
  double left_grad = 0.0;
  double right_grad = 0.0;

  bool valid() const { return feature != kNoFeature; }
};

// Best split over `features` for the node holding `rows`. Gain ties go to the
// lowest feature index, then the lowest threshold. Exposed for the benchmark.
SplitCandidate FindBestSplit(const BinnedMatrix& binned,
                             std::span<const std::size_t> rows,
                             std::span<const double> gradients,
                             std::span<const int> features,
                             double min_child_cover, double l2,
                             Execution exec);

}  // namespace gridxai::gbt

#endif  // GRIDXAI_GBT_TRAINER_H_

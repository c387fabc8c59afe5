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

#ifndef GRIDXAI_GBT_PREDICT_H_
#define GRIDXAI_GBT_PREDICT_H_

#include <span>
#include <vector>

#include "gridxai/common/feature_matrix.h"
#include "gridxai/common/parallel.h"
#include "gridxai/gbt/tree.h"

namespace gridxai::gbt {

// base_score plus the leaf reached in every tree. `row` is in model feature
// order.
double PredictRow(const Ensemble& model, std::span<const double> row);

// Columns are matched to model.feature_names by name; throws SchemaError if
// one is missing.
std::vector<double> Predict(const Ensemble& model, const FeatureMatrix& x,
                            Execution exec = Execution::kParallel);
std::vector<double> Predict(const Ensemble& model, const RowMajor& x,
                            Execution exec = Execution::kParallel);

}  // namespace gridxai::gbt

#endif  // GRIDXAI_GBT_PREDICT_H_

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

#ifndef GRIDXAI_SHAP_INTERACTION_H_
#define GRIDXAI_SHAP_INTERACTION_H_

#include <span>
#include <vector>

#include "gridxai/common/feature_matrix.h"
#include "gridxai/common/parallel.h"
#include "gridxai/gbt/tree.h"
#include "gridxai/shap/shap_result.h"

namespace gridxai::shap {

// SHAP interaction values. For each feature k used by the model, TreeSHAP is
// run with k held present and with k integrated out; half the difference is
// the off-diagonal entry (k, j). The diagonal takes the remainder so that
// each row sums to phi_k. Cost is O(used features) TreeSHAP passes per
// sample.
InteractionResult InteractionValues(const gbt::Ensemble& model,
                                    const FeatureMatrix& x,
                                    Execution exec = Execution::kParallel);
InteractionResult InteractionValues(const gbt::Ensemble& model,
                                    const RowMajor& x,
                                    Execution exec = Execution::kParallel);

// Row-major n x n matrix for a single row.
std::vector<double> InteractionRow(const gbt::Ensemble& model,
                                   std::span<const double> row);

}  // namespace gridxai::shap

#endif  // GRIDXAI_SHAP_INTERACTION_H_

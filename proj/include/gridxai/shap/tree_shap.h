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

#ifndef GRIDXAI_SHAP_TREE_SHAP_H_
#define GRIDXAI_SHAP_TREE_SHAP_H_

#include <span>
#include <vector>

#include "gridxai/common/feature_matrix.h"
#include "gridxai/common/parallel.h"
#include "gridxai/gbt/tree.h"
#include "gridxai/shap/shap_result.h"

namespace gridxai::shap {

// Expected model output over the training distribution: every feature
// hidden, branches weighted by cover.
double ExpectedValue(const gbt::Ensemble& model);

// Throws ModelIntegrityError if an internal node has zero cover, since the
// cover-weighted expectation is undefined there.
void CheckCovers(const gbt::Ensemble& model);

// Path-dependent TreeSHAP. Runs in O(leaves * depth^2) per tree and sample.
ShapResult TreeShap(const gbt::Ensemble& model, const FeatureMatrix& x,
                    Execution exec = Execution::kParallel);
ShapResult TreeShap(const gbt::Ensemble& model, const RowMajor& x,
                    Execution exec = Execution::kParallel);

// Attributions for one row in model feature order (base value excluded).
std::vector<double> TreeShapRow(const gbt::Ensemble& model,
                                std::span<const double> row);

enum class Conditioning { kNone, kPresent, kAbsent };

// TreeSHAP over the players other than `feature`, with `feature` held
// present (follows x) or absent (integrated out by cover). Adds into `phi`.
void ConditionalTreeShapRow(const gbt::Ensemble& model,
                            std::span<const double> row, Conditioning mode,
                            int feature, std::span<double> phi);

}  // namespace gridxai::shap

#endif  // GRIDXAI_SHAP_TREE_SHAP_H_

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

#ifndef GRIDXAI_SHAP_DEPENDENCE_H_
#define GRIDXAI_SHAP_DEPENDENCE_H_

#include <optional>
#include <string>
#include <vector>

#include "gridxai/common/feature_matrix.h"
#include "gridxai/shap/shap_result.h"

namespace gridxai::shap {

struct DependenceRow {
  UtcHour hour;
  double feature_value;
  double shap_value;
  double color_value;
};

struct DependenceTable {
  std::string feature;
  std::string color_feature;
  std::vector<DependenceRow> rows;  // one per sample, in sample order
};

// Picks the colouring feature with the largest mean |Phi(feature, k)|, k !=
// feature. Ties go to the lower column index.
std::string StrongestInteractionPartner(const InteractionResult& interactions,
                                        const std::string& feature);

// (x_j, phi_j, colour) per sample. With no `color_feature`, the partner is
// chosen from `interactions`, which must then be given.
DependenceTable DependenceData(const ShapResult& shap, const FeatureMatrix& x,
                               const std::string& feature,
                               const std::optional<std::string>& color_feature,
                               const InteractionResult* interactions = nullptr);

}  // namespace gridxai::shap

#endif  // GRIDXAI_SHAP_DEPENDENCE_H_

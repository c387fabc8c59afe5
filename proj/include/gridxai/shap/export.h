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

#ifndef GRIDXAI_SHAP_EXPORT_H_
#define GRIDXAI_SHAP_EXPORT_H_

#include <string>

#include "gridxai/shap/dependence.h"
#include "gridxai/shap/importance.h"
#include "gridxai/shap/shap_result.h"

namespace gridxai::shap {

// timestamp,base_value,<feature>...
std::string AttributionsCsv(const ShapResult& shap);
// timestamp,feature_a,feature_b,value (every ordered pair, diagonal included)
std::string InteractionsCsv(const InteractionResult& interactions);
// feature,importance,mean_abs_shap (descending importance)
std::string ImportanceCsv(const FeatureImportance& fi);
// timestamp,<feature>,shap_<feature>,<color feature>
std::string DependenceCsv(const DependenceTable& table);

}  // namespace gridxai::shap

#endif  // GRIDXAI_SHAP_EXPORT_H_

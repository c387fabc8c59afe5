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

#ifndef GRIDXAI_SHAP_IMPORTANCE_H_
#define GRIDXAI_SHAP_IMPORTANCE_H_

#include <string>
#include <vector>

#include "gridxai/shap/shap_result.h"

namespace gridxai::shap {

// FI_j = sum_s |phi_j(s)| / N with N = max_k sum_s |phi_k(s)|, so the most
// important feature scores exactly 1.
struct FeatureImportance {
  std::vector<std::string> feature_names;
  std::vector<double> values;
  std::vector<double> mean_abs;  // target units
  double normalizer = 0.0;       // N, target units
  // Every attribution was zero; values are all zero and N is 0.
  bool degenerate = false;

  std::size_t ArgMax() const;
};

FeatureImportance ComputeFeatureImportance(const ShapResult& shap);

// Element-wise mean of several importance vectors over the same features,
// renormalized to a maximum of 1.
FeatureImportance AverageImportance(const std::vector<FeatureImportance>& parts);

}  // namespace gridxai::shap

#endif  // GRIDXAI_SHAP_IMPORTANCE_H_

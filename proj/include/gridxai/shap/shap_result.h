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

#ifndef GRIDXAI_SHAP_SHAP_RESULT_H_
#define GRIDXAI_SHAP_SHAP_RESULT_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "gridxai/common/time.h"

namespace gridxai::shap {

// Per-sample attributions in target units, ordered by feature_names.
// base_value + sum_j phi_j equals the model prediction for every sample.
struct ShapResult {
  std::vector<std::string> feature_names;
  std::vector<UtcHour> hours;  // empty when explaining bare rows
  double base_value = 0.0;
  std::size_t n_samples = 0;
  std::vector<double> attributions;  // n_samples x n_features, row-major

  std::size_t n_features() const { return feature_names.size(); }
  double at(std::size_t sample, std::size_t feature) const {
    return attributions[sample * n_features() + feature];
  }
  std::span<const double> row(std::size_t sample) const {
    return {attributions.data() + sample * n_features(), n_features()};
  }
};

// Per-sample symmetric matrices. Diagonal entries are main effects and each
// row sums to the sample's SHAP value for that feature.
struct InteractionResult {
  std::vector<std::string> feature_names;
  std::vector<UtcHour> hours;
  std::size_t n_samples = 0;
  std::vector<double> values;  // n_samples x n x n

  std::size_t n_features() const { return feature_names.size(); }
  double at(std::size_t sample, std::size_t a, std::size_t b) const {
    const std::size_t n = n_features();
    return values[(sample * n + a) * n + b];
  }
};

}  // namespace gridxai::shap

#endif  // GRIDXAI_SHAP_SHAP_RESULT_H_

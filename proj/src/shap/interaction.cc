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

#include "gridxai/shap/interaction.h"

#include <algorithm>

#include "gridxai/common/error.h"
#include "gridxai/shap/tree_shap.h"

namespace gridxai::shap {
namespace {

std::vector<int> UsedFeatures(const gbt::Ensemble& model) {
  std::vector<char> used(model.n_features(), 0);
  for (const auto& tree : model.trees) {
    for (const auto& node : tree.nodes) {
      if (!node.is_leaf()) used[node.split_feature] = 1;
    }
  }
  std::vector<int> out;
  for (std::size_t j = 0; j < used.size(); ++j) {
    if (used[j]) out.push_back(static_cast<int>(j));
  }
  return out;
}

void FillInteractionRow(const gbt::Ensemble& model, std::span<const double> row,
                        std::span<const int> used, std::span<double> out) {
  const std::size_t n = model.n_features();
  std::fill(out.begin(), out.end(), 0.0);
  const std::vector<double> phi = TreeShapRow(model, row);
  std::vector<double> on(n), off(n);
  for (int k : used) {
    std::fill(on.begin(), on.end(), 0.0);
    std::fill(off.begin(), off.end(), 0.0);
    ConditionalTreeShapRow(model, row, Conditioning::kPresent, k, on);
    ConditionalTreeShapRow(model, row, Conditioning::kAbsent, k, off);
    double diagonal = phi[k];
    for (std::size_t j = 0; j < n; ++j) {
      if (j == static_cast<std::size_t>(k)) continue;
      const double value = (on[j] - off[j]) / 2.0;
      out[k * n + j] = value;
      diagonal -= value;
    }
    out[k * n + k] = diagonal;
  }
}

}  // namespace

std::vector<double> InteractionRow(const gbt::Ensemble& model,
                                   std::span<const double> row) {
  if (row.size() != model.n_features()) {
    throw SchemaError("row width does not match the model's feature count");
  }
  CheckCovers(model);
  std::vector<double> out(model.n_features() * model.n_features());
  FillInteractionRow(model, row, UsedFeatures(model), out);
  return out;
}

InteractionResult InteractionValues(const gbt::Ensemble& model,
                                    const RowMajor& x, Execution exec) {
  if (x.cols != model.n_features()) {
    throw SchemaError("row width does not match the model's feature count");
  }
  CheckCovers(model);
  const std::size_t n = model.n_features();
  InteractionResult out;
  out.feature_names = model.feature_names;
  out.n_samples = x.rows;
  out.values.assign(x.rows * n * n, 0.0);
  const std::vector<int> used = UsedFeatures(model);
  const long long rows = static_cast<long long>(x.rows);
#pragma omp parallel for schedule(dynamic, 4) if (IsParallel(exec))
  for (long long s = 0; s < rows; ++s) {
    const std::size_t i = static_cast<std::size_t>(s);
    FillInteractionRow(model, x.row(i), used,
                       std::span<double>(out.values.data() + i * n * n, n * n));
  }
  return out;
}

InteractionResult InteractionValues(const gbt::Ensemble& model,
                                    const FeatureMatrix& x, Execution exec) {
  InteractionResult out =
      InteractionValues(model, ToRowMajor(x, model.feature_names), exec);
  out.hours = x.hours();
  return out;
}

}  // namespace gridxai::shap

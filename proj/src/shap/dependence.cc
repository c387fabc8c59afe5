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

#include "gridxai/shap/dependence.h"

#include <cmath>
#include <limits>

#include "gridxai/common/error.h"

namespace gridxai::shap {
namespace {

std::size_t FeatureIndex(const std::vector<std::string>& names,
                         const std::string& feature) {
  for (std::size_t j = 0; j < names.size(); ++j) {
    if (names[j] == feature) return j;
  }
  throw InvalidInputError("unknown feature '" + feature + "'");
}

}  // namespace

std::string StrongestInteractionPartner(const InteractionResult& interactions,
                                        const std::string& feature) {
  const std::size_t j = FeatureIndex(interactions.feature_names, feature);
  const std::size_t n = interactions.n_features();
  if (n < 2) return feature;
  std::size_t best = j == 0 ? 1 : 0;
  double best_score = -1.0;
  for (std::size_t k = 0; k < n; ++k) {
    if (k == j) continue;
    double score = 0.0;
    for (std::size_t s = 0; s < interactions.n_samples; ++s) {
      score += std::abs(interactions.at(s, j, k));
    }
    if (score > best_score) {
      best_score = score;
      best = k;
    }
  }
  return interactions.feature_names[best];
}

DependenceTable DependenceData(const ShapResult& shap, const FeatureMatrix& x,
                               const std::string& feature,
                               const std::optional<std::string>& color_feature,
                               const InteractionResult* interactions) {
  const std::size_t j = FeatureIndex(shap.feature_names, feature);
  if (x.rows() != shap.n_samples) {
    throw SchemaError("feature rows and SHAP samples differ");
  }
  DependenceTable table;
  table.feature = feature;
  if (color_feature) {
    table.color_feature = *color_feature;
  } else {
    if (interactions == nullptr) {
      throw InvalidInputError(
          "automatic colour selection needs interaction values");
    }
    table.color_feature = StrongestInteractionPartner(*interactions, feature);
  }
  const auto xs = x.column(x.IndexOf(feature));
  auto color_idx = x.Find(table.color_feature);
  if (!color_idx) {
    throw InvalidInputError("unknown feature '" + table.color_feature + "'");
  }
  const auto colors = x.column(*color_idx);
  table.rows.reserve(shap.n_samples);
  for (std::size_t s = 0; s < shap.n_samples; ++s) {
    table.rows.push_back({x.hours()[s], xs[s], shap.at(s, j), colors[s]});
  }
  return table;
}

}  // namespace gridxai::shap

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

#include "gridxai/shap/export.h"

#include <algorithm>
#include <numeric>

#include "gridxai/common/csv.h"

namespace gridxai::shap {
namespace {

std::string Stamp(const std::vector<UtcHour>& hours, std::size_t s) {
  return s < hours.size() ? FormatIso(hours[s]) : std::to_string(s);
}

}  // namespace

std::string AttributionsCsv(const ShapResult& shap) {
  std::vector<std::string> header{"timestamp", "base_value"};
  header.insert(header.end(), shap.feature_names.begin(),
                shap.feature_names.end());
  std::string out = JoinCsv(header, ',') + "\n";
  const std::string base = FormatDouble(shap.base_value);
  for (std::size_t s = 0; s < shap.n_samples; ++s) {
    out += Stamp(shap.hours, s);
    out += ',';
    out += base;
    for (double v : shap.row(s)) {
      out += ',';
      out += FormatDouble(v);
    }
    out += '\n';
  }
  return out;
}

std::string InteractionsCsv(const InteractionResult& interactions) {
  std::string out = "timestamp,feature_a,feature_b,value\n";
  const std::size_t n = interactions.n_features();
  for (std::size_t s = 0; s < interactions.n_samples; ++s) {
    const std::string stamp = Stamp(interactions.hours, s);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        out += stamp + ',' + interactions.feature_names[a] + ',' +
               interactions.feature_names[b] + ',' +
               FormatDouble(interactions.at(s, a, b)) + '\n';
      }
    }
  }
  return out;
}

std::string ImportanceCsv(const FeatureImportance& fi) {
  std::vector<std::size_t> order(fi.values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return fi.values[a] > fi.values[b];
  });
  std::string out = "feature,importance,mean_abs_shap\n";
  for (std::size_t j : order) {
    out += fi.feature_names[j] + ',' + FormatDouble(fi.values[j]) + ',' +
           FormatDouble(fi.mean_abs[j]) + '\n';
  }
  return out;
}

std::string DependenceCsv(const DependenceTable& table) {
  std::string out = "timestamp," + table.feature + ",shap_" + table.feature +
                    ",color_" + table.color_feature + "\n";
  for (const DependenceRow& r : table.rows) {
    out += FormatIso(r.hour) + ',' + FormatDouble(r.feature_value) + ',' +
           FormatDouble(r.shap_value) + ',' + FormatDouble(r.color_value) + '\n';
  }
  return out;
}

}  // namespace gridxai::shap

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

#include "gridxai/shap/importance.h"

#include <algorithm>
#include <cmath>

#include "gridxai/common/error.h"

namespace gridxai::shap {
namespace {

FeatureImportance FromSums(std::vector<std::string> names,
                           const std::vector<double>& sums, double count) {
  FeatureImportance fi;
  fi.feature_names = std::move(names);
  fi.values.assign(sums.size(), 0.0);
  fi.mean_abs.resize(sums.size());
  for (std::size_t j = 0; j < sums.size(); ++j) fi.mean_abs[j] = sums[j] / count;
  const double max_sum =
      sums.empty() ? 0.0 : *std::max_element(sums.begin(), sums.end());
  if (!(max_sum > 0.0)) {
    fi.degenerate = true;
    return fi;
  }
  fi.normalizer = max_sum;
  for (std::size_t j = 0; j < sums.size(); ++j) fi.values[j] = sums[j] / max_sum;
  return fi;
}

}  // namespace

std::size_t FeatureImportance::ArgMax() const {
  return static_cast<std::size_t>(
      std::max_element(values.begin(), values.end()) - values.begin());
}

FeatureImportance ComputeFeatureImportance(const ShapResult& shap) {
  if (shap.n_samples == 0) {
    throw InvalidInputError("feature importance needs at least one sample");
  }
  const std::size_t n = shap.n_features();
  std::vector<double> sums(n, 0.0);
  for (std::size_t s = 0; s < shap.n_samples; ++s) {
    for (std::size_t j = 0; j < n; ++j) sums[j] += std::abs(shap.at(s, j));
  }
  return FromSums(shap.feature_names, sums,
                  static_cast<double>(shap.n_samples));
}

FeatureImportance AverageImportance(
    const std::vector<FeatureImportance>& parts) {
  if (parts.empty()) throw InvalidInputError("nothing to average");
  const std::size_t n = parts.front().values.size();
  std::vector<double> sums(n, 0.0);
  std::vector<double> mean_abs(n, 0.0);
  for (const auto& p : parts) {
    if (p.values.size() != n || p.feature_names != parts.front().feature_names) {
      throw SchemaError("importance vectors cover different features");
    }
    for (std::size_t j = 0; j < n; ++j) {
      sums[j] += p.values[j];
      mean_abs[j] += p.mean_abs[j];
    }
  }
  FeatureImportance out =
      FromSums(parts.front().feature_names, sums, static_cast<double>(parts.size()));
  double normalizer = 0.0;
  for (const auto& p : parts) normalizer += p.normalizer;
  for (std::size_t j = 0; j < n; ++j) {
    out.mean_abs[j] = mean_abs[j] / static_cast<double>(parts.size());
  }
  if (!out.degenerate) out.normalizer = normalizer / static_cast<double>(parts.size());
  return out;
}

}  // namespace gridxai::shap

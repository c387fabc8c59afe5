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

#include "gridxai/eval/proxy_ablation.h"

#include <cmath>
#include <map>

#include "gridxai/common/error.h"

namespace gridxai::eval {
namespace {

template <typename KeyFn>
std::vector<double> GroupMean(const FeatureMatrix& x, std::span<const double> v,
                              KeyFn key) {
  std::map<int, std::pair<double, std::size_t>> acc;
  for (std::size_t r = 0; r < v.size(); ++r) {
    if (std::isnan(v[r])) continue;
    auto& [sum, n] = acc[key(x.hours()[r])];
    sum += v[r];
    ++n;
  }
  std::vector<double> out(v.size(), std::nan(""));
  for (std::size_t r = 0; r < v.size(); ++r) {
    auto it = acc.find(key(x.hours()[r]));
    if (it != acc.end()) {
      out[r] = it->second.first / static_cast<double>(it->second.second);
    }
  }
  return out;
}

}  // namespace

std::string_view ProxyKindName(ProxyKind k) {
  switch (k) {
    case ProxyKind::kRollingAverage:
      return "rolling_average";
    case ProxyKind::kSeasonalProfile:
      return "seasonal_profile";
    case ProxyKind::kDailyProfile:
      return "daily_profile";
  }
  return "unknown";
}

ProxyKind ParseProxyKind(std::string_view name) {
  for (ProxyKind k : {ProxyKind::kRollingAverage, ProxyKind::kSeasonalProfile,
                      ProxyKind::kDailyProfile}) {
    if (ProxyKindName(k) == name) return k;
  }
  throw ConfigError("unknown proxy kind '" + std::string(name) +
                    "' (expected rolling_average, seasonal_profile or "
                    "daily_profile)");
}

std::vector<double> BuildProxy(const FeatureMatrix& x, const std::string& feature,
                               const ProxySpec& spec) {
  const auto idx = x.Find(feature);
  if (!idx) throw InvalidInputError("unknown feature '" + feature + "'");
  const auto v = x.column(*idx);
  switch (spec.kind) {
    case ProxyKind::kRollingAverage: {
      if (spec.window < 1) throw ConfigError("rolling window must be >= 1");
      const std::size_t w = static_cast<std::size_t>(spec.window);
      std::vector<double> out(v.size());
      for (std::size_t r = 0; r < v.size(); ++r) {
        const std::size_t first = r + 1 >= w ? r + 1 - w : 0;
        double sum = 0.0;
        std::size_t n = 0;
        for (std::size_t k = first; k <= r; ++k) {
          if (std::isnan(v[k])) continue;
          sum += v[k];
          ++n;
        }
        out[r] = n == 0 ? std::nan("") : sum / static_cast<double>(n);
      }
      return out;
    }
    case ProxyKind::kSeasonalProfile:
      return GroupMean(x, v, [](UtcHour h) { return DayOfYear(h); });
    case ProxyKind::kDailyProfile:
      return GroupMean(x, v, [](UtcHour h) { return HourOfDay(h); });
  }
  throw ConfigError("unknown proxy kind");
}

nlohmann::json AblationReportToJson(const AblationReport& r) {
  return {{"feature", r.feature},
          {"proxy", ProxyKindName(r.proxy.kind)},
          {"window", r.proxy.window},
          {"original_fold_r2", r.original_fold_r2},
          {"ablated_fold_r2", r.ablated_fold_r2},
          {"original_mean_r2", r.original_mean_r2},
          {"ablated_mean_r2", r.ablated_mean_r2},
          {"delta", r.delta()}};
}

AblationReport ProxyAblation(const FeatureMatrix& x, std::span<const double> y,
                             const std::string& feature, const ProxySpec& spec,
                             const gbt::Hyperparameters& hp, const CvConfig& cv) {
  const std::vector<double> proxy = BuildProxy(x, feature, spec);
  FeatureMatrix ablated = x;
  ablated.SetColumn(feature, proxy);
  const CvResult original = CrossValidate(x, y, hp, cv);
  const CvResult replaced = CrossValidate(ablated, y, hp, cv);
  AblationReport report;
  report.feature = feature;
  report.proxy = spec;
  report.original_fold_r2 = original.fold_r2;
  report.ablated_fold_r2 = replaced.fold_r2;
  report.original_mean_r2 = original.mean_r2;
  report.ablated_mean_r2 = replaced.mean_r2;
  return report;
}

}  // namespace gridxai::eval

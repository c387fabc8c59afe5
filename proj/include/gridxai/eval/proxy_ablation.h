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

#ifndef GRIDXAI_EVAL_PROXY_ABLATION_H_
#define GRIDXAI_EVAL_PROXY_ABLATION_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gridxai/common/feature_matrix.h"
#include "gridxai/eval/cross_validation.h"
#include "gridxai/gbt/hyperparameters.h"
#include "json.hpp"

namespace gridxai::eval {

enum class ProxyKind { kRollingAverage, kSeasonalProfile, kDailyProfile };

std::string_view ProxyKindName(ProxyKind k);
// Accepts rolling_average, seasonal_profile, daily_profile.
ProxyKind ParseProxyKind(std::string_view name);

struct ProxySpec {
  ProxyKind kind = ProxyKind::kRollingAverage;
  // Trailing window in samples for kRollingAverage; 1 is the identity.
  int window = 24;
};

// Replacement values for `feature`:
//   rolling average: mean of the current and previous window-1 samples;
//   seasonal profile: mean over all rows sharing the day of year;
//   daily profile: mean over all rows sharing the hour of day.
std::vector<double> BuildProxy(const FeatureMatrix& x, const std::string& feature,
                               const ProxySpec& spec);

struct AblationReport {
  std::string feature;
  ProxySpec proxy;
  std::vector<double> original_fold_r2;
  std::vector<double> ablated_fold_r2;
  double original_mean_r2 = 0.0;
  double ablated_mean_r2 = 0.0;
  double delta() const { return ablated_mean_r2 - original_mean_r2; }
};

nlohmann::json AblationReportToJson(const AblationReport& r);

// Cross-validates with the original column and with its proxy.
AblationReport ProxyAblation(const FeatureMatrix& x, std::span<const double> y,
                             const std::string& feature, const ProxySpec& spec,
                             const gbt::Hyperparameters& hp, const CvConfig& cv);

}  // namespace gridxai::eval

#endif  // GRIDXAI_EVAL_PROXY_ABLATION_H_

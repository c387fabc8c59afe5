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

#ifndef GRIDXAI_EVAL_SYNTHETIC_H_
#define GRIDXAI_EVAL_SYNTHETIC_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "gridxai/common/feature_matrix.h"
#include "gridxai/common/time.h"
#include "gridxai/dataset/intervention.h"

namespace gridxai::eval {

struct SyntheticData {
  FeatureMatrix x;
  std::vector<double> y;
};

// y = 2 * x1 + N(0, noise_sd) with x1, x2 ~ U(0, 10) on consecutive hours.
SyntheticData GenerateLinear(std::size_t n_rows, std::uint64_t seed,
                             double noise_sd = 0.1);

struct StudyGeneratorOptions {
  int n_days = 60;
  std::uint64_t seed = 0;
  int n_noise_features = 2;
  double noise_sd = 150.0;       // MWh
  double wind_coef = 0.25;       // MWh per MW of northern wind
  double hydro_coef = 2.0;       // MWh per MW below the hydro threshold
  double hydro_threshold = 1200.0;  // MW
  double interaction_coef = 200.0;  // MWh per GW^2 of wind times DK flow
  UtcHour start = MakeUtcHour(2021, 1, 1);
};

// Hourly data on the reduced feature set plus `n_noise_features` columns
// named noise_1, noise_2, ... of i.i.d. Gaussian noise:
//   volume = wind_coef * wind_north
//          + hydro_coef * max(0, hydro_threshold - hydro_south)
//          + interaction_coef * wind_north[GW] * max(0, flow_DK[GW])
//          + N(0, noise_sd), floored at 0.
// flow_FR, solar_DE and residual_load_transnet are realistic but do not
// enter the target.
SyntheticData GenerateStudy(const StudyGeneratorOptions& options);

// Columns of GenerateStudy that drive the target.
std::vector<std::string> StudyInformativeFeatures();

// Random intervention records inside `window`: quarter-hour aligned spans of
// 15 min to 8 h, a mix of kinds, reasons and requesting TSOs, and
// cross-border countertrades.
std::vector<dataset::InterventionRecord> GenerateInterventions(
    std::size_t n_records, std::uint64_t seed, const TimeWindow& window);

}  // namespace gridxai::eval

#endif  // GRIDXAI_EVAL_SYNTHETIC_H_

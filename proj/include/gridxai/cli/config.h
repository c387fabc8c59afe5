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

#ifndef GRIDXAI_CLI_CONFIG_H_
#define GRIDXAI_CLI_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gridxai/common/feature_matrix.h"
#include "gridxai/common/time.h"
#include "gridxai/eval/cross_validation.h"
#include "gridxai/eval/proxy_ablation.h"
#include "gridxai/eval/random_search.h"
#include "gridxai/gbt/hyperparameters.h"
#include "json.hpp"

namespace gridxai::cli {

struct HpoSettings {
  bool enabled = false;
  int n_trials = 20;
  eval::SearchSpace space;
};

struct IngestSettings {
  double requests_per_second = 2.0;
  double burst = 4.0;
  int max_attempts = 5;
  std::optional<std::filesystem::path> cache_dir;
};

struct ExplainSettings {
  bool interactions = true;
};

struct ReportSettings {
  std::string wind_feature = "wind_north";
  int bins_x = 30;
  int bins_y = 30;
  int kde_grid = 50;
};

struct AblationSpec {
  std::string feature;
  eval::ProxySpec proxy;
};

struct SyntheticSettings {
  int n_days = 60;
  int n_noise_features = 2;
};

struct RunConfig {
  std::filesystem::path out = "run";
  // Defaults to <out>/bundle.
  std::optional<std::filesystem::path> bundle;
  // Defaults to <out>/dataset.csv.
  std::optional<std::filesystem::path> dataset;
  std::optional<std::filesystem::path> fixtures;
  std::optional<std::filesystem::path> redispatch_csv;
  bool offline = false;
  TimeWindow window;
  FeatureSet feature_set = FeatureSet::kReduced;
  std::vector<std::string> include_features;
  std::vector<std::string> exclude_features;
  int max_gap_hours = 3;
  gbt::Hyperparameters hyperparameters;
  HpoSettings hpo;
  eval::CvConfig cv;
  std::uint64_t seed = 0;
  IngestSettings ingest;
  ExplainSettings explain;
  ReportSettings report;
  std::vector<AblationSpec> ablations;
  SyntheticSettings synthetic;

  std::filesystem::path BundleDir() const;
  std::filesystem::path DatasetPath() const;

  // Propagates `seed` into the hyperparameters and the fold split.
  void ApplySeed(std::uint64_t s);

  // Throws ConfigError.
  void Validate() const;
};

RunConfig DefaultConfig();

// Unknown keys and out-of-range values raise ConfigError.
RunConfig ConfigFromJson(const nlohmann::json& j);
nlohmann::json ConfigToJson(const RunConfig& c);
RunConfig LoadConfig(const std::filesystem::path& path);

}  // namespace gridxai::cli

#endif  // GRIDXAI_CLI_CONFIG_H_

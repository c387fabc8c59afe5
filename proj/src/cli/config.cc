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

#include "gridxai/cli/config.h"

#include <algorithm>
#include <initializer_list>

#include "gridxai/common/csv.h"
#include "gridxai/common/error.h"
#include "gridxai/dataset/pipeline.h"
#include "gridxai/gbt/model_io.h"

namespace gridxai::cli {
namespace {

using nlohmann::json;

void CheckKeys(const json& j, std::string_view where,
               std::initializer_list<std::string_view> allowed) {
  if (!j.is_object()) {
    throw ConfigError(std::string(where) + " must be a JSON object");
  }
  for (const auto& [key, value] : j.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw ConfigError("unknown key '" + key + "' in " + std::string(where));
    }
  }
}

std::optional<std::filesystem::path> OptionalPath(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return std::filesystem::path(j.at(key).get<std::string>());
}

json PathOrNull(const std::optional<std::filesystem::path>& p) {
  return p ? json(p->string()) : json(nullptr);
}

UtcTime ParseWindowBound(const json& j, const char* key) {
  try {
    return ParseIso(j.at(key).get<std::string>());
  } catch (const Error& e) {
    throw ConfigError(std::string("window.") + key + ": " + e.what());
  }
}

}  // namespace

std::filesystem::path RunConfig::BundleDir() const {
  return bundle.value_or(out / "bundle");
}

std::filesystem::path RunConfig::DatasetPath() const {
  return dataset.value_or(out / "dataset.csv");
}

void RunConfig::ApplySeed(std::uint64_t s) {
  seed = s;
  hyperparameters.seed = s;
  cv.split.seed = s;
}

void RunConfig::Validate() const {
  if (out.empty()) throw ConfigError("output directory must not be empty");
  if (!IsHourAligned(window.start) || !IsHourAligned(window.end) ||
      !(window.end > window.start)) {
    throw ConfigError("window must be a non-empty, hour-aligned range");
  }
  if (max_gap_hours < 0) throw ConfigError("max_gap_hours must be >= 0");
  try {
    hyperparameters.Validate();
  } catch (const Error& e) {
    throw ConfigError(std::string("hyperparameters: ") + e.what());
  }
  if (cv.split.n_folds < 2) throw ConfigError("cv.n_folds must be at least 2");
  if (cv.split.gap.count() < 0) throw ConfigError("cv.gap_hours must be >= 0");
  if (hpo.n_trials < 1) throw ConfigError("hpo.n_trials must be at least 1");
  hpo.space.Validate();
  if (!(ingest.requests_per_second > 0.0) || !(ingest.burst >= 1.0)) {
    throw ConfigError("ingest rate limit needs requests_per_second > 0, burst >= 1");
  }
  if (ingest.max_attempts < 1) throw ConfigError("ingest.max_attempts must be >= 1");
  if (report.bins_x < 1 || report.bins_y < 1 || report.kde_grid < 2) {
    throw ConfigError("report needs bins >= 1 and kde_grid >= 2");
  }
  for (const auto& a : ablations) {
    if (a.feature.empty()) throw ConfigError("ablation without a feature");
    if (a.proxy.window < 1) throw ConfigError("ablation window must be >= 1");
  }
  if (synthetic.n_days < 1 || synthetic.n_noise_features < 0) {
    throw ConfigError("synthetic.n_days must be >= 1, n_noise_features >= 0");
  }
}

RunConfig DefaultConfig() {
  RunConfig c;
  c.window = dataset::DefaultStudyWindow();
  return c;
}

RunConfig ConfigFromJson(const json& j) {
  RunConfig c = DefaultConfig();
  CheckKeys(j, "config",
            {"out", "bundle", "dataset", "fixtures", "redispatch_csv", "offline",
             "window", "feature_set", "include_features", "exclude_features",
             "max_gap_hours", "hyperparameters", "hpo", "cv", "seed", "ingest",
             "explain", "report", "ablations", "synthetic"});
  try {
    if (j.contains("out")) c.out = j.at("out").get<std::string>();
    c.bundle = OptionalPath(j, "bundle");
    c.dataset = OptionalPath(j, "dataset");
    c.fixtures = OptionalPath(j, "fixtures");
    c.redispatch_csv = OptionalPath(j, "redispatch_csv");
    c.offline = j.value("offline", c.offline);
    if (j.contains("window")) {
      CheckKeys(j.at("window"), "window", {"start", "end"});
      c.window.start = ParseWindowBound(j.at("window"), "start");
      c.window.end = ParseWindowBound(j.at("window"), "end");
    }
    if (j.contains("feature_set")) {
      c.feature_set = ParseFeatureSet(j.at("feature_set").get<std::string>());
    }
    c.include_features = j.value("include_features", c.include_features);
    c.exclude_features = j.value("exclude_features", c.exclude_features);
    c.max_gap_hours = j.value("max_gap_hours", c.max_gap_hours);
    if (j.contains("hyperparameters")) {
      CheckKeys(j.at("hyperparameters"), "hyperparameters",
                {"n_trees", "max_depth", "learning_rate", "min_child_cover",
                 "subsample_rows", "subsample_features", "n_histogram_bins",
                 "l2_leaf_penalty", "seed"});
      try {
        c.hyperparameters = gbt::HyperparametersFromJson(j.at("hyperparameters"));
      } catch (const Error& e) {
        throw ConfigError(std::string("hyperparameters: ") + e.what());
      }
    }
    if (j.contains("hpo")) {
      const json& h = j.at("hpo");
      CheckKeys(h, "hpo", {"enabled", "n_trials", "search_space"});
      c.hpo.enabled = h.value("enabled", c.hpo.enabled);
      c.hpo.n_trials = h.value("n_trials", c.hpo.n_trials);
      if (h.contains("search_space")) {
        c.hpo.space = eval::SearchSpaceFromJson(h.at("search_space"));
      }
    }
    if (j.contains("cv")) {
      CheckKeys(j.at("cv"), "cv", {"n_folds", "gap_hours"});
      c.cv = eval::CvConfigFromJson(j.at("cv"));
    }
    if (j.contains("ingest")) {
      const json& i = j.at("ingest");
      CheckKeys(i, "ingest",
                {"requests_per_second", "burst", "max_attempts", "cache_dir"});
      c.ingest.requests_per_second =
          i.value("requests_per_second", c.ingest.requests_per_second);
      c.ingest.burst = i.value("burst", c.ingest.burst);
      c.ingest.max_attempts = i.value("max_attempts", c.ingest.max_attempts);
      c.ingest.cache_dir = OptionalPath(i, "cache_dir");
    }
    if (j.contains("explain")) {
      CheckKeys(j.at("explain"), "explain", {"interactions"});
      c.explain.interactions = j.at("explain").value("interactions", true);
    }
    if (j.contains("report")) {
      const json& r = j.at("report");
      CheckKeys(r, "report", {"wind_feature", "bins_x", "bins_y", "kde_grid"});
      c.report.wind_feature = r.value("wind_feature", c.report.wind_feature);
      c.report.bins_x = r.value("bins_x", c.report.bins_x);
      c.report.bins_y = r.value("bins_y", c.report.bins_y);
      c.report.kde_grid = r.value("kde_grid", c.report.kde_grid);
    }
    if (j.contains("ablations")) {
      for (const json& a : j.at("ablations")) {
        CheckKeys(a, "ablations[]", {"feature", "proxy", "window"});
        AblationSpec spec;
        spec.feature = a.at("feature").get<std::string>();
        spec.proxy.kind = eval::ParseProxyKind(a.at("proxy").get<std::string>());
        spec.proxy.window = a.value("window", spec.proxy.window);
        c.ablations.push_back(std::move(spec));
      }
    }
    if (j.contains("synthetic")) {
      CheckKeys(j.at("synthetic"), "synthetic", {"n_days", "n_noise_features"});
      c.synthetic.n_days = j.at("synthetic").value("n_days", c.synthetic.n_days);
      c.synthetic.n_noise_features =
          j.at("synthetic").value("n_noise_features", c.synthetic.n_noise_features);
    }
    c.ApplySeed(j.value("seed", c.hyperparameters.seed));
  } catch (const json::exception& e) {
    throw ConfigError(std::string("invalid config: ") + e.what());
  }
  c.Validate();
  return c;
}

json ConfigToJson(const RunConfig& c) {
  json ablations = json::array();
  for (const auto& a : c.ablations) {
    ablations.push_back({{"feature", a.feature},
                         {"proxy", eval::ProxyKindName(a.proxy.kind)},
                         {"window", a.proxy.window}});
  }
  json hp = gbt::HyperparametersToJson(c.hyperparameters);
  return {{"out", c.out.string()},
          {"bundle", PathOrNull(c.bundle)},
          {"dataset", PathOrNull(c.dataset)},
          {"fixtures", PathOrNull(c.fixtures)},
          {"redispatch_csv", PathOrNull(c.redispatch_csv)},
          {"offline", c.offline},
          {"window", {{"start", FormatIso(c.window.start)}, {"end", FormatIso(c.window.end)}}},
          {"feature_set", FeatureSetName(c.feature_set)},
          {"include_features", c.include_features},
          {"exclude_features", c.exclude_features},
          {"max_gap_hours", c.max_gap_hours},
          {"hyperparameters", hp},
          {"hpo",
           {{"enabled", c.hpo.enabled},
            {"n_trials", c.hpo.n_trials},
            {"search_space", eval::SearchSpaceToJson(c.hpo.space)}}},
          {"cv", {{"n_folds", c.cv.split.n_folds}, {"gap_hours", c.cv.split.gap.count()}}},
          {"seed", c.seed},
          {"ingest",
           {{"requests_per_second", c.ingest.requests_per_second},
            {"burst", c.ingest.burst},
            {"max_attempts", c.ingest.max_attempts},
            {"cache_dir", PathOrNull(c.ingest.cache_dir)}}},
          {"explain", {{"interactions", c.explain.interactions}}},
          {"report",
           {{"wind_feature", c.report.wind_feature},
            {"bins_x", c.report.bins_x},
            {"bins_y", c.report.bins_y},
            {"kde_grid", c.report.kde_grid}}},
          {"ablations", ablations},
          {"synthetic",
           {{"n_days", c.synthetic.n_days},
            {"n_noise_features", c.synthetic.n_noise_features}}}};
}

RunConfig LoadConfig(const std::filesystem::path& path) {
  std::string text;
  try {
    text = ReadFile(path);
  } catch (const Error& e) {
    throw ConfigError(std::string("cannot read config: ") + e.what());
  }
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(path.string() + " is not valid JSON: " + e.what());
  }
  return ConfigFromJson(j);
}

}  // namespace gridxai::cli

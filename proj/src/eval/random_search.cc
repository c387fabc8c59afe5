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

#include "gridxai/eval/random_search.h"

#include <cmath>

#include "gridxai/common/error.h"
#include "gridxai/gbt/model_io.h"

namespace gridxai::eval {
namespace {

template <typename T>
void CheckInterval(const Interval<T>& iv, const char* name, T min, T max) {
  if (!(iv.lo <= iv.hi)) {
    throw ConfigError(std::string("search space for ") + name + " is empty");
  }
  if (iv.lo < min || iv.hi > max) {
    throw ConfigError(std::string("search space for ") + name +
                      " leaves the valid range");
  }
}

template <typename T>
nlohmann::json IntervalToJson(const Interval<T>& iv) {
  return nlohmann::json::array({iv.lo, iv.hi});
}

template <typename T>
void ReadInterval(const nlohmann::json& j, const char* name, Interval<T>& iv) {
  if (!j.contains(name)) return;
  const auto& v = j.at(name);
  if (v.is_array() && v.size() == 2) {
    iv.lo = v[0].get<T>();
    iv.hi = v[1].get<T>();
  } else if (v.is_number()) {
    iv.lo = iv.hi = v.get<T>();
  } else {
    throw ConfigError(std::string("search_space.") + name +
                      " must be a number or [lo, hi]");
  }
}

}  // namespace

void SearchSpace::Validate() const {
  CheckInterval(n_trees, "n_trees", 1, 100000);
  CheckInterval(max_depth, "max_depth", 1, 32);
  CheckInterval(learning_rate, "learning_rate", 1e-12, 1.0);
  CheckInterval(subsample_rows, "subsample_rows", 1e-12, 1.0);
  CheckInterval(l2_leaf_penalty, "l2_leaf_penalty", 0.0, HUGE_VAL);
  CheckInterval(min_child_cover, "min_child_cover", 0.0, HUGE_VAL);
}

nlohmann::json SearchSpaceToJson(const SearchSpace& s) {
  return {{"n_trees", IntervalToJson(s.n_trees)},
          {"max_depth", IntervalToJson(s.max_depth)},
          {"learning_rate", IntervalToJson(s.learning_rate)},
          {"subsample_rows", IntervalToJson(s.subsample_rows)},
          {"l2_leaf_penalty", IntervalToJson(s.l2_leaf_penalty)},
          {"min_child_cover", IntervalToJson(s.min_child_cover)}};
}

SearchSpace SearchSpaceFromJson(const nlohmann::json& j) {
  SearchSpace s;
  if (!j.is_object()) throw ConfigError("search_space must be an object");
  try {
    ReadInterval(j, "n_trees", s.n_trees);
    ReadInterval(j, "max_depth", s.max_depth);
    ReadInterval(j, "learning_rate", s.learning_rate);
    ReadInterval(j, "subsample_rows", s.subsample_rows);
    ReadInterval(j, "l2_leaf_penalty", s.l2_leaf_penalty);
    ReadInterval(j, "min_child_cover", s.min_child_cover);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("invalid search_space: ") + e.what());
  }
  for (const auto& [key, value] : j.items()) {
    static const char* kKnown[] = {"n_trees",        "max_depth",
                                   "learning_rate",  "subsample_rows",
                                   "l2_leaf_penalty", "min_child_cover"};
    bool known = false;
    for (const char* k : kKnown) known = known || key == k;
    if (!known) throw ConfigError("unknown search_space key '" + key + "'");
  }
  s.Validate();
  return s;
}

gbt::Hyperparameters SampleHyperparameters(const SearchSpace& space,
                                           const gbt::Hyperparameters& base,
                                           Rng& rng) {
  gbt::Hyperparameters hp = base;
  hp.n_trees = static_cast<int>(rng.Integer(space.n_trees.lo, space.n_trees.hi));
  hp.max_depth =
      static_cast<int>(rng.Integer(space.max_depth.lo, space.max_depth.hi));
  const double log_lo = std::log(space.learning_rate.lo);
  const double log_hi = std::log(space.learning_rate.hi);
  hp.learning_rate = space.learning_rate.lo == space.learning_rate.hi
                         ? space.learning_rate.lo
                         : std::exp(rng.Uniform(log_lo, log_hi));
  hp.learning_rate = std::min(hp.learning_rate, space.learning_rate.hi);
  hp.subsample_rows = rng.Uniform(space.subsample_rows.lo, space.subsample_rows.hi);
  hp.l2_leaf_penalty =
      rng.Uniform(space.l2_leaf_penalty.lo, space.l2_leaf_penalty.hi);
  hp.min_child_cover =
      rng.Uniform(space.min_child_cover.lo, space.min_child_cover.hi);
  return hp;
}

SearchResult RandomSearch(const FeatureMatrix& x, std::span<const double> y,
                          const SearchSpace& space,
                          const gbt::Hyperparameters& base, int n_trials,
                          std::uint64_t seed, const CvConfig& cv) {
  space.Validate();
  if (n_trials < 1) throw ConfigError("n_trials must be at least 1");
  Rng rng(seed);
  SearchResult result;
  for (int t = 0; t < n_trials; ++t) {
    Trial trial;
    trial.id = t;
    trial.hp = SampleHyperparameters(space, base, rng);
    const CvResult scores = CrossValidate(x, y, trial.hp, cv);
    trial.fold_r2 = scores.fold_r2;
    trial.mean_r2 = scores.mean_r2;
    if (t == 0 || trial.mean_r2 > result.best().mean_r2) result.best_trial = t;
    result.trials.push_back(std::move(trial));
  }
  return result;
}

std::string TrialLogJsonLines(const SearchResult& result) {
  std::string out;
  for (const auto& t : result.trials) {
    nlohmann::json j{{"trial", t.id},
                     {"hyperparameters", gbt::HyperparametersToJson(t.hp)},
                     {"fold_r2", t.fold_r2},
                     {"mean_r2", t.mean_r2},
                     {"best", t.id == result.best_trial}};
    out += j.dump();
    out += "\n";
  }
  return out;
}

}  // namespace gridxai::eval

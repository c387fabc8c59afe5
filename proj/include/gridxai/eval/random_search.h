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

#ifndef GRIDXAI_EVAL_RANDOM_SEARCH_H_
#define GRIDXAI_EVAL_RANDOM_SEARCH_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gridxai/common/feature_matrix.h"
#include "gridxai/eval/cross_validation.h"
#include "gridxai/gbt/hyperparameters.h"
#include "gridxai/common/random.h"
#include "json.hpp"

namespace gridxai::eval {

// Closed interval; lo == hi pins the value.
template <typename T>
struct Interval {
  T lo;
  T hi;
};

struct SearchSpace {
  Interval<int> n_trees{100, 1500};
  Interval<int> max_depth{3, 10};
  Interval<double> learning_rate{0.01, 0.3};  // sampled log-uniformly
  Interval<double> subsample_rows{0.5, 1.0};
  Interval<double> l2_leaf_penalty{0.0, 10.0};
  Interval<double> min_child_cover{1.0, 50.0};

  // Throws ConfigError for an empty interval or values outside the
  // hyperparameter ranges.
  void Validate() const;
};

nlohmann::json SearchSpaceToJson(const SearchSpace& s);
SearchSpace SearchSpaceFromJson(const nlohmann::json& j);

struct Trial {
  int id = 0;
  gbt::Hyperparameters hp;
  std::vector<double> fold_r2;
  double mean_r2 = 0.0;
};

struct SearchResult {
  std::vector<Trial> trials;
  int best_trial = 0;
  const Trial& best() const { return trials[static_cast<std::size_t>(best_trial)]; }
};

// Draws trial `id` from the space. Fields outside the space come from `base`.
gbt::Hyperparameters SampleHyperparameters(const SearchSpace& space,
                                           const gbt::Hyperparameters& base,
                                           Rng& rng);

// Samples `n_trials` configurations with `seed`, scores each by mean CV R2
// and returns them all. The best trial is the highest mean; ties keep the
// earliest.
SearchResult RandomSearch(const FeatureMatrix& x, std::span<const double> y,
                          const SearchSpace& space,
                          const gbt::Hyperparameters& base, int n_trials,
                          std::uint64_t seed, const CvConfig& cv);

// One JSON object per trial.
std::string TrialLogJsonLines(const SearchResult& result);

}  // namespace gridxai::eval

#endif  // GRIDXAI_EVAL_RANDOM_SEARCH_H_

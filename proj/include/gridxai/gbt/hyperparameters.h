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

#ifndef GRIDXAI_GBT_HYPERPARAMETERS_H_
#define GRIDXAI_GBT_HYPERPARAMETERS_H_

#include <cstdint>

namespace gridxai::gbt {

struct Hyperparameters {
  int n_trees = 200;
  int max_depth = 6;
  double learning_rate = 0.1;
  double min_child_cover = 1.0;
  double subsample_rows = 1.0;
  double subsample_features = 1.0;
  int n_histogram_bins = 256;
  double l2_leaf_penalty = 1.0;
  std::uint64_t seed = 0;

  // Throws InvalidInputError when a field is outside its range.
  void Validate() const;

  bool operator==(const Hyperparameters&) const = default;
};

}  // namespace gridxai::gbt

#endif  // GRIDXAI_GBT_HYPERPARAMETERS_H_

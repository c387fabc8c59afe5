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

#ifndef GRIDXAI_EVAL_SPLIT_H_
#define GRIDXAI_EVAL_SPLIT_H_

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gridxai/common/time.h"

namespace gridxai::eval {

struct GroupGapSplitConfig {
  int n_folds = 5;
  std::chrono::hours gap{24};
  std::uint64_t seed = 0;
};

// Row indices into the hour vector passed to GroupGapSplit.
struct Fold {
  std::vector<std::size_t> train;
  std::vector<std::size_t> test;
};

// Shuffles UTC calendar days with `seed` and deals them round-robin into
// folds. A fold tests the hours of its days and trains on every other hour
// that is more than `gap` away from all of its test hours. Throws
// InvalidInputError with fewer distinct days than folds.
std::vector<Fold> GroupGapSplit(std::span<const UtcHour> hours,
                                const GroupGapSplitConfig& config);

}  // namespace gridxai::eval

#endif  // GRIDXAI_EVAL_SPLIT_H_

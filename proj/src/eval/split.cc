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

#include "gridxai/eval/split.h"

#include <algorithm>
#include <map>

#include "gridxai/common/error.h"
#include "gridxai/common/random.h"

namespace gridxai::eval {

std::vector<Fold> GroupGapSplit(std::span<const UtcHour> hours,
                                const GroupGapSplitConfig& config) {
  if (config.n_folds < 2) throw ConfigError("n_folds must be at least 2");
  if (config.gap.count() < 0) throw ConfigError("gap must be nonnegative");

  std::map<std::chrono::sys_days, int> day_fold;
  for (const auto& h : hours) day_fold.emplace(UtcDay(h), -1);
  if (day_fold.size() < static_cast<std::size_t>(config.n_folds)) {
    throw InvalidInputError("group split needs at least " +
                            std::to_string(config.n_folds) +
                            " distinct days, got " +
                            std::to_string(day_fold.size()));
  }
  std::vector<std::chrono::sys_days> days;
  days.reserve(day_fold.size());
  for (const auto& [d, f] : day_fold) days.push_back(d);
  Rng rng(config.seed);
  rng.Shuffle(days);
  for (std::size_t i = 0; i < days.size(); ++i) {
    day_fold[days[i]] = static_cast<int>(i % static_cast<std::size_t>(config.n_folds));
  }

  std::vector<Fold> folds(static_cast<std::size_t>(config.n_folds));
  std::vector<int> row_fold(hours.size());
  for (std::size_t r = 0; r < hours.size(); ++r) {
    row_fold[r] = day_fold[UtcDay(hours[r])];
    folds[static_cast<std::size_t>(row_fold[r])].test.push_back(r);
  }
  for (std::size_t f = 0; f < folds.size(); ++f) {
    std::vector<UtcHour> test_hours;
    test_hours.reserve(folds[f].test.size());
    for (std::size_t r : folds[f].test) test_hours.push_back(hours[r]);
    std::sort(test_hours.begin(), test_hours.end());
    for (std::size_t r = 0; r < hours.size(); ++r) {
      if (row_fold[r] == static_cast<int>(f)) continue;
      const UtcHour h = hours[r];
      auto it = std::lower_bound(test_hours.begin(), test_hours.end(), h);
      bool clear = true;
      if (it != test_hours.end() && *it - h <= config.gap) clear = false;
      if (it != test_hours.begin() && h - *std::prev(it) <= config.gap) clear = false;
      if (clear) folds[f].train.push_back(r);
    }
  }
  return folds;
}

}  // namespace gridxai::eval

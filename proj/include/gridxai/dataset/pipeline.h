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

#ifndef GRIDXAI_DATASET_PIPELINE_H_
#define GRIDXAI_DATASET_PIPELINE_H_

#include <vector>

#include "gridxai/common/time.h"
#include "gridxai/dataset/intervention.h"

namespace gridxai::dataset {

// Keeps current-related interventions that at least one German TSO requested.
// Grid-reserve activations pass through.
std::vector<InterventionRecord> FilterRecords(
    const std::vector<InterventionRecord>& records);

// Only the German leg of a cross-border countertrade is published. For each
// one, append a synthetic record with the same span and power in the
// opposite direction. Originals that already have their mirror are left
// alone, so the operation is idempotent.
std::vector<InterventionRecord> CompleteCrossBorder(
    const std::vector<InterventionRecord>& records);

// Contiguous hourly index of intervention energy.
struct HourlyTarget {
  std::vector<UtcHour> hours;
  std::vector<double> volume_mwh;
};

// May 2019 through January 2023, [2019-05-01, 2023-02-01) UTC.
TimeWindow DefaultStudyWindow();

// Each record adds power x overlap to every hour it overlaps, whatever its
// direction. Throws InvalidInputError if the window is not hour-aligned or
// empty.
HourlyTarget HourlyVolume(const std::vector<InterventionRecord>& records,
                          const TimeWindow& window);

}  // namespace gridxai::dataset

#endif  // GRIDXAI_DATASET_PIPELINE_H_

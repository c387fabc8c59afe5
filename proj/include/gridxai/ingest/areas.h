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

#ifndef GRIDXAI_INGEST_AREAS_H_
#define GRIDXAI_INGEST_AREAS_H_

#include <string>
#include <string_view>
#include <vector>

#include "gridxai/common/time.h"
#include "gridxai/ingest/series.h"

namespace gridxai::ingest {

enum class AreaType { kControlArea, kBiddingZone };

struct Area {
  std::string code;
  std::string eic;
  AreaType type;
};

const std::vector<Area>& AreaCatalog();
// Throws InvalidInputError for unknown codes.
const Area& FindArea(std::string_view code);
bool IsKnownArea(std::string_view code);

// Requests for every raw series feature construction consumes.
std::vector<SeriesRequest> StudyRequests(const TimeWindow& window);

// Inverse of SeriesRequest::SeriesName.
SeriesRequest RequestForSeries(std::string_view series_name,
                               const TimeWindow& window);

}  // namespace gridxai::ingest

#endif  // GRIDXAI_INGEST_AREAS_H_

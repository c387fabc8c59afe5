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

#ifndef GRIDXAI_INGEST_XML_DOCUMENT_H_
#define GRIDXAI_INGEST_XML_DOCUMENT_H_

#include <chrono>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gridxai/common/time.h"
#include "gridxai/ingest/series.h"

namespace gridxai::ingest {

struct Period {
  UtcTime start;
  UtcTime end;
  std::chrono::minutes resolution{60};
  std::string curve_type = "A01";
  std::vector<std::pair<int, double>> points;  // (1-based position, value)
};

// A transparency-platform market document, or an acknowledgement that
// carries no data.
struct MarketDocument {
  bool acknowledgement = false;
  std::string reason_code;
  std::string reason_text;
  std::string unit;  // "MW" or "EUR/MWh"
  std::vector<Period> periods;
};

// Throws ParseError with the byte offset of the offending input for
// malformed XML or unexpected content.
MarketDocument ParseMarketDocument(std::string_view xml);

// Hourly means of all points in `clip`. Curve type A03 repeats the previous
// value for omitted positions. When several periods cover the same hour the
// earliest in document order wins.
std::vector<SeriesPoint> ToHourlyPoints(const MarketDocument& doc,
                                        const TimeWindow& clip);

}  // namespace gridxai::ingest

#endif  // GRIDXAI_INGEST_XML_DOCUMENT_H_

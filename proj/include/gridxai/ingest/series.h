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

#ifndef GRIDXAI_INGEST_SERIES_H_
#define GRIDXAI_INGEST_SERIES_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gridxai/common/time.h"

namespace gridxai::ingest {

enum class Quantity {
  kLoadForecast,
  kWindOnshoreForecast,
  kWindOffshoreForecast,
  kSolarForecast,
  kRorHydroForecast,
  kOtherGenerationForecast,  // total scheduled generation
  kScheduledExchange,
  kDayAheadPrice,
};

// load_forecast, wind_onshore_fc, wind_offshore_fc, solar_fc, ror_hydro_fc,
// other_generation_fc, scheduled_exchange, day_ahead_price.
std::string_view QuantityName(Quantity q);
Quantity ParseQuantity(std::string_view name);

struct SeriesRequest {
  Quantity quantity = Quantity::kLoadForecast;
  std::string area;  // catalog code, e.g. "tennet" or "DE_LU"
  // Exchanges only: scheduled flow from `area` to `counterparty`.
  std::optional<std::string> counterparty;
  TimeWindow interval;

  // Throws InvalidInputError for unaligned or empty intervals, unknown
  // areas, or a counterparty given iff the quantity is not an exchange.
  void Validate() const;

  // Stable text identifying the request; hashed for cache keys.
  std::string Canonical() const;
  // `<quantity>__<area>[__<counterparty>].xml`
  std::string FixtureName() const;
  // Name of the normalized series consumed by feature construction, e.g.
  // load_tennet, export_DK1, import_DK1, price_DE_LU.
  std::string SeriesName() const;

  bool operator==(const SeriesRequest&) const = default;
};

enum class Source { kLive, kCache, kFixture };
std::string_view SourceName(Source s);

struct SeriesPoint {
  UtcHour hour;
  double value = 0.0;
  bool operator==(const SeriesPoint&) const = default;
};

struct RawSeries {
  SeriesRequest request;
  std::vector<SeriesPoint> points;  // sorted, unique hours
  std::string unit;
  Source source = Source::kFixture;
  std::string fetched_at;  // ISO time for live fetches, empty otherwise
  // The platform answered with an acknowledgement instead of data.
  bool empty_response = false;
  // Documents as received, one per page.
  std::vector<std::string> raw_documents;
};

// `hour_utc,value,unit`
std::string NormalizedCsv(const RawSeries& s);
// Points and unit from NormalizedCsv output.
RawSeries ParseNormalizedCsv(std::string_view text);

}  // namespace gridxai::ingest

#endif  // GRIDXAI_INGEST_SERIES_H_

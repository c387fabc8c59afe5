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

#include "gridxai/ingest/series.h"

#include "gridxai/common/csv.h"
#include "gridxai/common/error.h"
#include "gridxai/ingest/areas.h"

namespace gridxai::ingest {

std::string_view QuantityName(Quantity q) {
  switch (q) {
    case Quantity::kLoadForecast:
      return "load_forecast";
    case Quantity::kWindOnshoreForecast:
      return "wind_onshore_fc";
    case Quantity::kWindOffshoreForecast:
      return "wind_offshore_fc";
    case Quantity::kSolarForecast:
      return "solar_fc";
    case Quantity::kRorHydroForecast:
      return "ror_hydro_fc";
    case Quantity::kOtherGenerationForecast:
      return "other_generation_fc";
    case Quantity::kScheduledExchange:
      return "scheduled_exchange";
    case Quantity::kDayAheadPrice:
      return "day_ahead_price";
  }
  return "unknown";
}

Quantity ParseQuantity(std::string_view name) {
  for (int i = 0; i <= static_cast<int>(Quantity::kDayAheadPrice); ++i) {
    const auto q = static_cast<Quantity>(i);
    if (QuantityName(q) == name) return q;
  }
  throw InvalidInputError("unknown quantity '" + std::string(name) + "'");
}

std::string_view SourceName(Source s) {
  switch (s) {
    case Source::kLive:
      return "live";
    case Source::kCache:
      return "cache";
    case Source::kFixture:
      return "fixture";
  }
  return "unknown";
}

void SeriesRequest::Validate() const {
  if (!IsHourAligned(interval.start) || !IsHourAligned(interval.end)) {
    throw InvalidInputError("request interval must be hour aligned");
  }
  if (!(interval.end > interval.start)) {
    throw InvalidInputError("request interval is empty");
  }
  FindArea(area);
  const bool exchange = quantity == Quantity::kScheduledExchange;
  if (exchange != counterparty.has_value()) {
    throw InvalidInputError(
        "a counterparty is required for scheduled exchanges and only for them");
  }
  if (counterparty) FindArea(*counterparty);
}

std::string SeriesRequest::Canonical() const {
  std::string s = "quantity=" + std::string(QuantityName(quantity)) +
                  "&area=" + area;
  if (counterparty) s += "&counterparty=" + *counterparty;
  s += "&start=" + FormatCompactUtc(interval.start) +
       "&end=" + FormatCompactUtc(interval.end) + "&resolution=PT60M";
  return s;
}

std::string SeriesRequest::FixtureName() const {
  std::string s = std::string(QuantityName(quantity)) + "__" + area;
  if (counterparty) s += "__" + *counterparty;
  return s + ".xml";
}

std::string SeriesRequest::SeriesName() const {
  switch (quantity) {
    case Quantity::kLoadForecast:
      return "load_" + area;
    case Quantity::kWindOnshoreForecast:
      return "wind_onshore_" + area;
    case Quantity::kWindOffshoreForecast:
      return "wind_offshore_" + area;
    case Quantity::kSolarForecast:
      return "solar_" + area;
    case Quantity::kRorHydroForecast:
      return "ror_hydro_" + area;
    case Quantity::kOtherGenerationForecast:
      return "generation_total_" + area;
    case Quantity::kDayAheadPrice:
      return "price_" + area;
    case Quantity::kScheduledExchange:
      if (area == "DE_LU") return "export_" + counterparty.value_or("");
      if (counterparty == "DE_LU") return "import_" + area;
      return "exchange_" + area + "_" + counterparty.value_or("");
  }
  return "unknown";
}

std::string NormalizedCsv(const RawSeries& s) {
  std::string out = "hour_utc,value,unit\n";
  for (const auto& p : s.points) {
    out += FormatIso(p.hour);
    out += ",";
    out += FormatDouble(p.value);
    out += ",";
    out += s.unit;
    out += "\n";
  }
  return out;
}

RawSeries ParseNormalizedCsv(std::string_view text) {
  const CsvTable table = ParseCsv(text, ',');
  if (table.header != std::vector<std::string>{"hour_utc", "value", "unit"}) {
    throw SchemaError("normalized series must have columns hour_utc,value,unit");
  }
  RawSeries s;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    if (row.size() != 3) {
      throw ParseError("normalized series line " +
                       std::to_string(table.line_numbers[r]) +
                       ": expected 3 fields");
    }
    const UtcTime t = ParseIso(row[0]);
    if (!IsHourAligned(t)) throw ParseError("normalized series hour not aligned");
    const UtcHour h = FloorHour(t);
    if (!s.points.empty() && !(h > s.points.back().hour)) {
      throw ParseError("normalized series hours must increase");
    }
    if (r == 0) {
      s.unit = row[2];
    } else if (row[2] != s.unit) {
      throw ParseError("normalized series mixes units");
    }
    s.points.push_back({h, ParseDouble(row[1])});
  }
  return s;
}

}  // namespace gridxai::ingest

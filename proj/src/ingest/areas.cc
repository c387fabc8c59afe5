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

#include "gridxai/ingest/areas.h"

#include "gridxai/common/error.h"
#include "gridxai/dataset/features.h"

namespace gridxai::ingest {

const std::vector<Area>& AreaCatalog() {
  static const std::vector<Area> kAreas{
      {"50hertz", "10YDE-VE-------2", AreaType::kControlArea},
      {"amprion", "10YDE-RWENET---I", AreaType::kControlArea},
      {"tennet", "10YDE-EON------1", AreaType::kControlArea},
      {"transnet", "10YDE-ENBW-----N", AreaType::kControlArea},
      {"DE_LU", "10Y1001A1001A82H", AreaType::kBiddingZone},
      {"AT", "10YAT-APG------L", AreaType::kBiddingZone},
      {"BE", "10YBE----------2", AreaType::kBiddingZone},
      {"CH", "10YCH-SWISSGRIDZ", AreaType::kBiddingZone},
      {"CZ", "10YCZ-CEPS-----N", AreaType::kBiddingZone},
      {"DK1", "10YDK-1--------W", AreaType::kBiddingZone},
      {"DK2", "10YDK-2--------M", AreaType::kBiddingZone},
      {"FR", "10YFR-RTE------C", AreaType::kBiddingZone},
      {"NL", "10YNL----------L", AreaType::kBiddingZone},
      {"PL", "10YPL-AREA-----S", AreaType::kBiddingZone},
  };
  return kAreas;
}

bool IsKnownArea(std::string_view code) {
  for (const auto& a : AreaCatalog()) {
    if (a.code == code) return true;
  }
  return false;
}

const Area& FindArea(std::string_view code) {
  for (const auto& a : AreaCatalog()) {
    if (a.code == code) return a;
  }
  throw InvalidInputError("unknown area code '" + std::string(code) + "'");
}

SeriesRequest RequestForSeries(std::string_view name, const TimeWindow& window) {
  struct Prefix {
    std::string_view text;
    Quantity quantity;
  };
  static constexpr Prefix kPrefixes[] = {
      {"load_", Quantity::kLoadForecast},
      {"wind_onshore_", Quantity::kWindOnshoreForecast},
      {"wind_offshore_", Quantity::kWindOffshoreForecast},
      {"solar_", Quantity::kSolarForecast},
      {"ror_hydro_", Quantity::kRorHydroForecast},
      {"generation_total_", Quantity::kOtherGenerationForecast},
      {"price_", Quantity::kDayAheadPrice},
  };
  SeriesRequest r;
  r.interval = window;
  const std::string home(dataset::kHomeZone);
  if (name.starts_with("export_")) {
    r.quantity = Quantity::kScheduledExchange;
    r.area = home;
    r.counterparty = std::string(name.substr(7));
  } else if (name.starts_with("import_")) {
    r.quantity = Quantity::kScheduledExchange;
    r.area = std::string(name.substr(7));
    r.counterparty = home;
  } else {
    bool matched = false;
    for (const auto& p : kPrefixes) {
      if (name.starts_with(p.text)) {
        r.quantity = p.quantity;
        r.area = std::string(name.substr(p.text.size()));
        matched = true;
        break;
      }
    }
    if (!matched) {
      throw InvalidInputError("no request maps to series '" + std::string(name) + "'");
    }
  }
  r.Validate();
  return r;
}

std::vector<SeriesRequest> StudyRequests(const TimeWindow& window) {
  std::vector<SeriesRequest> out;
  for (const auto& name : dataset::RequiredRawSeries()) {
    out.push_back(RequestForSeries(name, window));
  }
  return out;
}

}  // namespace gridxai::ingest

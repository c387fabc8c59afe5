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

#ifndef GRIDXAI_DATASET_FEATURES_H_
#define GRIDXAI_DATASET_FEATURES_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gridxai/common/feature_matrix.h"
#include "gridxai/common/time.h"

namespace gridxai::dataset {

// German control areas, lower-case as used in column names.
const std::vector<std::string>& ControlAreas();
// Control areas with offshore wind (North Sea, Baltic Sea).
const std::vector<std::string>& OffshoreAreas();

// A neighbouring country: the bidding zones whose scheduled exchanges with
// DE-LU are summed into flow_<code>, and the zone quoted as its price (empty
// when no price feature is used).
struct Neighbour {
  std::string code;
  std::vector<std::string> exchange_zones;
  std::string price_zone;
};
const std::vector<Neighbour>& Neighbours();

inline constexpr std::string_view kHomeZone = "DE_LU";

// One normalized hourly input series. Names follow the raw-series scheme:
//   load_<area>, wind_onshore_<area>, wind_offshore_<area>, solar_<area>,
//   ror_hydro_<area>, generation_total_<area>,
//   export_<zone> (DE-LU to zone), import_<zone> (zone to DE-LU),
//   price_<zone>.
struct NamedSeries {
  std::string name;
  std::string unit;
  std::vector<UtcHour> hours;
  std::vector<double> values;
};

// Every raw series name BaseFeatures() consumes.
std::vector<std::string> RequiredRawSeries();

// Base feature matrix on the hourly index of `window`. Hours a series does
// not cover are NaN. Derives gen_rest_<area> (total minus wind, solar and
// run-of-river), flow_<country> (net scheduled export) and
// price_diff_<country> (neighbour minus German price). Throws SchemaError
// naming the first missing raw series.
FeatureMatrix BaseFeatures(const std::vector<NamedSeries>& series,
                           const TimeWindow& window);

// Base columns: the full set plus ror_hydro_50hertz, which no model uses.
std::vector<std::string> BaseFeatureNames();
// The 42 columns of the full model.
std::vector<std::string> FullFeatureNames();
// Full set with the constituents of wind_north and hydro_south replaced by
// the engineered columns.
std::vector<std::string> EngineeredFeatureNames();
// wind_north, hydro_south, flow_DK, flow_FR, solar_DE, residual_load_transnet.
std::vector<std::string> ReducedFeatureNames();
// Columns EngineerFeatures() adds, in order.
std::vector<std::string> DerivedFeatureNames();

std::string UnitForFeature(std::string_view name);

// Adds wind_north (Tennet + 50Hertz wind), hydro_south (Tennet + Transnet
// run-of-river), residual_load_<area> (load minus wind, solar and
// run-of-river) and solar_DE. Existing columns are untouched. Throws
// SchemaError naming a missing constituent.
FeatureMatrix EngineerFeatures(const FeatureMatrix& base);

// Columns for `set` from a matrix that went through EngineerFeatures().
// `include` adds columns, `exclude` removes them; ror_hydro_50hertz is never
// emitted.
FeatureMatrix SelectFeatureSet(const FeatureMatrix& engineered, FeatureSet set,
                               std::span<const std::string> include = {},
                               std::span<const std::string> exclude = {});

}  // namespace gridxai::dataset

#endif  // GRIDXAI_DATASET_FEATURES_H_

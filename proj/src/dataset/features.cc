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

#include "gridxai/dataset/features.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "gridxai/common/error.h"

namespace gridxai::dataset {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr std::string_view kExcludedAlways = "ror_hydro_50hertz";

bool HasOffshore(const std::string& area) {
  const auto& off = OffshoreAreas();
  return std::find(off.begin(), off.end(), area) != off.end();
}

// Raw series aligned to the window's hourly index.
class SeriesTable {
 public:
  SeriesTable(const std::vector<NamedSeries>& series, const TimeWindow& window)
      : first_(FloorHour(window.start)),
        n_(static_cast<std::size_t>(
            (FloorHour(window.end) - FloorHour(window.start)).count())) {
    for (const auto& s : series) {
      std::vector<double> v(n_, kNaN);
      for (std::size_t i = 0; i < s.hours.size(); ++i) {
        const auto offset = (s.hours[i] - first_).count();
        if (offset >= 0 && static_cast<std::size_t>(offset) < n_) {
          v[static_cast<std::size_t>(offset)] = s.values[i];
        }
      }
      by_name_[s.name] = std::move(v);
    }
  }

  const std::vector<double>& Get(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) {
      throw SchemaError("missing raw series '" + name + "'");
    }
    return it->second;
  }

  std::size_t size() const { return n_; }
  UtcHour first() const { return first_; }

 private:
  UtcHour first_;
  std::size_t n_;
  std::map<std::string, std::vector<double>> by_name_;
};

std::vector<double> Combine(std::span<const std::vector<double>* const> plus,
                            std::span<const std::vector<double>* const> minus,
                            std::size_t n) {
  std::vector<double> out(n, 0.0);
  for (const auto* v : plus) {
    for (std::size_t i = 0; i < n; ++i) out[i] += (*v)[i];
  }
  for (const auto* v : minus) {
    for (std::size_t i = 0; i < n; ++i) out[i] -= (*v)[i];
  }
  return out;
}

std::span<const double> Need(const FeatureMatrix& m, const std::string& name) {
  auto idx = m.Find(name);
  if (!idx) {
    throw SchemaError("cannot engineer features: missing constituent column '" +
                      name + "'");
  }
  return m.column(*idx);
}

}  // namespace

const std::vector<std::string>& ControlAreas() {
  static const std::vector<std::string> kAreas{"50hertz", "amprion", "tennet",
                                               "transnet"};
  return kAreas;
}

const std::vector<std::string>& OffshoreAreas() {
  static const std::vector<std::string> kAreas{"50hertz", "tennet"};
  return kAreas;
}

const std::vector<Neighbour>& Neighbours() {
  static const std::vector<Neighbour> kNeighbours{
      {"AT", {"AT"}, "AT"},  {"BE", {"BE"}, "BE"},
      {"CH", {"CH"}, ""},    {"CZ", {"CZ"}, "CZ"},
      {"DK", {"DK1", "DK2"}, "DK1"}, {"FR", {"FR"}, "FR"},
      {"NL", {"NL"}, "NL"},  {"PL", {"PL"}, ""},
  };
  return kNeighbours;
}

std::vector<std::string> RequiredRawSeries() {
  std::vector<std::string> out;
  for (const auto& a : ControlAreas()) {
    out.push_back("load_" + a);
    out.push_back("wind_onshore_" + a);
    if (HasOffshore(a)) out.push_back("wind_offshore_" + a);
    out.push_back("solar_" + a);
    out.push_back("ror_hydro_" + a);
    out.push_back("generation_total_" + a);
  }
  for (const auto& n : Neighbours()) {
    for (const auto& z : n.exchange_zones) {
      out.push_back("export_" + z);
      out.push_back("import_" + z);
    }
  }
  out.push_back("price_" + std::string(kHomeZone));
  for (const auto& n : Neighbours()) {
    if (!n.price_zone.empty()) out.push_back("price_" + n.price_zone);
  }
  return out;
}

std::vector<std::string> BaseFeatureNames() {
  std::vector<std::string> out;
  const auto& areas = ControlAreas();
  for (const auto& a : areas) out.push_back("load_" + a);
  for (const auto& a : areas) out.push_back("wind_onshore_" + a);
  for (const auto& a : OffshoreAreas()) out.push_back("wind_offshore_" + a);
  for (const auto& a : areas) out.push_back("solar_" + a);
  for (const auto& a : areas) out.push_back("ror_hydro_" + a);
  for (const auto& a : areas) out.push_back("gen_rest_" + a);
  for (const auto& n : Neighbours()) out.push_back("flow_" + n.code);
  out.push_back("price_DE");
  for (const auto& n : Neighbours()) {
    if (!n.price_zone.empty()) out.push_back("price_" + n.code);
  }
  for (const auto& n : Neighbours()) {
    if (!n.price_zone.empty()) out.push_back("price_diff_" + n.code);
  }
  return out;
}

std::vector<std::string> FullFeatureNames() {
  std::vector<std::string> out = BaseFeatureNames();
  std::erase(out, std::string(kExcludedAlways));
  return out;
}

std::vector<std::string> DerivedFeatureNames() {
  std::vector<std::string> out{"wind_north", "hydro_south"};
  for (const auto& a : ControlAreas()) out.push_back("residual_load_" + a);
  out.push_back("solar_DE");
  return out;
}

std::vector<std::string> EngineeredFeatureNames() {
  const std::vector<std::string> replaced{
      "wind_onshore_50hertz", "wind_onshore_tennet", "wind_offshore_50hertz",
      "wind_offshore_tennet", "ror_hydro_tennet",    "ror_hydro_transnet"};
  std::vector<std::string> out;
  for (const auto& name : FullFeatureNames()) {
    if (std::find(replaced.begin(), replaced.end(), name) == replaced.end()) {
      out.push_back(name);
    }
  }
  for (const auto& name : DerivedFeatureNames()) out.push_back(name);
  return out;
}

std::vector<std::string> ReducedFeatureNames() {
  return {"wind_north", "hydro_south", "flow_DK",
          "flow_FR",    "solar_DE",    "residual_load_transnet"};
}

std::string UnitForFeature(std::string_view name) {
  if (name.substr(0, 6) == "price_") return "EUR/MWh";
  return "MW";
}

FeatureMatrix BaseFeatures(const std::vector<NamedSeries>& series,
                           const TimeWindow& window) {
  if (!IsHourAligned(window.start) || !IsHourAligned(window.end) ||
      !(window.end > window.start)) {
    throw InvalidInputError("feature window must be a non-empty hour range");
  }
  const SeriesTable table(series, window);
  const std::size_t n = table.size();
  std::vector<UtcHour> hours(n);
  for (std::size_t i = 0; i < n; ++i) {
    hours[i] = table.first() + std::chrono::hours(i);
  }
  FeatureMatrix m(std::move(hours));
  m.set_feature_set(FeatureSet::kBase);
  auto add = [&](const std::string& name, std::vector<double> v) {
    m.AddColumn({name, UnitForFeature(name)}, std::move(v));
  };
  const auto& areas = ControlAreas();
  for (const auto& a : areas) add("load_" + a, table.Get("load_" + a));
  for (const auto& a : areas) add("wind_onshore_" + a, table.Get("wind_onshore_" + a));
  for (const auto& a : OffshoreAreas()) {
    add("wind_offshore_" + a, table.Get("wind_offshore_" + a));
  }
  for (const auto& a : areas) add("solar_" + a, table.Get("solar_" + a));
  for (const auto& a : areas) add("ror_hydro_" + a, table.Get("ror_hydro_" + a));
  for (const auto& a : areas) {
    std::vector<const std::vector<double>*> minus{
        &table.Get("wind_onshore_" + a), &table.Get("solar_" + a),
        &table.Get("ror_hydro_" + a)};
    if (HasOffshore(a)) minus.push_back(&table.Get("wind_offshore_" + a));
    const std::vector<const std::vector<double>*> plus{
        &table.Get("generation_total_" + a)};
    add("gen_rest_" + a, Combine(plus, minus, n));
  }
  for (const auto& nb : Neighbours()) {
    std::vector<const std::vector<double>*> plus, minus;
    for (const auto& z : nb.exchange_zones) {
      plus.push_back(&table.Get("export_" + z));
      minus.push_back(&table.Get("import_" + z));
    }
    add("flow_" + nb.code, Combine(plus, minus, n));
  }
  const auto& home = table.Get("price_" + std::string(kHomeZone));
  add("price_DE", home);
  for (const auto& nb : Neighbours()) {
    if (!nb.price_zone.empty()) {
      add("price_" + nb.code, table.Get("price_" + nb.price_zone));
    }
  }
  for (const auto& nb : Neighbours()) {
    if (nb.price_zone.empty()) continue;
    const std::vector<const std::vector<double>*> plus{
        &table.Get("price_" + nb.price_zone)};
    const std::vector<const std::vector<double>*> minus{&home};
    add("price_diff_" + nb.code, Combine(plus, minus, n));
  }
  return m;
}

FeatureMatrix EngineerFeatures(const FeatureMatrix& base) {
  const std::size_t n = base.rows();
  auto sum_of = [&](const std::vector<std::string>& names) {
    std::vector<double> out(n, 0.0);
    for (const auto& name : names) {
      auto col = Need(base, name);
      for (std::size_t i = 0; i < n; ++i) out[i] += col[i];
    }
    return out;
  };
  // Resolve every constituent before touching the output.
  std::vector<double> wind_north =
      sum_of({"wind_onshore_tennet", "wind_offshore_tennet",
              "wind_onshore_50hertz", "wind_offshore_50hertz"});
  std::vector<double> hydro_south = sum_of({"ror_hydro_tennet", "ror_hydro_transnet"});
  std::vector<std::vector<double>> residual;
  std::vector<std::string> solar_names;
  for (const auto& a : ControlAreas()) {
    std::vector<double> r(n);
    auto load = Need(base, "load_" + a);
    auto wind = Need(base, "wind_onshore_" + a);
    auto solar = Need(base, "solar_" + a);
    auto ror = Need(base, "ror_hydro_" + a);
    std::span<const double> offshore;
    if (HasOffshore(a)) offshore = Need(base, "wind_offshore_" + a);
    for (std::size_t i = 0; i < n; ++i) {
      double v = load[i] - wind[i] - solar[i] - ror[i];
      if (!offshore.empty()) v -= offshore[i];
      r[i] = v;
    }
    residual.push_back(std::move(r));
    solar_names.push_back("solar_" + a);
  }
  std::vector<double> solar_de = sum_of(solar_names);

  FeatureMatrix out = base;
  out.AddColumn({"wind_north", "MW"}, std::move(wind_north));
  out.AddColumn({"hydro_south", "MW"}, std::move(hydro_south));
  for (std::size_t k = 0; k < ControlAreas().size(); ++k) {
    out.AddColumn({"residual_load_" + ControlAreas()[k], "MW"},
                  std::move(residual[k]));
  }
  out.AddColumn({"solar_DE", "MW"}, std::move(solar_de));
  out.set_feature_set(FeatureSet::kBase);
  return out;
}

FeatureMatrix SelectFeatureSet(const FeatureMatrix& engineered, FeatureSet set,
                               std::span<const std::string> include,
                               std::span<const std::string> exclude) {
  std::vector<std::string> names;
  switch (set) {
    case FeatureSet::kBase:
      names = BaseFeatureNames();
      break;
    case FeatureSet::kFull:
      names = FullFeatureNames();
      break;
    case FeatureSet::kEngineered:
      names = EngineeredFeatureNames();
      break;
    case FeatureSet::kReduced:
      names = ReducedFeatureNames();
      break;
  }
  for (const auto& extra : include) {
    if (std::find(names.begin(), names.end(), extra) == names.end()) {
      names.push_back(extra);
    }
  }
  for (const auto& drop : exclude) std::erase(names, drop);
  if (set != FeatureSet::kBase) std::erase(names, std::string(kExcludedAlways));
  if (names.empty()) throw ConfigError("feature selection is empty");
  FeatureMatrix out = engineered.Select(names);
  out.set_feature_set(set);
  return out;
}

}  // namespace gridxai::dataset

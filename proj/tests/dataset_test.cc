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

#include <cmath>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "gridxai/common/csv.h"
#include "gridxai/common/error.h"
#include "gridxai/dataset/assemble.h"
#include "gridxai/dataset/dataset_io.h"
#include "gridxai/dataset/features.h"
#include "gridxai/dataset/intervention.h"
#include "gridxai/dataset/pipeline.h"
#include "gridxai/eval/synthetic.h"
#include "test_util.h"

namespace gridxai::dataset {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

TimeWindow Day() { return {MakeUtc(2021, 6, 1), MakeUtc(2021, 6, 2)}; }

// Every raw series with a distinct, name-derived value per hour.
std::vector<NamedSeries> RawSeries(const TimeWindow& w) {
  std::vector<NamedSeries> out;
  int k = 1;
  for (const auto& name : RequiredRawSeries()) {
    NamedSeries s{name, UnitForFeature(name), {}, {}};
    for (UtcHour h = FloorHour(w.start); UtcTime(h) < w.end; h += std::chrono::hours(1)) {
      s.hours.push_back(h);
      s.values.push_back(k * 100.0 + HourOfDay(h));
    }
    out.push_back(std::move(s));
    ++k;
  }
  return out;
}

double Value(const std::vector<NamedSeries>& raw, const std::string& name, std::size_t i) {
  for (const auto& s : raw) {
    if (s.name == name) return s.values[i];
  }
  ADD_FAILURE() << "no raw series " << name;
  return kNaN;
}

TEST(Features, CatalogSizes) {
  EXPECT_EQ(BaseFeatureNames().size(), 43u);
  EXPECT_EQ(FullFeatureNames().size(), 42u);
  EXPECT_EQ(ReducedFeatureNames(),
            (std::vector<std::string>{"wind_north", "hydro_south", "flow_DK", "flow_FR",
                                      "solar_DE", "residual_load_transnet"}));
  EXPECT_EQ(UnitForFeature("price_FR"), "EUR/MWh");
  EXPECT_EQ(UnitForFeature("flow_FR"), "MW");
}

TEST(Features, BaseAndEngineeredColumnsFollowDefinitions) {
  const auto raw = RawSeries(Day());
  const FeatureMatrix base = BaseFeatures(raw, Day());
  ASSERT_EQ(base.rows(), 24u);
  EXPECT_EQ(base.names(), BaseFeatureNames());
  const FeatureMatrix eng = EngineerFeatures(base);
  for (std::size_t i = 0; i < 24; ++i) {
    EXPECT_EQ(eng.at(i, eng.IndexOf("wind_north")),
              Value(raw, "wind_onshore_tennet", i) + Value(raw, "wind_offshore_tennet", i) +
                  Value(raw, "wind_onshore_50hertz", i) +
                  Value(raw, "wind_offshore_50hertz", i));
    EXPECT_EQ(eng.at(i, eng.IndexOf("hydro_south")),
              Value(raw, "ror_hydro_tennet", i) + Value(raw, "ror_hydro_transnet", i));
    EXPECT_EQ(eng.at(i, eng.IndexOf("flow_DK")),
              Value(raw, "export_DK1", i) + Value(raw, "export_DK2", i) -
                  Value(raw, "import_DK1", i) - Value(raw, "import_DK2", i));
    EXPECT_EQ(eng.at(i, eng.IndexOf("gen_rest_amprion")),
              Value(raw, "generation_total_amprion", i) - Value(raw, "wind_onshore_amprion", i) -
                  Value(raw, "solar_amprion", i) - Value(raw, "ror_hydro_amprion", i));
    EXPECT_EQ(eng.at(i, eng.IndexOf("residual_load_transnet")),
              Value(raw, "load_transnet", i) - Value(raw, "wind_onshore_transnet", i) -
                  Value(raw, "solar_transnet", i) - Value(raw, "ror_hydro_transnet", i));
    EXPECT_EQ(eng.at(i, eng.IndexOf("price_diff_FR")),
              Value(raw, "price_FR", i) - Value(raw, "price_DE_LU", i));
    EXPECT_EQ(eng.at(i, eng.IndexOf("price_DK")), Value(raw, "price_DK1", i));
  }
  const FeatureMatrix reduced = SelectFeatureSet(eng, FeatureSet::kReduced, {}, {});
  EXPECT_EQ(reduced.names(), ReducedFeatureNames());
  const FeatureMatrix full = SelectFeatureSet(eng, FeatureSet::kFull, {}, {});
  EXPECT_FALSE(full.Find("ror_hydro_50hertz").has_value());
}

TEST(Features, IncludeExcludeAndErrors) {
  const auto eng = EngineerFeatures(BaseFeatures(RawSeries(Day()), Day()));
  const std::vector<std::string> inc = {"price_DE"}, exc = {"flow_FR"};
  const auto sel = SelectFeatureSet(eng, FeatureSet::kReduced, inc, exc);
  EXPECT_TRUE(sel.Find("price_DE"));
  EXPECT_FALSE(sel.Find("flow_FR"));
  const std::vector<std::string> unknown = {"bogus"};
  EXPECT_THROW(SelectFeatureSet(eng, FeatureSet::kReduced, unknown, {}), SchemaError);
  auto raw = RawSeries(Day());
  raw.pop_back();
  EXPECT_THROW(BaseFeatures(raw, Day()), SchemaError);
}

TEST(Features, MissingHoursBecomeNaN) {
  auto raw = RawSeries(Day());
  raw[0].hours.erase(raw[0].hours.begin() + 5);
  raw[0].values.erase(raw[0].values.begin() + 5);
  const auto base = BaseFeatures(raw, Day());
  EXPECT_TRUE(std::isnan(base.at(5, base.IndexOf(raw[0].name))));
  EXPECT_FALSE(std::isnan(base.at(6, base.IndexOf(raw[0].name))));
}

InterventionRecord Rec(UtcTime s, UtcTime e, double p) {
  InterventionRecord r;
  r.start = s;
  r.end = e;
  r.power_mw = p;
  r.requesting_tsos = {"Amprion"};
  return r;
}

TEST(Pipeline, FilterKeepsDomesticCurrentOnly) {
  auto a = Rec(MakeUtc(2021, 1, 1), MakeUtc(2021, 1, 1, 1), 10);
  auto b = a;
  b.reason = Reason::kVoltage;
  auto c = a;
  c.domestic_request = false;
  auto d = a;
  d.kind = MeasureKind::kGridReserve;
  const auto out = FilterRecords({a, b, c, d});
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0], a);
  EXPECT_EQ(out[1], d);
}

TEST(Pipeline, CrossBorderCompletionAddsOneMirror) {
  auto ct = Rec(MakeUtc(2021, 1, 1), MakeUtc(2021, 1, 1, 2), 50);
  ct.kind = MeasureKind::kCountertrade;
  ct.cross_border = true;
  ct.direction = Direction::kIncrease;
  const auto once = CompleteCrossBorder({ct});
  ASSERT_EQ(once.size(), 2u);
  EXPECT_TRUE(once[1].synthetic);
  EXPECT_EQ(once[1].direction, Direction::kDecrease);
  EXPECT_EQ(once[1].power_mw, 50.0);
  // Idempotent: the mirror already present is not duplicated.
  EXPECT_EQ(CompleteCrossBorder(once), once);
  auto domestic_ct = ct;
  domestic_ct.cross_border = false;
  EXPECT_EQ(CompleteCrossBorder({domestic_ct}).size(), 1u);
}

TEST(Pipeline, HourlyVolumeSplitsAcrossHours) {
  const TimeWindow w{MakeUtc(2021, 1, 1), MakeUtc(2021, 1, 1, 3)};
  const auto t = HourlyVolume({Rec(MakeUtc(2021, 1, 1, 0, 30), MakeUtc(2021, 1, 1, 2, 15), 100)}, w);
  EXPECT_EQ(t.volume_mwh, (std::vector<double>{50.0, 100.0, 25.0}));
  // Records outside the window contribute nothing; partially outside are clipped.
  const auto clipped = HourlyVolume(
      {Rec(MakeUtc(2020, 12, 31, 23), MakeUtc(2021, 1, 1, 1), 10),
       Rec(MakeUtc(2021, 2, 1), MakeUtc(2021, 2, 2), 10)},
      w);
  EXPECT_EQ(clipped.volume_mwh, (std::vector<double>{10.0, 0.0, 0.0}));
}

TEST(Pipeline, HourlyVolumeConservesEnergyAgainstMinuteOracle) {
  const auto records = RecordsFromJsonLines(
      ReadFile(testing::FixturesDir() / "interventions_1000.jsonl"));
  ASSERT_EQ(records.size(), 1000u);
  const TimeWindow w{MakeUtc(2021, 3, 1), MakeUtc(2021, 4, 1)};
  const auto target = HourlyVolume(records, w);
  // Oracle: integrate each record minute by minute.
  std::vector<double> oracle(target.hours.size(), 0.0);
  double total = 0.0;
  for (const auto& r : records) {
    total += r.power_mw * r.duration_hours();
    for (UtcTime t = r.start; t < r.end; t += std::chrono::minutes(1)) {
      const auto idx = (FloorHour(t) - FloorHour(w.start)).count();
      oracle[static_cast<std::size_t>(idx)] += r.power_mw / 60.0;
    }
  }
  for (std::size_t i = 0; i < oracle.size(); ++i) {
    EXPECT_NEAR(target.volume_mwh[i], oracle[i], 1e-9 * std::max(1.0, oracle[i]));
  }
  const double sum = std::accumulate(target.volume_mwh.begin(), target.volume_mwh.end(), 0.0);
  EXPECT_NEAR(sum, total, 1e-6 * total);
}

TEST(Pipeline, HourlyVolumeRejectsBadWindowsAndRecords) {
  EXPECT_THROW(HourlyVolume({}, {MakeUtc(2021, 1, 1, 0, 30), MakeUtc(2021, 1, 2)}),
               InvalidInputError);
  EXPECT_THROW(HourlyVolume({}, {MakeUtc(2021, 1, 2), MakeUtc(2021, 1, 1)}),
               InvalidInputError);
  auto bad = Rec(MakeUtc(2021, 1, 1, 2), MakeUtc(2021, 1, 1, 1), 1);
  EXPECT_THROW(HourlyVolume({bad}, {MakeUtc(2021, 1, 1), MakeUtc(2021, 1, 2)}),
               InvalidInputError);
}

TEST(Intervention, JsonRoundTripAndTsoClassification) {
  auto r = Rec(MakeUtc(2021, 5, 1, 10, 15), MakeUtc(2021, 5, 1, 11), 12.5);
  r.plant_id = "Anlage 3";
  r.kind = MeasureKind::kCountertrade;
  r.cross_border = true;
  EXPECT_EQ(RecordFromJson(RecordToJson(r)), r);
  const auto text = RecordsToJsonLines({r, r});
  EXPECT_EQ(RecordsFromJsonLines(text).size(), 2u);
  EXPECT_TRUE(IsGermanTso("50Hertz"));
  EXPECT_TRUE(IsGermanTso("TenneT TSO GmbH"));
  EXPECT_TRUE(IsGermanTso("TransnetBW"));
  EXPECT_FALSE(IsGermanTso("TenneT NL"));
  EXPECT_FALSE(IsGermanTso("APG"));
  EXPECT_THROW(RecordFromJson(nlohmann::json::parse(R"({"start":"x"})")), Error);
}

TEST(Assemble, InterpolatesShortGapsAndDropsLongOnes) {
  std::vector<double> a(12), b(12);
  for (int i = 0; i < 12; ++i) {
    a[i] = i * 10.0;
    b[i] = 1.0;
  }
  a[2] = a[3] = kNaN;                  // bounded run of 2: filled
  for (int i = 5; i < 10; ++i) b[i] = kNaN;  // run of 5: kept NaN
  const auto x = testing::MakeMatrix({"a", "b"}, {a, b});
  HourlyTarget target{x.hours(), std::vector<double>(12, 2.0)};
  const Dataset d = Assemble(target, x, {.max_gap_hours = 3});
  EXPECT_EQ(d.x.rows(), 7u);
  EXPECT_EQ(d.provenance.dropped_rows, 5u);
  EXPECT_EQ(d.provenance.interpolated_per_column.at("a"), 2u);
  EXPECT_EQ(d.provenance.missing_per_column.at("b"), 5u);
  EXPECT_DOUBLE_EQ(d.x.at(2, 0), 20.0);
  EXPECT_DOUBLE_EQ(d.x.at(3, 0), 30.0);
  EXPECT_EQ(d.provenance.kept_rows + d.provenance.dropped_rows, d.provenance.joined_rows);
}

TEST(Assemble, InnerJoinOnHours) {
  const auto x = testing::MakeMatrix({"a"}, {{1, 2, 3, 4}});
  HourlyTarget target;
  target.hours = {x.hours()[1], x.hours()[3], x.hours()[3] + std::chrono::hours(5)};
  target.volume_mwh = {10, 30, 50};
  const Dataset d = Assemble(target, x);
  EXPECT_EQ(d.y, (std::vector<double>{10, 30}));
  EXPECT_EQ(d.x.at(0, 0), 2.0);
  HourlyTarget disjoint{{x.hours()[3] + std::chrono::hours(9)}, {1.0}};
  EXPECT_THROW(Assemble(disjoint, x), InvalidInputError);
}

TEST(DatasetIo, CsvAndProvenanceRoundTrip) {
  const auto data = eval::GenerateStudy({.n_days = 3, .seed = 1});
  const auto dir = testing::TempDir("dataset_io");
  Dataset d{data.x, data.y, {}};
  d.provenance.kept_rows = data.x.rows();
  d.provenance.feature_set = "reduced";
  SaveDataset(d, dir / "ds.csv");
  const Dataset back = LoadDataset(dir / "ds.csv");
  EXPECT_EQ(back.y, d.y);
  EXPECT_EQ(back.x.names(), d.x.names());
  EXPECT_EQ(back.x.hours(), d.x.hours());
  for (std::size_t c = 0; c < d.x.cols(); ++c) {
    for (std::size_t r = 0; r < d.x.rows(); ++r) EXPECT_EQ(back.x.at(r, c), d.x.at(r, c));
  }
  EXPECT_EQ(back.provenance.kept_rows, d.provenance.kept_rows);
  EXPECT_EQ(ReadFile(dir / "ds.csv"), DatasetToCsv(d.x, d.y));
}


TEST(Pipeline, HourlyVolumeInvariantUnderSplittingRecords) {
  const auto records = RecordsFromJsonLines(
      ReadFile(testing::FixturesDir() / "interventions_1000.jsonl"));
  const TimeWindow w{MakeUtc(2021, 3, 1), MakeUtc(2021, 4, 1)};
  std::vector<InterventionRecord> split;
  Rng rng(4);
  for (const auto& r : records) {
    const auto minutes = std::chrono::duration_cast<std::chrono::minutes>(r.end - r.start).count();
    if (minutes < 2) {
      split.push_back(r);
      continue;
    }
    const UtcTime cut = r.start + std::chrono::minutes(rng.Integer(1, minutes - 1));
    auto a = r, b = r;
    a.end = cut;
    b.start = cut;
    split.push_back(a);
    split.push_back(b);
  }
  const auto whole = HourlyVolume(records, w);
  const auto parts = HourlyVolume(split, w);
  for (std::size_t i = 0; i < whole.volume_mwh.size(); ++i) {
    EXPECT_NEAR(whole.volume_mwh[i], parts.volume_mwh[i],
                1e-9 * std::max(1.0, whole.volume_mwh[i]));
  }
}

TEST(Features, EngineeringOnlyAppendsColumns) {
  const auto base = BaseFeatures(RawSeries(Day()), Day());
  const auto eng = EngineerFeatures(base);
  EXPECT_EQ(eng.cols(), base.cols() + DerivedFeatureNames().size());
  for (std::size_t c = 0; c < base.cols(); ++c) {
    EXPECT_EQ(eng.columns()[c].name, base.columns()[c].name);
    for (std::size_t r = 0; r < base.rows(); ++r) EXPECT_EQ(eng.at(r, c), base.at(r, c));
  }
  for (std::size_t k = 0; k < DerivedFeatureNames().size(); ++k) {
    EXPECT_EQ(eng.columns()[base.cols() + k].name, DerivedFeatureNames()[k]);
  }
}

TEST(Features, WorkedExamples) {
  // Tennet 5 GW + 50Hertz 3 GW of wind; load 10, wind 2, solar 1, hydro 0.5 GW.
  auto raw = RawSeries(Day());
  for (auto& s : raw) {
    double v = 0.0;
    if (s.name == "wind_onshore_tennet") v = 5000;
    if (s.name == "wind_onshore_50hertz") v = 3000;
    if (s.name == "load_transnet") v = 10000;
    if (s.name == "wind_onshore_transnet") v = 2000;
    if (s.name == "solar_transnet") v = 1000;
    if (s.name == "ror_hydro_transnet") v = 500;
    std::fill(s.values.begin(), s.values.end(), v);
  }
  const auto eng = EngineerFeatures(BaseFeatures(raw, Day()));
  EXPECT_EQ(eng.at(0, eng.IndexOf("wind_north")), 8000.0);
  EXPECT_EQ(eng.at(0, eng.IndexOf("residual_load_transnet")), 6500.0);
}

}  // namespace
}  // namespace gridxai::dataset

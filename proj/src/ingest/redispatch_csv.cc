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

#include "gridxai/ingest/redispatch_csv.h"

#include <cmath>
#include <map>
#include <optional>

#include "gridxai/common/csv.h"
#include "gridxai/common/error.h"

namespace gridxai::ingest {
namespace {

using dataset::Direction;
using dataset::InterventionRecord;
using dataset::MeasureKind;
using dataset::Reason;

// Row-level failure, turned into a reject.
struct RowError {
  std::string reason;
};

struct Columns {
  std::optional<std::size_t> start, start_date, start_time;
  std::optional<std::size_t> end, end_date, end_time;
  std::optional<std::size_t> start_zone, end_zone;
  std::size_t requesting, direction, reason, kind;
  std::optional<std::size_t> power, energy, plant, cross_border;
};

std::size_t Require(const CsvTable& t, std::string_view name) {
  auto idx = t.FindColumn(name);
  if (!idx) {
    throw SchemaError("redispatch CSV lacks mandatory column " + std::string(name));
  }
  return *idx;
}

Columns ResolveColumns(const CsvTable& t) {
  Columns c;
  c.start = t.FindColumn("BEGINN");
  c.end = t.FindColumn("ENDE");
  c.start_date = t.FindColumn("BEGINN_DATUM");
  c.start_time = t.FindColumn("BEGINN_UHRZEIT");
  c.end_date = t.FindColumn("ENDE_DATUM");
  c.end_time = t.FindColumn("ENDE_UHRZEIT");
  if (!c.start && !(c.start_date && c.start_time)) Require(t, "BEGINN");
  if (!c.end && !(c.end_date && c.end_time)) Require(t, "ENDE");
  c.start_zone = t.FindColumn("ZEITZONE_VON");
  c.end_zone = t.FindColumn("ZEITZONE_BIS");
  c.requesting = Require(t, "ANFORDERNDER_UENB");
  c.direction = Require(t, "RICHTUNG");
  c.reason = Require(t, "GRUND_DER_MASSNAHME");
  c.kind = Require(t, "ART_DER_MASSNAHME");
  c.power = t.FindColumn("MITTLERE_LEISTUNG_MW");
  c.energy = t.FindColumn("GESAMTE_ARBEIT_MWH");
  if (!c.power && !c.energy) Require(t, "MITTLERE_LEISTUNG_MW");
  c.plant = t.FindColumn("BETROFFENE_ANLAGE");
  c.cross_border = t.FindColumn("GRENZUEBERSCHREITEND");
  return c;
}

std::optional<int> ZoneOffset(std::string_view zone) {
  const std::string z = ToLower(Trim(zone));
  if (z.empty()) return std::nullopt;
  if (z == "cest" || z == "mesz" || z == "utc+2" || z == "+02:00") return 2;
  if (z == "cet" || z == "mez" || z == "utc+1" || z == "+01:00") return 1;
  if (z == "utc" || z == "gmt" || z == "z") return 0;
  throw RowError{"unknown time zone '" + std::string(zone) + "'"};
}

LocalTime ParseLocal(std::string_view text) {
  try {
    return ParseGermanLocal(text);
  } catch (const Error& e) {
    throw RowError{e.what()};
  }
}

Direction ParseRichtung(std::string_view text) {
  const std::string t = ToLower(text);
  if (t.find("erh") != std::string::npos || t.find("increase") != std::string::npos) {
    return Direction::kIncrease;
  }
  if (t.find("reduz") != std::string::npos || t.find("decrease") != std::string::npos) {
    return Direction::kDecrease;
  }
  throw RowError{"unknown direction '" + std::string(text) + "'"};
}

Reason ParseGrund(std::string_view text) {
  const std::string t = ToLower(Trim(text));
  if (t.starts_with("strom") || t == "current") return Reason::kCurrent;
  if (t.starts_with("spannung") || t == "voltage") return Reason::kVoltage;
  return Reason::kOther;
}

MeasureKind ParseArt(std::string_view text) {
  const std::string t = ToLower(text);
  if (t.find("countertrad") != std::string::npos) return MeasureKind::kCountertrade;
  if (t.find("reserve") != std::string::npos) return MeasureKind::kGridReserve;
  return MeasureKind::kRedispatch;
}

bool ParseFlag(std::string_view text) {
  const std::string t = ToLower(Trim(text));
  return t == "ja" || t == "yes" || t == "true" || t == "1" || t == "x";
}

std::vector<std::string> SplitTsos(std::string_view text) {
  std::vector<std::string> out;
  std::string current;
  auto flush = [&] {
    std::string t = Trim(current);
    if (!t.empty()) out.push_back(std::move(t));
    current.clear();
  };
  for (char c : text) {
    if (c == ',' || c == '/' || c == '+' || c == '|') {
      flush();
    } else {
      current += c;
    }
  }
  flush();
  return out;
}

double ParseAmount(std::string_view text, const char* what) {
  auto v = ParseGermanDecimal(text);
  if (!v) throw RowError{std::string("unparseable ") + what + " '" + std::string(text) + "'"};
  if (!std::isfinite(*v) || *v < 0.0) {
    throw RowError{std::string(what) + " must be a nonnegative number"};
  }
  return *v;
}

class TimeResolver {
 public:
  UtcTime Start(LocalTime local, std::optional<int> zone) {
    if (zone) return UtcTime(local.time_since_epoch()) - std::chrono::hours(*zone);
    const auto candidates = BerlinLocalToUtcCandidates(local);
    if (candidates.empty()) return SpringGap(local);
    if (candidates.size() == 1) return candidates.front();
    const int seen = seen_[local]++;
    return seen == 0 ? candidates.front() : candidates.back();
  }

  static UtcTime End(LocalTime local, std::optional<int> zone, UtcTime start) {
    if (zone) return UtcTime(local.time_since_epoch()) - std::chrono::hours(*zone);
    const auto candidates = BerlinLocalToUtcCandidates(local);
    if (candidates.empty()) return SpringGap(local);
    for (const auto& c : candidates) {
      if (c > start) return c;
    }
    return candidates.back();
  }

 private:
  static UtcTime SpringGap(LocalTime local) {
    return UtcTime(local.time_since_epoch()) - std::chrono::hours(1);
  }

  std::map<LocalTime, int> seen_;
};

std::string Field(const std::vector<std::string>& row, std::optional<std::size_t> idx) {
  return idx && *idx < row.size() ? Trim(row[*idx]) : std::string();
}

}  // namespace

RedispatchParseResult ParseRedispatchCsv(std::string_view bytes) {
  const CsvTable table = ParseCsv(bytes, ';');
  const Columns c = ResolveColumns(table);
  RedispatchParseResult result;
  TimeResolver resolver;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    try {
      if (row.size() != table.header.size()) {
        throw RowError{"expected " + std::to_string(table.header.size()) +
                       " fields, found " + std::to_string(row.size())};
      }
      const std::string start_text =
          c.start ? Field(row, c.start)
                  : Field(row, c.start_date) + " " + Field(row, c.start_time);
      const std::string end_text =
          c.end ? Field(row, c.end) : Field(row, c.end_date) + " " + Field(row, c.end_time);
      InterventionRecord rec;
      rec.start = resolver.Start(ParseLocal(start_text), ZoneOffset(Field(row, c.start_zone)));
      rec.end = TimeResolver::End(ParseLocal(end_text), ZoneOffset(Field(row, c.end_zone)),
                                  rec.start);
      if (!(rec.end > rec.start)) throw RowError{"end is not after start"};
      rec.direction = ParseRichtung(Field(row, c.direction));
      rec.reason = ParseGrund(Field(row, c.reason));
      rec.kind = ParseArt(Field(row, c.kind));
      rec.requesting_tsos = SplitTsos(Field(row, c.requesting));
      if (rec.requesting_tsos.empty()) throw RowError{"no requesting TSO"};
      rec.domestic_request = false;
      for (const auto& tso : rec.requesting_tsos) {
        rec.domestic_request = rec.domestic_request || dataset::IsGermanTso(tso);
      }
      const std::string power = Field(row, c.power);
      const std::string energy = Field(row, c.energy);
      if (!power.empty()) {
        rec.power_mw = ParseAmount(power, "mean power");
      } else if (!energy.empty()) {
        rec.power_mw = ParseAmount(energy, "energy") / rec.duration_hours();
      } else {
        throw RowError{"neither mean power nor energy given"};
      }
      rec.cross_border = ParseFlag(Field(row, c.cross_border));
      const std::string plant = Field(row, c.plant);
      if (!plant.empty()) rec.plant_id = plant;
      result.records.push_back(std::move(rec));
    } catch (const RowError& e) {
      result.rejects.push_back({table.line_numbers[r], e.reason, JoinCsv(row, ';')});
    }
  }
  return result;
}

std::string RejectsCsv(const std::vector<RejectedRow>& rejects) {
  std::string out = "line,reason,text\n";
  for (const auto& r : rejects) {
    out += JoinCsv({std::to_string(r.line), r.reason, r.text}, ',');
    out += "\n";
  }
  return out;
}

}  // namespace gridxai::ingest

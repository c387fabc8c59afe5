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

#include "gridxai/dataset/intervention.h"

#include <cmath>

#include "gridxai/common/csv.h"
#include "gridxai/common/error.h"

namespace gridxai::dataset {

using nlohmann::json;

std::string_view ToString(Direction d) {
  return d == Direction::kIncrease ? "increase" : "decrease";
}

std::string_view ToString(MeasureKind k) {
  switch (k) {
    case MeasureKind::kRedispatch:
      return "redispatch";
    case MeasureKind::kCountertrade:
      return "countertrade";
    case MeasureKind::kGridReserve:
      return "grid_reserve";
  }
  return "redispatch";
}

std::string_view ToString(Reason r) {
  switch (r) {
    case Reason::kCurrent:
      return "current";
    case Reason::kVoltage:
      return "voltage";
    case Reason::kOther:
      return "other";
  }
  return "other";
}

Direction ParseDirection(std::string_view s) {
  if (s == "increase") return Direction::kIncrease;
  if (s == "decrease") return Direction::kDecrease;
  throw ParseError("unknown direction '" + std::string(s) + "'");
}

MeasureKind ParseMeasureKind(std::string_view s) {
  if (s == "redispatch") return MeasureKind::kRedispatch;
  if (s == "countertrade") return MeasureKind::kCountertrade;
  if (s == "grid_reserve") return MeasureKind::kGridReserve;
  throw ParseError("unknown measure kind '" + std::string(s) + "'");
}

Reason ParseReason(std::string_view s) {
  if (s == "current") return Reason::kCurrent;
  if (s == "voltage") return Reason::kVoltage;
  return Reason::kOther;
}

void InterventionRecord::Validate() const {
  if (!(end > start)) {
    throw InvalidInputError("intervention ends before it starts (" +
                            FormatIso(start) + " .. " + FormatIso(end) + ")");
  }
  if (!std::isfinite(power_mw) || power_mw < 0.0) {
    throw InvalidInputError("intervention power must be finite and >= 0");
  }
}

bool IsGermanTso(std::string_view name) {
  const std::string n = ToLower(Trim(name));
  for (const char* tso : {"50hertz", "amprion", "transnet"}) {
    if (n.find(tso) != std::string::npos) return true;
  }
  // TenneT also operates the Dutch grid.
  if (n.find("tennet") == std::string::npos) return false;
  for (const char* dutch : {" nl", "b.v.", "netherlands", "nederland"}) {
    if (n.find(dutch) != std::string::npos) return false;
  }
  return true;
}

json RecordToJson(const InterventionRecord& r) {
  json j{{"start", FormatIso(r.start)},
         {"end", FormatIso(r.end)},
         {"direction", ToString(r.direction)},
         {"power_mw", r.power_mw},
         {"kind", ToString(r.kind)},
         {"reason", ToString(r.reason)},
         {"requesting_tsos", r.requesting_tsos},
         {"domestic_request", r.domestic_request},
         {"cross_border", r.cross_border},
         {"synthetic", r.synthetic}};
  j["plant_id"] = r.plant_id ? json(*r.plant_id) : json(nullptr);
  return j;
}

InterventionRecord RecordFromJson(const json& j) {
  InterventionRecord r;
  try {
    r.start = ParseIso(j.at("start").get<std::string>());
    r.end = ParseIso(j.at("end").get<std::string>());
    r.direction = ParseDirection(j.at("direction").get<std::string>());
    if (j.contains("power_mw")) {
      r.power_mw = j.at("power_mw").get<double>();
    } else if (j.contains("energy_mwh")) {
      r.power_mw = j.at("energy_mwh").get<double>() / r.duration_hours();
    } else {
      throw ParseError("record has neither power_mw nor energy_mwh");
    }
    r.kind = ParseMeasureKind(j.value("kind", std::string("redispatch")));
    r.reason = ParseReason(j.value("reason", std::string("current")));
    r.requesting_tsos =
        j.value("requesting_tsos", std::vector<std::string>{});
    if (j.contains("domestic_request")) {
      r.domestic_request = j.at("domestic_request").get<bool>();
    } else {
      r.domestic_request = false;
      for (const auto& t : r.requesting_tsos) {
        r.domestic_request = r.domestic_request || IsGermanTso(t);
      }
    }
    r.cross_border = j.value("cross_border", false);
    r.synthetic = j.value("synthetic", false);
    if (j.contains("plant_id") && !j.at("plant_id").is_null()) {
      r.plant_id = j.at("plant_id").get<std::string>();
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed intervention record: ") + e.what());
  }
  r.Validate();
  return r;
}

std::string RecordsToJsonLines(const std::vector<InterventionRecord>& records) {
  std::string out;
  for (const auto& r : records) out += RecordToJson(r).dump() + "\n";
  return out;
}

std::vector<InterventionRecord> RecordsFromJsonLines(std::string_view text) {
  std::vector<InterventionRecord> out;
  std::size_t pos = 0;
  std::size_t line = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string l = Trim(text.substr(pos, end - pos));
    ++line;
    if (!l.empty()) {
      try {
        out.push_back(RecordFromJson(json::parse(l)));
      } catch (const json::parse_error& e) {
        throw ParseError("line " + std::to_string(line) + ": " + e.what(),
                         static_cast<long long>(pos + e.byte));
      }
    }
    pos = end + 1;
  }
  return out;
}

}  // namespace gridxai::dataset

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

#ifndef GRIDXAI_DATASET_INTERVENTION_H_
#define GRIDXAI_DATASET_INTERVENTION_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gridxai/common/time.h"
#include "json.hpp"

namespace gridxai::dataset {

enum class Direction { kIncrease, kDecrease };
enum class MeasureKind { kRedispatch, kCountertrade, kGridReserve };
enum class Reason { kCurrent, kVoltage, kOther };

std::string_view ToString(Direction d);
std::string_view ToString(MeasureKind k);
std::string_view ToString(Reason r);
Direction ParseDirection(std::string_view s);
MeasureKind ParseMeasureKind(std::string_view s);
Reason ParseReason(std::string_view s);

// One redispatch, countertrade or grid-reserve activation. `power_mw` is the
// mean power over [start, end).
struct InterventionRecord {
  UtcTime start;
  UtcTime end;
  Direction direction = Direction::kIncrease;
  double power_mw = 0.0;
  MeasureKind kind = MeasureKind::kRedispatch;
  Reason reason = Reason::kCurrent;
  std::vector<std::string> requesting_tsos;
  bool domestic_request = true;  // at least one German TSO requested it
  bool cross_border = false;
  std::optional<std::string> plant_id;
  bool synthetic = false;  // added by cross-border completion

  double duration_hours() const {
    return std::chrono::duration<double>(end - start).count() / 3600.0;
  }
  // Throws InvalidInputError unless end > start and power is finite, >= 0.
  void Validate() const;

  bool operator==(const InterventionRecord&) const = default;
};

// Case-insensitive match against 50Hertz, Amprion, TenneT and TransnetBW.
bool IsGermanTso(std::string_view name);

// JSON-lines interchange. Records may carry "power_mw" or "energy_mwh"; the
// latter is converted to mean power via the duration.
nlohmann::json RecordToJson(const InterventionRecord& r);
InterventionRecord RecordFromJson(const nlohmann::json& j);
std::string RecordsToJsonLines(const std::vector<InterventionRecord>& records);
std::vector<InterventionRecord> RecordsFromJsonLines(std::string_view text);

}  // namespace gridxai::dataset

#endif  // GRIDXAI_DATASET_INTERVENTION_H_

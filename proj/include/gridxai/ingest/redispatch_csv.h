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

#ifndef GRIDXAI_INGEST_REDISPATCH_CSV_H_
#define GRIDXAI_INGEST_REDISPATCH_CSV_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "gridxai/dataset/intervention.h"

namespace gridxai::ingest {

struct RejectedRow {
  std::size_t line = 0;
  std::string reason;
  std::string text;
};

struct RedispatchParseResult {
  std::vector<dataset::InterventionRecord> records;
  std::vector<RejectedRow> rejects;
};

// Parses the semicolon-separated redispatch download.
//
// Mandatory columns: BEGINN, ENDE (or BEGINN_DATUM + BEGINN_UHRZEIT and
// ENDE_DATUM + ENDE_UHRZEIT), ANFORDERNDER_UENB, RICHTUNG,
// GRUND_DER_MASSNAHME, ART_DER_MASSNAHME, and MITTLERE_LEISTUNG_MW or
// GESAMTE_ARBEIT_MWH. Optional: ANWEISENDER_UENB, BETROFFENE_ANLAGE,
// GRENZUEBERSCHREITEND, ZEITZONE_VON, ZEITZONE_BIS.
//
// Timestamps are German local time "DD.MM.YYYY HH:MM". Without a zone
// column, a start time repeated by the autumn clock change maps to summer
// time on its first occurrence and to standard time afterwards; an end time
// maps to the earliest instant after the start. Times skipped in spring are
// read as standard time.
//
// Throws SchemaError for missing mandatory columns; bad rows are reported
// in `rejects`.
RedispatchParseResult ParseRedispatchCsv(std::string_view bytes);

// `line,reason,text`
std::string RejectsCsv(const std::vector<RejectedRow>& rejects);

}  // namespace gridxai::ingest

#endif  // GRIDXAI_INGEST_REDISPATCH_CSV_H_

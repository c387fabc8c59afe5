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

#ifndef GRIDXAI_INGEST_SNAPSHOT_H_
#define GRIDXAI_INGEST_SNAPSHOT_H_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "gridxai/common/time.h"
#include "gridxai/dataset/features.h"
#include "gridxai/dataset/intervention.h"
#include "gridxai/ingest/client.h"
#include "json.hpp"

namespace gridxai::ingest {

inline constexpr const char* kBundleFormatVersion = "1";

struct SnapshotSpec {
  TimeWindow window;
  std::vector<SeriesRequest> requests;
  // Redispatch download to parse into interventions.jsonl.
  std::optional<std::filesystem::path> redispatch_csv;
};

struct SeriesEntry {
  std::string name;
  std::string request;  // canonical form
  std::string source;
  std::string file;     // relative to the bundle
  std::string sha256;   // of the normalized file
  std::size_t points = 0;
  bool empty = false;
  std::vector<std::string> raw_files;
};

struct Gap {
  std::string name;
  std::string error;
};

struct InterventionsEntry {
  std::string file;
  std::string sha256;
  std::size_t records = 0;
  std::size_t rejects = 0;
};

struct Manifest {
  std::string format_version = kBundleFormatVersion;
  TimeWindow window;
  bool incomplete = false;
  std::vector<SeriesEntry> series;
  std::vector<Gap> gaps;
  std::optional<InterventionsEntry> interventions;
  // SHA-256 over the window and the content hashes of all files.
  std::string content_hash;
};

nlohmann::json ManifestToJson(const Manifest& m);
Manifest ManifestFromJson(const nlohmann::json& j);

// Fetches every request and writes the bundle:
//   manifest.json, raw/*.xml, normalized/<series>.csv,
//   interventions.jsonl and rejects.csv.
// A failing series is listed under gaps and marks the bundle incomplete.
// Rewriting a bundle replaces its files; files no longer produced are
// removed.
Manifest Snapshot(EntsoeClient& client, const SnapshotSpec& spec,
                  const std::filesystem::path& bundle_dir);

// Throws Error(kMissingArtifact) when the bundle has no manifest.
Manifest LoadManifest(const std::filesystem::path& bundle_dir);
std::vector<dataset::NamedSeries> LoadBundleSeries(
    const std::filesystem::path& bundle_dir);
std::vector<dataset::InterventionRecord> LoadBundleInterventions(
    const std::filesystem::path& bundle_dir);

}  // namespace gridxai::ingest

#endif  // GRIDXAI_INGEST_SNAPSHOT_H_

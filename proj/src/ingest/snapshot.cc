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

#include "gridxai/ingest/snapshot.h"

#include <algorithm>
#include <set>

#include "gridxai/common/csv.h"
#include "gridxai/common/error.h"
#include "gridxai/common/sha256.h"
#include "gridxai/ingest/redispatch_csv.h"

namespace gridxai::ingest {
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr const char* kManifestFile = "manifest.json";
constexpr const char* kInterventionsFile = "interventions.jsonl";
constexpr const char* kRejectsFile = "rejects.csv";

std::string ContentHash(const Manifest& m) {
  std::string text = "window=" + FormatIso(m.window.start) + "/" +
                     FormatIso(m.window.end) + "\n";
  for (const auto& s : m.series) text += s.name + "=" + s.sha256 + "\n";
  for (const auto& g : m.gaps) text += "gap:" + g.name + "\n";
  if (m.interventions) text += "interventions=" + m.interventions->sha256 + "\n";
  return Sha256Hex(text);
}

// Removes regular files in `dir` that are not in `keep`.
void Prune(const fs::path& dir, const std::set<std::string>& keep) {
  if (!fs::exists(dir)) return;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && !keep.contains(entry.path().filename().string())) {
      fs::remove(entry.path());
    }
  }
}

}  // namespace

json ManifestToJson(const Manifest& m) {
  json series = json::array();
  for (const auto& s : m.series) {
    series.push_back({{"name", s.name},
                      {"request", s.request},
                      {"source", s.source},
                      {"file", s.file},
                      {"sha256", s.sha256},
                      {"points", s.points},
                      {"empty", s.empty},
                      {"raw_files", s.raw_files}});
  }
  json gaps = json::array();
  for (const auto& g : m.gaps) gaps.push_back({{"name", g.name}, {"error", g.error}});
  json j{{"format_version", m.format_version},
         {"window", {{"start", FormatIso(m.window.start)}, {"end", FormatIso(m.window.end)}}},
         {"incomplete", m.incomplete},
         {"series", series},
         {"gaps", gaps},
         {"content_hash", m.content_hash}};
  if (m.interventions) {
    j["interventions"] = {{"file", m.interventions->file},
                          {"sha256", m.interventions->sha256},
                          {"records", m.interventions->records},
                          {"rejects", m.interventions->rejects}};
  } else {
    j["interventions"] = nullptr;
  }
  return j;
}

Manifest ManifestFromJson(const json& j) {
  Manifest m;
  try {
    m.format_version = j.at("format_version").get<std::string>();
    if (m.format_version != kBundleFormatVersion) {
      throw SchemaError("unsupported bundle format " + m.format_version);
    }
    m.window.start = ParseIso(j.at("window").at("start").get<std::string>());
    m.window.end = ParseIso(j.at("window").at("end").get<std::string>());
    m.incomplete = j.at("incomplete").get<bool>();
    for (const auto& s : j.at("series")) {
      SeriesEntry e;
      e.name = s.at("name").get<std::string>();
      e.request = s.at("request").get<std::string>();
      e.source = s.at("source").get<std::string>();
      e.file = s.at("file").get<std::string>();
      e.sha256 = s.at("sha256").get<std::string>();
      e.points = s.at("points").get<std::size_t>();
      e.empty = s.at("empty").get<bool>();
      e.raw_files = s.value("raw_files", std::vector<std::string>{});
      m.series.push_back(std::move(e));
    }
    for (const auto& g : j.at("gaps")) {
      m.gaps.push_back({g.at("name").get<std::string>(), g.at("error").get<std::string>()});
    }
    if (j.contains("interventions") && !j.at("interventions").is_null()) {
      const auto& i = j.at("interventions");
      m.interventions = InterventionsEntry{
          i.at("file").get<std::string>(), i.at("sha256").get<std::string>(),
          i.at("records").get<std::size_t>(), i.at("rejects").get<std::size_t>()};
    }
    m.content_hash = j.at("content_hash").get<std::string>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid bundle manifest: ") + e.what());
  }
  return m;
}

Manifest Snapshot(EntsoeClient& client, const SnapshotSpec& spec,
                  const fs::path& bundle_dir) {
  const fs::path raw_dir = bundle_dir / "raw";
  const fs::path norm_dir = bundle_dir / "normalized";
  fs::create_directories(raw_dir);
  fs::create_directories(norm_dir);

  Manifest m;
  m.window = spec.window;
  std::set<std::string> raw_files;
  std::set<std::string> norm_files;
  for (const auto& base : spec.requests) {
    SeriesRequest request = base;
    request.interval = spec.window;
    const std::string name = request.SeriesName();
    try {
      const RawSeries series = client.Fetch(request);
      SeriesEntry e;
      e.name = name;
      e.request = request.Canonical();
      e.source = std::string(SourceName(series.source));
      e.points = series.points.size();
      e.empty = series.empty_response;
      for (std::size_t p = 0; p < series.raw_documents.size(); ++p) {
        const std::string file = name + "__p" + std::to_string(p + 1) + ".xml";
        WriteFileAtomic(raw_dir / file, series.raw_documents[p]);
        raw_files.insert(file);
        e.raw_files.push_back("raw/" + file);
      }
      const std::string csv = NormalizedCsv(series);
      const std::string file = name + ".csv";
      WriteFileAtomic(norm_dir / file, csv);
      norm_files.insert(file);
      e.file = "normalized/" + file;
      e.sha256 = Sha256Hex(csv);
      m.series.push_back(std::move(e));
    } catch (const Error& err) {
      if (err.kind() == ErrorKind::kAuth) throw;
      m.gaps.push_back({name, err.what()});
    }
  }

  bool wrote_interventions = false;
  if (spec.redispatch_csv) {
    try {
      const RedispatchParseResult parsed = ParseRedispatchCsv(ReadFile(*spec.redispatch_csv));
      const std::string jsonl = dataset::RecordsToJsonLines(parsed.records);
      WriteFileAtomic(bundle_dir / kInterventionsFile, jsonl);
      WriteFileAtomic(bundle_dir / kRejectsFile, RejectsCsv(parsed.rejects));
      m.interventions = InterventionsEntry{kInterventionsFile, Sha256Hex(jsonl),
                                           parsed.records.size(), parsed.rejects.size()};
      wrote_interventions = true;
    } catch (const Error& err) {
      m.gaps.push_back({kInterventionsFile, err.what()});
    }
  }
  if (!wrote_interventions) {
    fs::remove(bundle_dir / kInterventionsFile);
    fs::remove(bundle_dir / kRejectsFile);
  }
  Prune(raw_dir, raw_files);
  Prune(norm_dir, norm_files);

  m.incomplete = !m.gaps.empty();
  m.content_hash = ContentHash(m);
  WriteFileAtomic(bundle_dir / kManifestFile, ManifestToJson(m).dump(2) + "\n");
  return m;
}

Manifest LoadManifest(const fs::path& bundle_dir) {
  const fs::path path = bundle_dir / kManifestFile;
  if (!fs::exists(path)) {
    throw Error(ErrorKind::kMissingArtifact,
                "no bundle at " + bundle_dir.string() + "; run `gridxai ingest` first");
  }
  try {
    return ManifestFromJson(json::parse(ReadFile(path)));
  } catch (const json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::vector<dataset::NamedSeries> LoadBundleSeries(const fs::path& bundle_dir) {
  const Manifest m = LoadManifest(bundle_dir);
  std::vector<dataset::NamedSeries> out;
  for (const auto& e : m.series) {
    const std::string text = ReadFile(bundle_dir / e.file);
    if (Sha256Hex(text) != e.sha256) {
      throw Error(ErrorKind::kIo, "checksum mismatch for " + e.file);
    }
    const RawSeries raw = ParseNormalizedCsv(text);
    dataset::NamedSeries s;
    s.name = e.name;
    s.unit = raw.unit;
    for (const auto& p : raw.points) {
      s.hours.push_back(p.hour);
      s.values.push_back(p.value);
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<dataset::InterventionRecord> LoadBundleInterventions(
    const fs::path& bundle_dir) {
  const Manifest m = LoadManifest(bundle_dir);
  if (!m.interventions) {
    throw Error(ErrorKind::kMissingArtifact,
                "bundle " + bundle_dir.string() + " has no intervention records");
  }
  const std::string text = ReadFile(bundle_dir / m.interventions->file);
  if (Sha256Hex(text) != m.interventions->sha256) {
    throw Error(ErrorKind::kIo, "checksum mismatch for " + m.interventions->file);
  }
  return dataset::RecordsFromJsonLines(text);
}

}  // namespace gridxai::ingest

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

#include "gridxai/dataset/dataset_io.h"

#include "gridxai/common/csv.h"
#include "gridxai/common/error.h"
#include "gridxai/dataset/features.h"

namespace gridxai::dataset {

std::string DatasetToCsv(const FeatureMatrix& x, const std::vector<double>& y) {
  if (x.rows() != y.size()) {
    throw InvalidInputError("dataset target length differs from row count");
  }
  std::string out = "hour,volume";
  for (const auto& c : x.columns()) out += "," + c.name;
  out += "\n";
  for (std::size_t r = 0; r < x.rows(); ++r) {
    out += FormatIso(x.hours()[r]);
    out += ",";
    out += FormatDouble(y[r]);
    for (std::size_t c = 0; c < x.cols(); ++c) {
      out += ",";
      out += FormatDouble(x.at(r, c));
    }
    out += "\n";
  }
  return out;
}

Dataset DatasetFromCsv(std::string_view text, FeatureSet feature_set) {
  const CsvTable table = ParseCsv(text, ',');
  if (table.header.size() < 2 || table.header[0] != "hour" ||
      table.header[1] != "volume") {
    throw SchemaError("dataset CSV must start with columns hour,volume");
  }
  const std::size_t n = table.rows.size();
  const std::size_t n_features = table.header.size() - 2;
  std::vector<UtcHour> hours(n);
  std::vector<double> y(n);
  std::vector<std::vector<double>> cols(n_features, std::vector<double>(n));
  for (std::size_t r = 0; r < n; ++r) {
    const auto& row = table.rows[r];
    if (row.size() != table.header.size()) {
      throw ParseError("dataset CSV line " + std::to_string(table.line_numbers[r]) +
                       ": expected " + std::to_string(table.header.size()) +
                       " fields");
    }
    const UtcTime t = ParseIso(row[0]);
    if (!IsHourAligned(t)) {
      throw ParseError("dataset CSV line " + std::to_string(table.line_numbers[r]) +
                       ": hour not aligned");
    }
    hours[r] = FloorHour(t);
    y[r] = ParseDouble(row[1]);
    for (std::size_t c = 0; c < n_features; ++c) cols[c][r] = ParseDouble(row[c + 2]);
  }
  Dataset d;
  d.x = FeatureMatrix(std::move(hours));
  for (std::size_t c = 0; c < n_features; ++c) {
    const std::string& name = table.header[c + 2];
    d.x.AddColumn({name, UnitForFeature(name)}, std::move(cols[c]));
  }
  d.x.set_feature_set(feature_set);
  d.y = std::move(y);
  d.provenance.kept_rows = n;
  d.provenance.feature_set = std::string(FeatureSetName(feature_set));
  return d;
}

std::filesystem::path ProvenancePath(const std::filesystem::path& csv_path) {
  std::filesystem::path p = csv_path;
  p.replace_extension(".provenance.json");
  return p;
}

void SaveDataset(const Dataset& d, const std::filesystem::path& csv_path) {
  WriteFileAtomic(csv_path, DatasetToCsv(d.x, d.y));
  WriteFileAtomic(ProvenancePath(csv_path),
                  ProvenanceToJson(d.provenance).dump(2) + "\n");
}

Dataset LoadDataset(const std::filesystem::path& csv_path) {
  const std::string text = ReadFile(csv_path);
  const auto prov_path = ProvenancePath(csv_path);
  if (!std::filesystem::exists(prov_path)) return DatasetFromCsv(text);
  ProvenanceReport prov;
  try {
    prov = ProvenanceFromJson(nlohmann::json::parse(ReadFile(prov_path)));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(prov_path.string() + ": " + e.what());
  }
  Dataset d = DatasetFromCsv(text, ParseFeatureSet(prov.feature_set));
  d.provenance = std::move(prov);
  return d;
}

}  // namespace gridxai::dataset

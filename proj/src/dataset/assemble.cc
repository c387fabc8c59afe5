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

#include "gridxai/dataset/assemble.h"

#include <cmath>
#include <unordered_map>

#include "gridxai/common/error.h"

namespace gridxai::dataset {

nlohmann::json ProvenanceToJson(const ProvenanceReport& p) {
  nlohmann::json j;
  j["target_hours"] = p.target_hours;
  j["feature_hours"] = p.feature_hours;
  j["joined_rows"] = p.joined_rows;
  j["kept_rows"] = p.kept_rows;
  j["dropped_rows"] = p.dropped_rows;
  j["max_gap_hours"] = p.max_gap_hours;
  j["feature_set"] = p.feature_set;
  j["first_hour"] = p.first_hour;
  j["last_hour"] = p.last_hour;
  j["missing_per_column"] = p.missing_per_column;
  j["interpolated_per_column"] = p.interpolated_per_column;
  return j;
}

ProvenanceReport ProvenanceFromJson(const nlohmann::json& j) {
  ProvenanceReport p;
  try {
    p.target_hours = j.at("target_hours").get<std::size_t>();
    p.feature_hours = j.at("feature_hours").get<std::size_t>();
    p.joined_rows = j.at("joined_rows").get<std::size_t>();
    p.kept_rows = j.at("kept_rows").get<std::size_t>();
    p.dropped_rows = j.at("dropped_rows").get<std::size_t>();
    p.max_gap_hours = j.at("max_gap_hours").get<int>();
    p.feature_set = j.at("feature_set").get<std::string>();
    p.first_hour = j.value("first_hour", "");
    p.last_hour = j.value("last_hour", "");
    p.missing_per_column =
        j.at("missing_per_column").get<std::map<std::string, std::size_t>>();
    p.interpolated_per_column =
        j.at("interpolated_per_column").get<std::map<std::string, std::size_t>>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid provenance report: ") + e.what());
  }
  return p;
}

std::map<std::string, std::size_t> InterpolateGaps(FeatureMatrix& x,
                                                   int max_gap_hours) {
  std::map<std::string, std::size_t> filled;
  const auto& hours = x.hours();
  const std::size_t n = x.rows();
  for (std::size_t c = 0; c < x.cols(); ++c) {
    auto col = x.column(c);
    std::size_t count = 0;
    std::size_t i = 0;
    while (i < n) {
      if (!std::isnan(col[i])) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < n && std::isnan(col[j])) ++j;
      // Missing run [i, j); fill only when bounded on both sides.
      if (i > 0 && j < n) {
        const auto span = (hours[j] - hours[i - 1]).count();
        if (span - 1 <= max_gap_hours) {
          const double lo = col[i - 1];
          const double hi = col[j];
          for (std::size_t k = i; k < j; ++k) {
            const double t = static_cast<double>((hours[k] - hours[i - 1]).count()) /
                             static_cast<double>(span);
            col[k] = lo + t * (hi - lo);
            ++count;
          }
        }
      }
      i = j;
    }
    filled[x.columns()[c].name] = count;
  }
  return filled;
}

Dataset Assemble(const HourlyTarget& target, const FeatureMatrix& features,
                 const AssembleOptions& options) {
  if (target.hours.size() != target.volume_mwh.size()) {
    throw InvalidInputError("target hours and volumes differ in length");
  }
  if (options.max_gap_hours < 0) {
    throw ConfigError("max_gap_hours must be nonnegative");
  }
  ProvenanceReport report;
  report.target_hours = target.hours.size();
  report.feature_hours = features.rows();
  report.max_gap_hours = options.max_gap_hours;
  report.feature_set = std::string(FeatureSetName(features.feature_set()));

  for (std::size_t c = 0; c < features.cols(); ++c) {
    std::size_t missing = 0;
    for (double v : features.column(c)) missing += std::isnan(v) ? 1 : 0;
    report.missing_per_column[features.columns()[c].name] = missing;
  }

  FeatureMatrix filled = features;
  report.interpolated_per_column = InterpolateGaps(filled, options.max_gap_hours);

  std::unordered_map<UtcHour::rep, std::size_t> target_row;
  for (std::size_t i = 0; i < target.hours.size(); ++i) {
    target_row.emplace(target.hours[i].time_since_epoch().count(), i);
  }
  std::vector<std::size_t> feature_rows;
  std::vector<double> y;
  std::size_t joined = 0;
  for (std::size_t r = 0; r < filled.rows(); ++r) {
    auto it = target_row.find(filled.hours()[r].time_since_epoch().count());
    if (it == target_row.end()) continue;
    ++joined;
    bool complete = std::isfinite(target.volume_mwh[it->second]);
    for (std::size_t c = 0; complete && c < filled.cols(); ++c) {
      complete = !std::isnan(filled.at(r, c));
    }
    if (!complete) continue;
    feature_rows.push_back(r);
    y.push_back(target.volume_mwh[it->second]);
  }
  if (joined == 0) {
    throw InvalidInputError("target and features share no hours");
  }
  report.joined_rows = joined;
  report.kept_rows = feature_rows.size();
  report.dropped_rows = joined - feature_rows.size();

  Dataset out;
  out.x = filled.TakeRows(feature_rows);
  out.x.set_feature_set(features.feature_set());
  out.y = std::move(y);
  if (out.x.rows() > 0) {
    report.first_hour = FormatIso(out.x.hours().front());
    report.last_hour = FormatIso(out.x.hours().back());
  }
  out.provenance = std::move(report);
  return out;
}

}  // namespace gridxai::dataset

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

#ifndef GRIDXAI_DATASET_ASSEMBLE_H_
#define GRIDXAI_DATASET_ASSEMBLE_H_

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "gridxai/common/feature_matrix.h"
#include "gridxai/dataset/pipeline.h"
#include "json.hpp"

namespace gridxai::dataset {

struct AssembleOptions {
  // Longest run of consecutive missing hours filled by linear interpolation.
  int max_gap_hours = 3;
};

struct ProvenanceReport {
  std::size_t target_hours = 0;
  std::size_t feature_hours = 0;
  std::size_t joined_rows = 0;
  std::size_t kept_rows = 0;
  std::size_t dropped_rows = 0;
  int max_gap_hours = 3;
  std::string feature_set;
  std::string first_hour;
  std::string last_hour;
  std::map<std::string, std::size_t> missing_per_column;
  std::map<std::string, std::size_t> interpolated_per_column;
};

nlohmann::json ProvenanceToJson(const ProvenanceReport& p);
ProvenanceReport ProvenanceFromJson(const nlohmann::json& j);

// Regression-ready rows: features and target share the hour index.
struct Dataset {
  FeatureMatrix x;
  std::vector<double> y;
  ProvenanceReport provenance;
};

// Fills interior gaps of at most `max_gap_hours` missing hours in every
// column by linear interpolation in time. Returns filled values per column.
std::map<std::string, std::size_t> InterpolateGaps(FeatureMatrix& x,
                                                   int max_gap_hours);

// Inner join on hour, gap filling, then removal of rows that still miss a
// value. Throws InvalidInputError when the hour ranges do not intersect.
Dataset Assemble(const HourlyTarget& target, const FeatureMatrix& features,
                 const AssembleOptions& options = {});

}  // namespace gridxai::dataset

#endif  // GRIDXAI_DATASET_ASSEMBLE_H_

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

#ifndef GRIDXAI_DATASET_DATASET_IO_H_
#define GRIDXAI_DATASET_DATASET_IO_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "gridxai/dataset/assemble.h"

namespace gridxai::dataset {

// CSV `hour,volume,<feature>...` with ISO-8601 UTC hours.
std::string DatasetToCsv(const FeatureMatrix& x, const std::vector<double>& y);

// Parses DatasetToCsv output. Units follow the column names; the feature set
// tag is supplied by the caller. The provenance report is left empty.
Dataset DatasetFromCsv(std::string_view text,
                       FeatureSet feature_set = FeatureSet::kBase);

// Writes `<stem>.csv` and `<stem>.provenance.json`.
void SaveDataset(const Dataset& d, const std::filesystem::path& csv_path);
// Reads the CSV and, when present, its provenance sidecar.
Dataset LoadDataset(const std::filesystem::path& csv_path);

std::filesystem::path ProvenancePath(const std::filesystem::path& csv_path);

}  // namespace gridxai::dataset

#endif  // GRIDXAI_DATASET_DATASET_IO_H_

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

#ifndef GRIDXAI_COMMON_FEATURE_MATRIX_H_
#define GRIDXAI_COMMON_FEATURE_MATRIX_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gridxai/common/time.h"

namespace gridxai {

enum class FeatureSet { kBase, kFull, kEngineered, kReduced };

std::string_view FeatureSetName(FeatureSet s);
FeatureSet ParseFeatureSet(std::string_view name);

struct ColumnSpec {
  std::string name;
  std::string unit;  // "MW", "EUR/MWh", ...
};

// Hourly rows by named columns. Values are stored column-major; missing
// entries are NaN.
class FeatureMatrix {
 public:
  FeatureMatrix() = default;
  explicit FeatureMatrix(std::vector<UtcHour> hours);

  std::size_t rows() const { return hours_.size(); }
  std::size_t cols() const { return columns_.size(); }

  const std::vector<UtcHour>& hours() const { return hours_; }
  const std::vector<ColumnSpec>& columns() const { return columns_; }
  std::vector<std::string> names() const;

  FeatureSet feature_set() const { return feature_set_; }
  void set_feature_set(FeatureSet s) { feature_set_ = s; }

  double at(std::size_t row, std::size_t col) const {
    return values_[col * hours_.size() + row];
  }
  double& at(std::size_t row, std::size_t col) {
    return values_[col * hours_.size() + row];
  }

  std::span<const double> column(std::size_t col) const {
    return {values_.data() + col * hours_.size(), hours_.size()};
  }
  std::span<double> column(std::size_t col) {
    return {values_.data() + col * hours_.size(), hours_.size()};
  }

  std::optional<std::size_t> Find(std::string_view name) const;
  // Throws SchemaError naming the column when absent.
  std::size_t IndexOf(std::string_view name) const;
  std::span<const double> column(std::string_view name) const {
    return column(IndexOf(name));
  }

  // Appends a column; throws SchemaError on a duplicate name or a length
  // mismatch.
  void AddColumn(ColumnSpec spec, std::vector<double> values);
  void SetColumn(std::string_view name, std::span<const double> values);
  void RemoveColumn(std::string_view name);

  // New matrix with the named columns in the given order.
  FeatureMatrix Select(std::span<const std::string> names) const;
  FeatureMatrix TakeRows(std::span<const std::size_t> rows) const;

  // Row `r` gathered in column order.
  std::vector<double> Row(std::size_t r) const;

 private:
  std::vector<UtcHour> hours_;
  std::vector<ColumnSpec> columns_;
  std::vector<double> values_;
  FeatureSet feature_set_ = FeatureSet::kBase;
};

// Dense row-major block of feature values, reordered to a model's feature
// order. Prediction and explanation kernels consume this.
struct RowMajor {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> values;

  std::span<const double> row(std::size_t r) const {
    return {values.data() + r * cols, cols};
  }
};

// Gathers `feature_names` from `x` by name; extra columns are ignored.
// Throws SchemaError when one is missing.
RowMajor ToRowMajor(const FeatureMatrix& x,
                    std::span<const std::string> feature_names);

}  // namespace gridxai

#endif  // GRIDXAI_COMMON_FEATURE_MATRIX_H_

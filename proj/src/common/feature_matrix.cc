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

#include "gridxai/common/feature_matrix.h"

#include <algorithm>
#include <limits>

#include "gridxai/common/error.h"

namespace gridxai {

std::string_view FeatureSetName(FeatureSet s) {
  switch (s) {
    case FeatureSet::kBase:
      return "base";
    case FeatureSet::kFull:
      return "full";
    case FeatureSet::kEngineered:
      return "engineered";
    case FeatureSet::kReduced:
      return "reduced";
  }
  return "base";
}

FeatureSet ParseFeatureSet(std::string_view name) {
  if (name == "base") return FeatureSet::kBase;
  if (name == "full") return FeatureSet::kFull;
  if (name == "engineered") return FeatureSet::kEngineered;
  if (name == "reduced") return FeatureSet::kReduced;
  throw ConfigError("unknown feature set '" + std::string(name) +
                    "' (expected full, engineered or reduced)");
}

FeatureMatrix::FeatureMatrix(std::vector<UtcHour> hours)
    : hours_(std::move(hours)) {}

std::vector<std::string> FeatureMatrix::names() const {
  std::vector<std::string> out;
  out.reserve(columns_.size());
  for (const auto& c : columns_) out.push_back(c.name);
  return out;
}

std::optional<std::size_t> FeatureMatrix::Find(std::string_view name) const {
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (columns_[i].name == name) return i;
  }
  return std::nullopt;
}

std::size_t FeatureMatrix::IndexOf(std::string_view name) const {
  if (auto i = Find(name)) return *i;
  throw SchemaError("missing column '" + std::string(name) + "'");
}

void FeatureMatrix::AddColumn(ColumnSpec spec, std::vector<double> values) {
  if (Find(spec.name)) {
    throw SchemaError("duplicate column '" + spec.name + "'");
  }
  if (values.size() != hours_.size()) {
    throw SchemaError("column '" + spec.name + "' has " +
                      std::to_string(values.size()) + " values, expected " +
                      std::to_string(hours_.size()));
  }
  columns_.push_back(std::move(spec));
  values_.insert(values_.end(), values.begin(), values.end());
}

void FeatureMatrix::SetColumn(std::string_view name,
                              std::span<const double> values) {
  const std::size_t c = IndexOf(name);
  if (values.size() != hours_.size()) {
    throw SchemaError("column '" + std::string(name) + "' length mismatch");
  }
  std::copy(values.begin(), values.end(), column(c).begin());
}

void FeatureMatrix::RemoveColumn(std::string_view name) {
  const std::size_t c = IndexOf(name);
  const auto begin = values_.begin() + static_cast<std::ptrdiff_t>(c * rows());
  values_.erase(begin, begin + static_cast<std::ptrdiff_t>(rows()));
  columns_.erase(columns_.begin() + static_cast<std::ptrdiff_t>(c));
}

FeatureMatrix FeatureMatrix::Select(std::span<const std::string> names) const {
  FeatureMatrix out(hours_);
  out.feature_set_ = feature_set_;
  for (const auto& n : names) {
    const std::size_t c = IndexOf(n);
    auto col = column(c);
    out.AddColumn(columns_[c], std::vector<double>(col.begin(), col.end()));
  }
  return out;
}

FeatureMatrix FeatureMatrix::TakeRows(std::span<const std::size_t> rows) const {
  std::vector<UtcHour> hours;
  hours.reserve(rows.size());
  for (std::size_t r : rows) hours.push_back(hours_.at(r));
  FeatureMatrix out(std::move(hours));
  out.feature_set_ = feature_set_;
  for (std::size_t c = 0; c < cols(); ++c) {
    std::vector<double> v;
    v.reserve(rows.size());
    for (std::size_t r : rows) v.push_back(at(r, c));
    out.AddColumn(columns_[c], std::move(v));
  }
  return out;
}

std::vector<double> FeatureMatrix::Row(std::size_t r) const {
  std::vector<double> out(cols());
  for (std::size_t c = 0; c < cols(); ++c) out[c] = at(r, c);
  return out;
}

RowMajor ToRowMajor(const FeatureMatrix& x,
                    std::span<const std::string> feature_names) {
  std::vector<std::size_t> source;
  source.reserve(feature_names.size());
  for (const auto& name : feature_names) {
    auto idx = x.Find(name);
    if (!idx) {
      throw SchemaError("input is missing model feature '" + name + "'");
    }
    source.push_back(*idx);
  }
  RowMajor out;
  out.rows = x.rows();
  out.cols = feature_names.size();
  out.values.resize(out.rows * out.cols);
  for (std::size_t j = 0; j < out.cols; ++j) {
    auto col = x.column(source[j]);
    for (std::size_t r = 0; r < out.rows; ++r) {
      out.values[r * out.cols + j] = col[r];
    }
  }
  return out;
}

}  // namespace gridxai

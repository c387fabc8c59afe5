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

#include "gridxai/gbt/binning.h"

#include <algorithm>
#include <cmath>

namespace gridxai::gbt {

std::uint16_t FeatureBins::Code(double x) const {
  if (std::isnan(x)) return missing_code();
  return static_cast<std::uint16_t>(
      std::upper_bound(thresholds.begin(), thresholds.end(), x) -
      thresholds.begin());
}

FeatureBins ComputeBins(std::span<const double> values, int max_bins) {
  std::vector<double> sorted;
  sorted.reserve(values.size());
  for (double v : values) {
    if (!std::isnan(v)) sorted.push_back(v);
  }
  std::sort(sorted.begin(), sorted.end());
  FeatureBins bins;
  if (sorted.empty()) return bins;

  // Distinct values with the rank of their first occurrence.
  std::vector<double> unique;
  std::vector<std::size_t> first_rank;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i == 0 || sorted[i] != sorted[i - 1]) {
      unique.push_back(sorted[i]);
      first_rank.push_back(i);
    }
  }

  auto cut_between = [](double lo, double hi) {
    double t = lo + (hi - lo) / 2.0;
    if (!(t > lo)) t = hi;
    return t;
  };

  const std::size_t n = sorted.size();
  const std::size_t limit = static_cast<std::size_t>(max_bins);
  if (unique.size() <= limit) {
    for (std::size_t i = 1; i < unique.size(); ++i) {
      bins.thresholds.push_back(cut_between(unique[i - 1], unique[i]));
    }
    return bins;
  }
  std::size_t last_bin = 0;
  for (std::size_t i = 1; i < unique.size(); ++i) {
    const std::size_t bin = first_rank[i] * limit / n;
    if (bin > last_bin && bins.thresholds.size() + 1 < limit) {
      bins.thresholds.push_back(cut_between(unique[i - 1], unique[i]));
      last_bin = bin;
    }
  }
  return bins;
}

BinnedMatrix Quantize(const FeatureMatrix& x, int max_bins) {
  BinnedMatrix out;
  out.rows = x.rows();
  out.bins.resize(x.cols());
  out.codes.resize(x.rows() * x.cols());
  for (std::size_t c = 0; c < x.cols(); ++c) {
    auto col = x.column(c);
    out.bins[c] = ComputeBins(col, max_bins);
    for (std::size_t r = 0; r < x.rows(); ++r) {
      out.codes[c * out.rows + r] = out.bins[c].Code(col[r]);
    }
  }
  return out;
}

}  // namespace gridxai::gbt

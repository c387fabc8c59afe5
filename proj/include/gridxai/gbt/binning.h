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

#ifndef GRIDXAI_GBT_BINNING_H_
#define GRIDXAI_GBT_BINNING_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gridxai/common/feature_matrix.h"

namespace gridxai::gbt {

// Quantile cut points for one feature. A finite value x lands in bin
// b = #{t in thresholds : t <= x}, so "bin <= b" is equivalent to
// "x < thresholds[b]". The last code (value_bins()) holds missing values.
struct FeatureBins {
  std::vector<double> thresholds;

  std::size_t value_bins() const { return thresholds.size() + 1; }
  std::uint16_t missing_code() const {
    return static_cast<std::uint16_t>(thresholds.size() + 1);
  }
  std::uint16_t Code(double x) const;
};

// At most `max_bins` value bins. Distinct values get their own bin while
// they fit; otherwise cuts follow the empirical quantiles. Thresholds sit
// strictly above the value below them.
FeatureBins ComputeBins(std::span<const double> values, int max_bins);

// Column-major bin codes for a whole matrix.
struct BinnedMatrix {
  std::size_t rows = 0;
  std::vector<FeatureBins> bins;
  std::vector<std::uint16_t> codes;

  std::span<const std::uint16_t> column(std::size_t c) const {
    return {codes.data() + c * rows, rows};
  }
};

BinnedMatrix Quantize(const FeatureMatrix& x, int max_bins);

}  // namespace gridxai::gbt

#endif  // GRIDXAI_GBT_BINNING_H_

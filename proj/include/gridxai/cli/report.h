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

#ifndef GRIDXAI_CLI_REPORT_H_
#define GRIDXAI_CLI_REPORT_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace gridxai::cli {

// Fixed-width bins over [min, max]; the maximum falls in the last bin.
struct Axis {
  double lo = 0.0;
  double hi = 0.0;
  int bins = 1;
  double width() const { return (hi - lo) / bins; }
  int Bin(double v) const;
  static Axis Fit(std::span<const double> values, int bins);
};

struct BinnedGrid {
  Axis x;
  Axis y;
  std::vector<std::size_t> count;  // bins_x * bins_y, x-major
  std::vector<double> sum;
  std::size_t index(int bx, int by) const {
    return static_cast<std::size_t>(bx) * static_cast<std::size_t>(y.bins) +
           static_cast<std::size_t>(by);
  }
  // NaN for empty cells.
  double Mean(int bx, int by) const;
};

// Mean of `z` per (x, y) cell. NaN triples are skipped.
BinnedGrid BinnedMeans(std::span<const double> x, std::span<const double> y,
                       std::span<const double> z, int bins_x, int bins_y);

// Count-weighted mean of the cell means along y, per x bin (NaN when empty).
std::vector<double> MarginalMeansX(const BinnedGrid& grid);

// `x_bin,y_bin,x_lo,x_hi,y_lo,y_hi,count,mean_volume`; empty cells leave
// mean_volume blank.
std::string BinnedGridCsv(const BinnedGrid& grid);

struct KdeGrid {
  std::vector<double> xs;
  std::vector<double> ys;
  std::vector<double> density;  // xs.size() * ys.size(), x-major
  double bandwidth_x = 0.0;
  double bandwidth_y = 0.0;
};

// Scott's rule for d dimensions: sd * n^(-1 / (d + 4)).
double ScottBandwidth(std::span<const double> v, int dims);

// Product Gaussian kernel density on an n_grid x n_grid lattice spanning
// the data range.
KdeGrid GaussianKde2d(std::span<const double> x, std::span<const double> y,
                      int n_grid);

// `x,y,density`
std::string KdeGridCsv(const KdeGrid& grid);

}  // namespace gridxai::cli

#endif  // GRIDXAI_CLI_REPORT_H_

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

#include "gridxai/cli/report.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "gridxai/common/csv.h"
#include "gridxai/common/error.h"

namespace gridxai::cli {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

}  // namespace

int Axis::Bin(double v) const {
  if (std::isnan(v) || v < lo || v > hi) return -1;
  if (!(hi > lo)) return 0;
  const int b = static_cast<int>(std::floor((v - lo) / width()));
  return std::clamp(b, 0, bins - 1);
}

Axis Axis::Fit(std::span<const double> values, int bins) {
  if (bins < 1) throw InvalidInputError("need at least one bin");
  Axis a;
  a.bins = bins;
  bool any = false;
  for (double v : values) {
    if (std::isnan(v)) continue;
    if (!any) {
      a.lo = a.hi = v;
      any = true;
    }
    a.lo = std::min(a.lo, v);
    a.hi = std::max(a.hi, v);
  }
  if (!any) throw InvalidInputError("cannot bin an all-missing column");
  return a;
}

double BinnedGrid::Mean(int bx, int by) const {
  const std::size_t i = index(bx, by);
  return count[i] == 0 ? kNaN : sum[i] / static_cast<double>(count[i]);
}

BinnedGrid BinnedMeans(std::span<const double> x, std::span<const double> y,
                       std::span<const double> z, int bins_x, int bins_y) {
  if (x.size() != y.size() || x.size() != z.size()) {
    throw InvalidInputError("binned grid inputs differ in length");
  }
  BinnedGrid g;
  g.x = Axis::Fit(x, bins_x);
  g.y = Axis::Fit(y, bins_y);
  const std::size_t cells = static_cast<std::size_t>(bins_x) * static_cast<std::size_t>(bins_y);
  g.count.assign(cells, 0);
  g.sum.assign(cells, 0.0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (std::isnan(z[i])) continue;
    const int bx = g.x.Bin(x[i]);
    const int by = g.y.Bin(y[i]);
    if (bx < 0 || by < 0) continue;
    ++g.count[g.index(bx, by)];
    g.sum[g.index(bx, by)] += z[i];
  }
  return g;
}

std::vector<double> MarginalMeansX(const BinnedGrid& grid) {
  std::vector<double> out(static_cast<std::size_t>(grid.x.bins), kNaN);
  for (int bx = 0; bx < grid.x.bins; ++bx) {
    double weighted = 0.0;
    std::size_t n = 0;
    for (int by = 0; by < grid.y.bins; ++by) {
      const std::size_t c = grid.count[grid.index(bx, by)];
      if (c == 0) continue;
      weighted += grid.Mean(bx, by) * static_cast<double>(c);
      n += c;
    }
    if (n > 0) out[static_cast<std::size_t>(bx)] = weighted / static_cast<double>(n);
  }
  return out;
}

std::string BinnedGridCsv(const BinnedGrid& g) {
  std::string out = "x_bin,y_bin,x_lo,x_hi,y_lo,y_hi,count,mean_volume\n";
  for (int bx = 0; bx < g.x.bins; ++bx) {
    for (int by = 0; by < g.y.bins; ++by) {
      const double x_lo = g.x.lo + bx * g.x.width();
      const double y_lo = g.y.lo + by * g.y.width();
      const double x_hi = bx + 1 == g.x.bins ? g.x.hi : g.x.lo + (bx + 1) * g.x.width();
      const double y_hi = by + 1 == g.y.bins ? g.y.hi : g.y.lo + (by + 1) * g.y.width();
      out += std::to_string(bx) + "," + std::to_string(by) + "," + FormatDouble(x_lo) +
             "," + FormatDouble(x_hi) + "," + FormatDouble(y_lo) + "," +
             FormatDouble(y_hi) + "," + std::to_string(g.count[g.index(bx, by)]) + "," +
             FormatDouble(g.Mean(bx, by)) + "\n";
    }
  }
  return out;
}

double ScottBandwidth(std::span<const double> v, int dims) {
  std::size_t n = 0;
  double mean = 0.0;
  for (double x : v) {
    if (std::isnan(x)) continue;
    ++n;
    mean += x;
  }
  if (n < 2) throw InvalidInputError("bandwidth needs at least two values");
  mean /= static_cast<double>(n);
  double ss = 0.0;
  for (double x : v) {
    if (!std::isnan(x)) ss += (x - mean) * (x - mean);
  }
  const double sd = std::sqrt(ss / static_cast<double>(n - 1));
  return sd * std::pow(static_cast<double>(n), -1.0 / (dims + 4));
}

KdeGrid GaussianKde2d(std::span<const double> x, std::span<const double> y,
                      int n_grid) {
  if (x.size() != y.size()) throw InvalidInputError("KDE inputs differ in length");
  if (n_grid < 2) throw InvalidInputError("KDE grid needs at least two points");
  std::vector<double> px, py;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (std::isnan(x[i]) || std::isnan(y[i])) continue;
    px.push_back(x[i]);
    py.push_back(y[i]);
  }
  KdeGrid g;
  g.bandwidth_x = ScottBandwidth(px, 2);
  g.bandwidth_y = ScottBandwidth(py, 2);
  if (!(g.bandwidth_x > 0.0) || !(g.bandwidth_y > 0.0)) {
    throw InvalidInputError("KDE needs non-constant coordinates");
  }
  const Axis ax = Axis::Fit(px, 1);
  const Axis ay = Axis::Fit(py, 1);
  const auto n = static_cast<std::size_t>(n_grid);
  g.xs.resize(n);
  g.ys.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(n - 1);
    g.xs[i] = ax.lo + t * (ax.hi - ax.lo);
    g.ys[i] = ay.lo + t * (ay.hi - ay.lo);
  }
  const double norm = 1.0 / (2.0 * std::numbers::pi * g.bandwidth_x * g.bandwidth_y *
                             static_cast<double>(px.size()));
  g.density.assign(n * n, 0.0);
  std::vector<double> kx(n), ky(n);
  for (std::size_t s = 0; s < px.size(); ++s) {
    for (std::size_t i = 0; i < n; ++i) {
      const double u = (g.xs[i] - px[s]) / g.bandwidth_x;
      const double v = (g.ys[i] - py[s]) / g.bandwidth_y;
      kx[i] = std::exp(-0.5 * u * u);
      ky[i] = std::exp(-0.5 * v * v);
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) g.density[i * n + j] += kx[i] * ky[j];
    }
  }
  for (double& d : g.density) d *= norm;
  return g;
}

std::string KdeGridCsv(const KdeGrid& g) {
  std::string out = "x,y,density\n";
  for (std::size_t i = 0; i < g.xs.size(); ++i) {
    for (std::size_t j = 0; j < g.ys.size(); ++j) {
      out += FormatDouble(g.xs[i]) + "," + FormatDouble(g.ys[j]) + "," +
             FormatDouble(g.density[i * g.ys.size() + j]) + "\n";
    }
  }
  return out;
}

}  // namespace gridxai::cli

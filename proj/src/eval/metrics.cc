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

#include "gridxai/eval/metrics.h"

#include "gridxai/common/error.h"

namespace gridxai::eval {
namespace {

void CheckLengths(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw InvalidInputError("score inputs differ in length");
  }
  if (a.size() < 2) throw InvalidInputError("score needs at least two values");
}

}  // namespace

double R2(std::span<const double> y_true, std::span<const double> y_pred) {
  CheckLengths(y_true, y_pred);
  double mean = 0.0;
  for (double v : y_true) mean += v;
  mean /= static_cast<double>(y_true.size());
  double ss_tot = 0.0;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < y_true.size(); ++i) {
    const double d = y_true[i] - mean;
    const double e = y_true[i] - y_pred[i];
    ss_tot += d * d;
    ss_res += e * e;
  }
  if (!(ss_tot > 0.0)) {
    throw UndefinedScoreError("R2 is undefined for a constant target");
  }
  return 1.0 - ss_res / ss_tot;
}

double MeanSquaredError(std::span<const double> y_true,
                        std::span<const double> y_pred) {
  CheckLengths(y_true, y_pred);
  double ss = 0.0;
  for (std::size_t i = 0; i < y_true.size(); ++i) {
    const double e = y_true[i] - y_pred[i];
    ss += e * e;
  }
  return ss / static_cast<double>(y_true.size());
}

}  // namespace gridxai::eval

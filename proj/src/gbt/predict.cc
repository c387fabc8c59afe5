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

#include "gridxai/gbt/predict.h"

#include "gridxai/common/error.h"

namespace gridxai::gbt {

double PredictRow(const Ensemble& model, std::span<const double> row) {
  double out = model.base_score;
  for (const RegressionTree& tree : model.trees) out += tree.Evaluate(row);
  return out;
}

std::vector<double> Predict(const Ensemble& model, const RowMajor& x,
                            Execution exec) {
  if (x.cols != model.n_features()) {
    throw SchemaError("row width " + std::to_string(x.cols) +
                      " does not match model feature count " +
                      std::to_string(model.n_features()));
  }
  std::vector<double> out(x.rows);
  const long long n = static_cast<long long>(x.rows);
#pragma omp parallel for schedule(static) if (IsParallel(exec))
  for (long long i = 0; i < n; ++i) {
    out[i] = PredictRow(model, x.row(static_cast<std::size_t>(i)));
  }
  return out;
}

std::vector<double> Predict(const Ensemble& model, const FeatureMatrix& x,
                            Execution exec) {
  return Predict(model, ToRowMajor(x, model.feature_names), exec);
}

}  // namespace gridxai::gbt

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

#ifndef GRIDXAI_EVAL_METRICS_H_
#define GRIDXAI_EVAL_METRICS_H_

#include <span>

namespace gridxai::eval {

// Coefficient of determination 1 - SS_res / SS_tot. Throws
// UndefinedScoreError for constant y_true, InvalidInputError for fewer than
// two values or mismatched lengths.
double R2(std::span<const double> y_true, std::span<const double> y_pred);

double MeanSquaredError(std::span<const double> y_true,
                        std::span<const double> y_pred);

}  // namespace gridxai::eval

#endif  // GRIDXAI_EVAL_METRICS_H_

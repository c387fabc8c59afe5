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

#ifndef GRIDXAI_SHAP_BRUTE_FORCE_H_
#define GRIDXAI_SHAP_BRUTE_FORCE_H_

#include <cstdint>
#include <span>
#include <vector>

#include "gridxai/gbt/tree.h"

namespace gridxai::shap {

// Subset enumeration is 2^n; larger models are refused.
inline constexpr std::size_t kBruteForceMaxFeatures = 15;

// v(S): model expectation with features in `present_mask` fixed to `row` and
// the rest integrated out by descending both branches weighted by cover.
double CoalitionValue(const gbt::Ensemble& model, std::span<const double> row,
                      std::uint32_t present_mask);

// Exact Shapley values by enumerating every coalition:
//   phi_j = sum_{S not containing j} |S|!(n-|S|-1)!/n! (v(S+j) - v(S)).
// Throws CapacityError above kBruteForceMaxFeatures features.
std::vector<double> BruteForceShap(const gbt::Ensemble& model,
                                   std::span<const double> row);

// Shapley interaction index, split evenly between (a,b) and (b,a):
//   Phi_ab = sum_{S without a,b} |S|!(n-|S|-2)!/(2(n-1)!) *
//            (v(S+a+b) - v(S+a) - v(S+b) + v(S)),
// with the diagonal set so each row sums to phi_a. Row-major n x n.
std::vector<double> BruteForceInteractions(const gbt::Ensemble& model,
                                           std::span<const double> row);

}  // namespace gridxai::shap

#endif  // GRIDXAI_SHAP_BRUTE_FORCE_H_

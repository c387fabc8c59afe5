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

#include "gridxai/shap/brute_force.h"

#include <bit>

#include "gridxai/common/error.h"
#include "gridxai/shap/tree_shap.h"

namespace gridxai::shap {
namespace {

using gbt::RegressionTree;
using gbt::TreeNode;

double Expectation(const RegressionTree& tree, int node,
                   std::span<const double> row, std::uint32_t mask) {
  const TreeNode& n = tree.nodes[node];
  if (n.is_leaf()) return n.leaf_value;
  if (mask & (1u << n.split_feature)) {
    return Expectation(tree, n.Next(row[n.split_feature]), row, mask);
  }
  const double left = tree.nodes[n.left].cover;
  const double right = tree.nodes[n.right].cover;
  double sum = 0.0;
  if (left > 0.0) sum += left * Expectation(tree, n.left, row, mask);
  if (right > 0.0) sum += right * Expectation(tree, n.right, row, mask);
  return sum / n.cover;
}

std::vector<double> Factorials(std::size_t n) {
  std::vector<double> f(n + 1, 1.0);
  for (std::size_t i = 1; i <= n; ++i) f[i] = f[i - 1] * static_cast<double>(i);
  return f;
}

void CheckCapacity(const gbt::Ensemble& model, std::span<const double> row) {
  if (model.n_features() > kBruteForceMaxFeatures) {
    throw CapacityError("brute-force Shapley supports at most " +
                        std::to_string(kBruteForceMaxFeatures) +
                        " features, model has " +
                        std::to_string(model.n_features()));
  }
  if (row.size() != model.n_features()) {
    throw SchemaError("row width does not match the model's feature count");
  }
  CheckCovers(model);
}

std::vector<double> AllCoalitionValues(const gbt::Ensemble& model,
                                       std::span<const double> row) {
  const std::uint32_t subsets = 1u << model.n_features();
  std::vector<double> v(subsets);
  for (std::uint32_t s = 0; s < subsets; ++s) v[s] = CoalitionValue(model, row, s);
  return v;
}

}  // namespace

double CoalitionValue(const gbt::Ensemble& model, std::span<const double> row,
                      std::uint32_t present_mask) {
  double out = model.base_score;
  for (const RegressionTree& tree : model.trees) {
    if (!tree.nodes.empty()) out += Expectation(tree, 0, row, present_mask);
  }
  return out;
}

std::vector<double> BruteForceShap(const gbt::Ensemble& model,
                                   std::span<const double> row) {
  CheckCapacity(model, row);
  const std::size_t n = model.n_features();
  const std::vector<double> v = AllCoalitionValues(model, row);
  const std::vector<double> fact = Factorials(n);
  std::vector<double> phi(n, 0.0);
  const std::uint32_t subsets = 1u << n;
  for (std::size_t j = 0; j < n; ++j) {
    const std::uint32_t bit = 1u << j;
    for (std::uint32_t s = 0; s < subsets; ++s) {
      if (s & bit) continue;
      const std::size_t size = static_cast<std::size_t>(std::popcount(s));
      const double w = fact[size] * fact[n - size - 1] / fact[n];
      phi[j] += w * (v[s | bit] - v[s]);
    }
  }
  return phi;
}

std::vector<double> BruteForceInteractions(const gbt::Ensemble& model,
                                           std::span<const double> row) {
  CheckCapacity(model, row);
  const std::size_t n = model.n_features();
  std::vector<double> out(n * n, 0.0);
  if (n == 0) return out;
  const std::vector<double> phi = BruteForceShap(model, row);
  if (n == 1) {
    out[0] = phi[0];
    return out;
  }
  const std::vector<double> v = AllCoalitionValues(model, row);
  const std::vector<double> fact = Factorials(n);
  const std::uint32_t subsets = 1u << n;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const std::uint32_t ba = 1u << a, bb = 1u << b;
      double sum = 0.0;
      for (std::uint32_t s = 0; s < subsets; ++s) {
        if (s & (ba | bb)) continue;
        const std::size_t size = static_cast<std::size_t>(std::popcount(s));
        const double w = fact[size] * fact[n - size - 2] / (2.0 * fact[n - 1]);
        sum += w * (v[s | ba | bb] - v[s | ba] - v[s | bb] + v[s]);
      }
      out[a * n + b] = sum;
      out[b * n + a] = sum;
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    double off = 0.0;
    for (std::size_t b = 0; b < n; ++b) {
      if (b != a) off += out[a * n + b];
    }
    out[a * n + a] = phi[a] - off;
  }
  return out;
}

}  // namespace gridxai::shap

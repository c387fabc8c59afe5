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

#ifndef GRIDXAI_TESTS_TEST_UTIL_H_
#define GRIDXAI_TESTS_TEST_UTIL_H_

#include <cstdint>
#include <filesystem>
#include <limits>
#include <string>
#include <vector>

#include "gridxai/common/feature_matrix.h"
#include "gridxai/common/random.h"
#include "gridxai/common/time.h"
#include "gridxai/gbt/tree.h"

namespace gridxai::testing {

inline std::filesystem::path FixturesDir() { return GRIDXAI_FIXTURES_DIR; }

// Fresh, empty directory under the system temp path.
inline std::filesystem::path TempDir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("gridxai_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

// Random tree over `n_features` with integer covers so additivity is exact.
inline int GrowRandomNode(gbt::RegressionTree& tree, Rng& rng, int depth,
                          int max_depth, int n_features) {
  const int index = static_cast<int>(tree.nodes.size());
  tree.nodes.emplace_back();
  const bool leaf = depth == max_depth || (depth > 0 && rng.Uniform() < 0.25);
  if (leaf) {
    tree.nodes[index].leaf_value = rng.Uniform(-2.0, 2.0);
    tree.nodes[index].cover = static_cast<double>(rng.Integer(1, 20));
    return index;
  }
  const int feature = static_cast<int>(rng.Index(n_features));
  const double threshold = static_cast<double>(rng.Integer(-4, 4)) / 2.0;
  const auto branch = rng.Uniform() < 0.5 ? gbt::Branch::kLeft : gbt::Branch::kRight;
  const int left = GrowRandomNode(tree, rng, depth + 1, max_depth, n_features);
  const int right = GrowRandomNode(tree, rng, depth + 1, max_depth, n_features);
  auto& node = tree.nodes[index];
  node.split_feature = feature;
  node.threshold = threshold;
  node.default_branch = branch;
  node.left = left;
  node.right = right;
  node.cover = tree.nodes[left].cover + tree.nodes[right].cover;
  return index;
}

inline gbt::Ensemble RandomEnsemble(Rng& rng, int max_features = 6,
                                    int max_depth = 4, int max_trees = 10) {
  gbt::Ensemble model;
  const int n_features = static_cast<int>(rng.Integer(1, max_features));
  for (int f = 0; f < n_features; ++f) {
    model.feature_names.push_back("f" + std::to_string(f));
  }
  model.base_score = rng.Uniform(-1.0, 1.0);
  const int n_trees = static_cast<int>(rng.Integer(1, max_trees));
  for (int t = 0; t < n_trees; ++t) {
    gbt::RegressionTree tree;
    GrowRandomNode(tree, rng, 0,
                   static_cast<int>(rng.Integer(0, max_depth)), n_features);
    model.trees.push_back(std::move(tree));
  }
  return model;
}

// Sample rows on the threshold lattice, sometimes missing.
inline std::vector<double> RandomRow(Rng& rng, std::size_t n_features,
                                     double missing_rate = 0.1) {
  std::vector<double> row(n_features);
  for (auto& v : row) {
    v = rng.Uniform() < missing_rate
            ? std::numeric_limits<double>::quiet_NaN()
            : static_cast<double>(rng.Integer(-5, 5)) / 2.0 + rng.Uniform(-0.2, 0.2);
  }
  return row;
}

inline FeatureMatrix MakeMatrix(const std::vector<std::string>& names,
                                const std::vector<std::vector<double>>& columns,
                                UtcHour first = MakeUtcHour(2021, 1, 1)) {
  const std::size_t n = columns.empty() ? 0 : columns.front().size();
  std::vector<UtcHour> hours;
  for (std::size_t i = 0; i < n; ++i) hours.push_back(first + std::chrono::hours(i));
  FeatureMatrix x(hours);
  for (std::size_t c = 0; c < names.size(); ++c) {
    x.AddColumn({names[c], "MW"}, columns[c]);
  }
  return x;
}

}  // namespace gridxai::testing

#endif  // GRIDXAI_TESTS_TEST_UTIL_H_

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

#ifndef GRIDXAI_GBT_TREE_H_
#define GRIDXAI_GBT_TREE_H_

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "gridxai/gbt/hyperparameters.h"

namespace gridxai::gbt {

inline constexpr int kNoFeature = -1;

enum class Branch { kLeft, kRight };

// Internal nodes send x < threshold to the left child; NaN follows
// `default_branch`. `cover` is the number of training rows that reached the
// node, so cover(parent) == cover(left) + cover(right).
struct TreeNode {
  int split_feature = kNoFeature;
  double threshold = 0.0;
  int left = -1;
  int right = -1;
  Branch default_branch = Branch::kLeft;
  double leaf_value = 0.0;
  double cover = 0.0;

  bool is_leaf() const { return split_feature == kNoFeature; }

  int Next(double x) const {
    if (std::isnan(x)) return default_branch == Branch::kLeft ? left : right;
    return x < threshold ? left : right;
  }

  bool operator==(const TreeNode&) const = default;
};

// Nodes are stored flat with the root at index 0.
struct RegressionTree {
  std::vector<TreeNode> nodes;

  // Leaf value reached by `row` (indexed by model feature).
  double Evaluate(std::span<const double> row) const {
    int i = 0;
    while (!nodes[i].is_leaf()) {
      i = nodes[i].Next(row[nodes[i].split_feature]);
    }
    return nodes[i].leaf_value;
  }

  int MaxDepth() const;
  std::size_t LeafCount() const;

  // Structural checks: single root, two children per internal node, no
  // cycles or shared children, finite thresholds, exact cover additivity,
  // split features in range. Throws ModelIntegrityError.
  void Validate(std::size_t n_features) const;

  bool operator==(const RegressionTree&) const = default;
};

// prediction(x) = base_score + sum of tree outputs; the learning rate is
// already folded into the leaf values.
struct Ensemble {
  std::vector<std::string> feature_names;
  double base_score = 0.0;
  double learning_rate = 1.0;
  std::vector<RegressionTree> trees;
  Hyperparameters hyperparameters;

  std::size_t n_features() const { return feature_names.size(); }
  void Validate() const;

  bool operator==(const Ensemble&) const = default;
};

}  // namespace gridxai::gbt

#endif  // GRIDXAI_GBT_TREE_H_

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

#include "gridxai/gbt/tree.h"

#include <algorithm>
#include <unordered_set>

#include "gridxai/common/error.h"

namespace gridxai::gbt {

void Hyperparameters::Validate() const {
  auto fail = [](const std::string& what) {
    throw InvalidInputError("hyperparameter out of range: " + what);
  };
  if (n_trees < 0) fail("n_trees must be >= 0");
  if (max_depth < 1 || max_depth > 32) fail("max_depth must be in [1, 32]");
  if (!(learning_rate > 0.0 && learning_rate <= 1.0)) {
    fail("learning_rate must be in (0, 1]");
  }
  if (!(min_child_cover >= 0.0) || !std::isfinite(min_child_cover)) {
    fail("min_child_cover must be >= 0");
  }
  if (!(subsample_rows > 0.0 && subsample_rows <= 1.0)) {
    fail("subsample_rows must be in (0, 1]");
  }
  if (!(subsample_features > 0.0 && subsample_features <= 1.0)) {
    fail("subsample_features must be in (0, 1]");
  }
  if (n_histogram_bins < 2 || n_histogram_bins > 65535) {
    fail("n_histogram_bins must be in [2, 65535]");
  }
  if (!(l2_leaf_penalty >= 0.0) || !std::isfinite(l2_leaf_penalty)) {
    fail("l2_leaf_penalty must be >= 0");
  }
}

int RegressionTree::MaxDepth() const {
  if (nodes.empty()) return 0;
  int best = 0;
  std::vector<std::pair<int, int>> stack{{0, 0}};
  while (!stack.empty()) {
    auto [i, d] = stack.back();
    stack.pop_back();
    best = std::max(best, d);
    if (!nodes[i].is_leaf()) {
      stack.push_back({nodes[i].left, d + 1});
      stack.push_back({nodes[i].right, d + 1});
    }
  }
  return best;
}

std::size_t RegressionTree::LeafCount() const {
  return static_cast<std::size_t>(
      std::count_if(nodes.begin(), nodes.end(),
                    [](const TreeNode& n) { return n.is_leaf(); }));
}

void RegressionTree::Validate(std::size_t n_features) const {
  if (nodes.empty()) throw ModelIntegrityError("tree has no nodes");
  std::vector<int> parents(nodes.size(), 0);
  const int n = static_cast<int>(nodes.size());
  for (int i = 0; i < n; ++i) {
    const TreeNode& node = nodes[i];
    if (!(node.cover >= 0.0) || !std::isfinite(node.cover)) {
      throw ModelIntegrityError("node " + std::to_string(i) +
                                " has an invalid cover");
    }
    if (!std::isfinite(node.leaf_value)) {
      throw ModelIntegrityError("node " + std::to_string(i) +
                                " has a non-finite value");
    }
    if (node.is_leaf()) continue;
    if (node.split_feature < 0 ||
        static_cast<std::size_t>(node.split_feature) >= n_features) {
      throw ModelIntegrityError("node " + std::to_string(i) +
                                " splits on an unknown feature");
    }
    if (!std::isfinite(node.threshold)) {
      throw ModelIntegrityError("node " + std::to_string(i) +
                                " has a non-finite threshold");
    }
    for (int child : {node.left, node.right}) {
      if (child <= 0 || child >= n || child == i) {
        throw ModelIntegrityError("node " + std::to_string(i) +
                                  " has an invalid child index");
      }
      ++parents[child];
    }
    if (node.left == node.right) {
      throw ModelIntegrityError("node " + std::to_string(i) +
                                " uses the same child twice");
    }
    if (nodes[node.left].cover + nodes[node.right].cover != node.cover) {
      throw ModelIntegrityError("cover additivity violated at node " +
                                std::to_string(i));
    }
  }
  if (parents[0] != 0) throw ModelIntegrityError("root has a parent");
  for (int i = 1; i < n; ++i) {
    if (parents[i] != 1) {
      throw ModelIntegrityError("node " + std::to_string(i) + " has " +
                                std::to_string(parents[i]) + " parents");
    }
  }
  // Every node has one parent and the root none; reachability from the root
  // then rules out cycles.
  std::vector<char> seen(nodes.size(), 0);
  std::vector<int> stack{0};
  std::size_t visited = 0;
  while (!stack.empty()) {
    const int i = stack.back();
    stack.pop_back();
    if (seen[i]) throw ModelIntegrityError("cycle detected");
    seen[i] = 1;
    ++visited;
    if (!nodes[i].is_leaf()) {
      stack.push_back(nodes[i].left);
      stack.push_back(nodes[i].right);
    }
  }
  if (visited != nodes.size()) {
    throw ModelIntegrityError("tree contains unreachable nodes");
  }
}

void Ensemble::Validate() const {
  if (!std::isfinite(base_score)) {
    throw ModelIntegrityError("base_score is not finite");
  }
  std::unordered_set<std::string> names;
  for (const auto& name : feature_names) {
    if (!names.insert(name).second) {
      throw ModelIntegrityError("duplicate feature name '" + name + "'");
    }
  }
  for (const auto& tree : trees) tree.Validate(feature_names.size());
}

}  // namespace gridxai::gbt

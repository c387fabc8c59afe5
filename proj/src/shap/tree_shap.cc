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

#include "gridxai/shap/tree_shap.h"

#include <algorithm>

#include "gridxai/common/error.h"

namespace gridxai::shap {
namespace {

using gbt::Ensemble;
using gbt::RegressionTree;
using gbt::TreeNode;

// One feature on the current root-to-node path. `zero_fraction` is the share
// of cover flowing through when the feature is hidden, `one_fraction` is 1 if
// x follows this path and 0 otherwise; `weight` accumulates permutation
// weights by subset size.
struct PathElement {
  int feature = -1;
  double zero_fraction = 0.0;
  double one_fraction = 0.0;
  double weight = 0.0;
};

void ExtendPath(PathElement* path, int depth, double zero_fraction,
                double one_fraction, int feature) {
  path[depth].feature = feature;
  path[depth].zero_fraction = zero_fraction;
  path[depth].one_fraction = one_fraction;
  path[depth].weight = depth == 0 ? 1.0 : 0.0;
  for (int i = depth - 1; i >= 0; --i) {
    path[i + 1].weight += one_fraction * path[i].weight * (i + 1) / (depth + 1);
    path[i].weight = zero_fraction * path[i].weight * (depth - i) / (depth + 1);
  }
}

void UnwindPath(PathElement* path, int depth, int index) {
  const double one_fraction = path[index].one_fraction;
  const double zero_fraction = path[index].zero_fraction;
  double next_one_portion = path[depth].weight;
  for (int i = depth - 1; i >= 0; --i) {
    if (one_fraction != 0.0) {
      const double tmp = path[i].weight;
      path[i].weight = next_one_portion * (depth + 1) / ((i + 1) * one_fraction);
      next_one_portion =
          tmp - path[i].weight * zero_fraction * (depth - i) / (depth + 1);
    } else {
      path[i].weight =
          path[i].weight * (depth + 1) / (zero_fraction * (depth - i));
    }
  }
  for (int i = index; i < depth; ++i) {
    path[i].feature = path[i + 1].feature;
    path[i].zero_fraction = path[i + 1].zero_fraction;
    path[i].one_fraction = path[i + 1].one_fraction;
  }
}

// Total permutation weight left if the element at `index` were unwound.
double UnwoundPathSum(const PathElement* path, int depth, int index) {
  const double one_fraction = path[index].one_fraction;
  const double zero_fraction = path[index].zero_fraction;
  double next_one_portion = path[depth].weight;
  double total = 0.0;
  for (int i = depth - 1; i >= 0; --i) {
    if (one_fraction != 0.0) {
      const double tmp = next_one_portion * (depth + 1) / ((i + 1) * one_fraction);
      total += tmp;
      next_one_portion =
          path[i].weight - tmp * zero_fraction * (depth - i) / (depth + 1);
    } else if (zero_fraction != 0.0) {
      total += path[i].weight / zero_fraction / ((depth - i) / double(depth + 1));
    }
  }
  return total;
}

struct Walker {
  const RegressionTree& tree;
  std::span<const double> row;
  std::span<double> phi;
  Conditioning mode;
  int condition_feature;

  void Recurse(int node_index, int depth, PathElement* parent_path,
               double parent_zero, double parent_one, int parent_feature,
               double condition_fraction) {
    if (condition_fraction == 0.0) return;
    const TreeNode& node = tree.nodes[node_index];

    PathElement* path = parent_path + depth + 1;
    std::copy(parent_path, parent_path + depth + 1, path);
    if (mode == Conditioning::kNone || parent_feature != condition_feature) {
      ExtendPath(path, depth, parent_zero, parent_one, parent_feature);
    }

    if (node.is_leaf()) {
      for (int i = 1; i <= depth; ++i) {
        const double w = UnwoundPathSum(path, depth, i);
        const PathElement& el = path[i];
        phi[el.feature] += w * (el.one_fraction - el.zero_fraction) *
                           node.leaf_value * condition_fraction;
      }
      return;
    }

    const int split = node.split_feature;
    const int hot = node.Next(row[split]);
    const int cold = hot == node.left ? node.right : node.left;
    const double hot_zero = tree.nodes[hot].cover / node.cover;
    const double cold_zero = tree.nodes[cold].cover / node.cover;
    double incoming_zero = 1.0;
    double incoming_one = 1.0;

    // A feature already on the path is unwound and re-added with the
    // combined fractions.
    int path_index = 0;
    for (; path_index <= depth; ++path_index) {
      if (path[path_index].feature == split) break;
    }
    if (path_index != depth + 1) {
      incoming_zero = path[path_index].zero_fraction;
      incoming_one = path[path_index].one_fraction;
      UnwindPath(path, depth, path_index);
      depth -= 1;
    }

    double hot_condition = condition_fraction;
    double cold_condition = condition_fraction;
    if (mode == Conditioning::kPresent && split == condition_feature) {
      cold_condition = 0.0;
      depth -= 1;
    } else if (mode == Conditioning::kAbsent && split == condition_feature) {
      hot_condition *= hot_zero;
      cold_condition *= cold_zero;
      depth -= 1;
    }

    const double hz = hot_zero * incoming_zero;
    if (hz != 0.0 || incoming_one != 0.0) {
      Recurse(hot, depth + 1, path, hz, incoming_one, split, hot_condition);
    }
    const double cz = cold_zero * incoming_zero;
    if (cz != 0.0) {
      Recurse(cold, depth + 1, path, cz, 0.0, split, cold_condition);
    }
  }
};

void ShapForTree(const RegressionTree& tree, std::span<const double> row,
                 Conditioning mode, int condition_feature,
                 std::span<double> phi, std::vector<PathElement>& scratch) {
  if (tree.nodes.size() <= 1) return;
  const int max_depth = tree.MaxDepth() + 2;
  const std::size_t needed =
      static_cast<std::size_t>(max_depth) * (max_depth + 1) / 2;
  if (scratch.size() < needed) scratch.resize(needed);
  Walker walker{tree, row, phi, mode, condition_feature};
  walker.Recurse(0, 0, scratch.data(), 1.0, 1.0, -1, 1.0);
}

double TreeExpectation(const RegressionTree& tree, int node) {
  const TreeNode& n = tree.nodes[node];
  if (n.is_leaf()) return n.leaf_value;
  return (tree.nodes[n.left].cover * TreeExpectation(tree, n.left) +
          tree.nodes[n.right].cover * TreeExpectation(tree, n.right)) /
         n.cover;
}

}  // namespace

void CheckCovers(const Ensemble& model) {
  for (std::size_t t = 0; t < model.trees.size(); ++t) {
    for (std::size_t i = 0; i < model.trees[t].nodes.size(); ++i) {
      const TreeNode& n = model.trees[t].nodes[i];
      if (!n.is_leaf() && !(n.cover > 0.0)) {
        throw ModelIntegrityError("tree " + std::to_string(t) + " node " +
                                  std::to_string(i) +
                                  " is an internal node with zero cover");
      }
    }
  }
}

double ExpectedValue(const Ensemble& model) {
  CheckCovers(model);
  double out = model.base_score;
  for (const RegressionTree& tree : model.trees) {
    if (!tree.nodes.empty()) out += TreeExpectation(tree, 0);
  }
  return out;
}

void ConditionalTreeShapRow(const Ensemble& model, std::span<const double> row,
                            Conditioning mode, int feature,
                            std::span<double> phi) {
  std::vector<PathElement> scratch;
  for (const RegressionTree& tree : model.trees) {
    ShapForTree(tree, row, mode, feature, phi, scratch);
  }
}

std::vector<double> TreeShapRow(const Ensemble& model,
                                std::span<const double> row) {
  std::vector<double> phi(model.n_features(), 0.0);
  ConditionalTreeShapRow(model, row, Conditioning::kNone, -1, phi);
  return phi;
}

ShapResult TreeShap(const Ensemble& model, const RowMajor& x, Execution exec) {
  if (x.cols != model.n_features()) {
    throw SchemaError("row width does not match the model's feature count");
  }
  ShapResult out;
  out.feature_names = model.feature_names;
  out.base_value = ExpectedValue(model);
  out.n_samples = x.rows;
  out.attributions.assign(x.rows * x.cols, 0.0);
  const long long n = static_cast<long long>(x.rows);
#pragma omp parallel if (IsParallel(exec))
  {
    std::vector<PathElement> scratch;
#pragma omp for schedule(dynamic, 16)
    for (long long s = 0; s < n; ++s) {
      const std::size_t i = static_cast<std::size_t>(s);
      std::span<double> phi(out.attributions.data() + i * x.cols, x.cols);
      for (const RegressionTree& tree : model.trees) {
        ShapForTree(tree, x.row(i), Conditioning::kNone, -1, phi, scratch);
      }
    }
  }
  return out;
}

ShapResult TreeShap(const Ensemble& model, const FeatureMatrix& x,
                    Execution exec) {
  ShapResult out = TreeShap(model, ToRowMajor(x, model.feature_names), exec);
  out.hours = x.hours();
  return out;
}

}  // namespace gridxai::shap

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

#include "gridxai/gbt/trainer.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gridxai/common/error.h"
#include "gridxai/common/random.h"

namespace gridxai::gbt {
namespace {

struct BinStat {
  double grad = 0.0;
  double hess = 0.0;
};

double Score(double g, double h, double l2) { return g * g / (h + l2); }

// Best split of a single feature. `hist` has value_bins() + 1 entries with
// the missing bucket last.
SplitCandidate BestSplitForFeature(int feature,
                                   const std::vector<BinStat>& hist,
                                   double min_child_cover, double l2,
                                   double parent_score) {
  SplitCandidate best;
  const std::size_t value_bins = hist.size() - 1;
  const BinStat missing = hist.back();
  BinStat total;
  for (std::size_t b = 0; b < value_bins; ++b) {
    total.grad += hist[b].grad;
    total.hess += hist[b].hess;
  }
  const double min_cover = std::max(min_child_cover, 1.0);

  BinStat left;
  for (std::size_t b = 0; b + 1 < value_bins; ++b) {
    left.grad += hist[b].grad;
    left.hess += hist[b].hess;
    const BinStat right{total.grad - left.grad, total.hess - left.hess};
    if (left.hess == 0.0 || right.hess == 0.0) continue;

    // Missing rows to the right, then to the left.
    const double gl_r = left.grad, hl_r = left.hess;
    const double gr_r = right.grad + missing.grad, hr_r = right.hess + missing.hess;
    const double gl_l = left.grad + missing.grad, hl_l = left.hess + missing.hess;
    const double gr_l = right.grad, hr_l = right.hess;

    const bool ok_r = hl_r >= min_cover && hr_r >= min_cover;
    const bool ok_l = hl_l >= min_cover && hr_l >= min_cover;
    const double gain_r =
        ok_r ? Score(gl_r, hl_r, l2) + Score(gr_r, hr_r, l2) - parent_score
             : -1.0;
    const double gain_l =
        ok_l ? Score(gl_l, hl_l, l2) + Score(gr_l, hr_l, l2) - parent_score
             : -1.0;
    if (!ok_r && !ok_l) continue;

    Branch dir;
    if (missing.hess == 0.0) {
      dir = left.hess >= right.hess ? Branch::kLeft : Branch::kRight;
    } else if (gain_l != gain_r) {
      dir = gain_l > gain_r ? Branch::kLeft : Branch::kRight;
    } else {
      dir = hl_l >= hr_r ? Branch::kLeft : Branch::kRight;
    }
    if (dir == Branch::kLeft && !ok_l) dir = Branch::kRight;
    if (dir == Branch::kRight && !ok_r) dir = Branch::kLeft;
    const double gain = dir == Branch::kLeft ? gain_l : gain_r;
    if (gain > best.gain) {
      best.feature = feature;
      best.bin = static_cast<int>(b);
      best.gain = gain;
      best.default_branch = dir;
      if (dir == Branch::kLeft) {
        best.left_cover = hl_l;
        best.right_cover = hr_l;
        best.left_grad = gl_l;
        best.right_grad = gr_l;
      } else {
        best.left_cover = hl_r;
        best.right_cover = hr_r;
        best.left_grad = gl_r;
        best.right_grad = gr_r;
      }
    }
  }
  return best;
}

std::vector<BinStat> BuildHistogram(const BinnedMatrix& binned, int feature,
                                    std::span<const std::size_t> rows,
                                    std::span<const double> gradients) {
  const FeatureBins& bins = binned.bins[feature];
  std::vector<BinStat> hist(bins.value_bins() + 1);
  auto codes = binned.column(feature);
  for (std::size_t r : rows) {
    BinStat& s = hist[codes[r]];
    s.grad += gradients[r];
    s.hess += 1.0;
  }
  return hist;
}

bool GoesLeft(const BinnedMatrix& binned, const SplitCandidate& split,
              std::size_t row) {
  const std::uint16_t code = binned.column(split.feature)[row];
  if (code == binned.bins[split.feature].missing_code()) {
    return split.default_branch == Branch::kLeft;
  }
  return code <= split.bin;
}

struct PendingNode {
  int index;
  std::vector<std::size_t> rows;
  double grad;
};

RegressionTree GrowTree(const BinnedMatrix& binned,
                        std::vector<std::size_t> rows,
                        std::span<const double> gradients,
                        std::span<const int> features,
                        const Hyperparameters& hp, Execution exec) {
  const double l2 = hp.l2_leaf_penalty;
  RegressionTree tree;
  double root_grad = 0.0;
  for (std::size_t r : rows) root_grad += gradients[r];
  tree.nodes.push_back(TreeNode{});
  tree.nodes[0].cover = static_cast<double>(rows.size());

  std::vector<PendingNode> level;
  level.push_back({0, std::move(rows), root_grad});
  std::vector<PendingNode> leaves;
  for (int depth = 0; depth < hp.max_depth && !level.empty(); ++depth) {
    std::vector<PendingNode> next;
    for (PendingNode& node : level) {
      const SplitCandidate split =
          FindBestSplit(binned, node.rows, gradients, features,
                        hp.min_child_cover, l2, exec);
      if (!split.valid()) {
        leaves.push_back(std::move(node));
        continue;
      }
      std::vector<std::size_t> left_rows, right_rows;
      left_rows.reserve(static_cast<std::size_t>(split.left_cover));
      right_rows.reserve(static_cast<std::size_t>(split.right_cover));
      for (std::size_t r : node.rows) {
        (GoesLeft(binned, split, r) ? left_rows : right_rows).push_back(r);
      }
      const int left = static_cast<int>(tree.nodes.size());
      const int right = left + 1;
      TreeNode& parent = tree.nodes[node.index];
      parent.split_feature = split.feature;
      parent.threshold = binned.bins[split.feature].thresholds[split.bin];
      parent.default_branch = split.default_branch;
      parent.left = left;
      parent.right = right;
      TreeNode left_node, right_node;
      left_node.cover = static_cast<double>(left_rows.size());
      right_node.cover = static_cast<double>(right_rows.size());
      tree.nodes.push_back(left_node);
      tree.nodes.push_back(right_node);
      next.push_back({left, std::move(left_rows), split.left_grad});
      next.push_back({right, std::move(right_rows), split.right_grad});
    }
    level = std::move(next);
  }
  for (PendingNode& node : level) leaves.push_back(std::move(node));
  for (const PendingNode& leaf : leaves) {
    TreeNode& n = tree.nodes[leaf.index];
    n.leaf_value = -hp.learning_rate * leaf.grad / (n.cover + l2);
  }
  return tree;
}

double RoutedLeafValue(const RegressionTree& tree, const BinnedMatrix& binned,
                       std::size_t row) {
  int i = 0;
  while (!tree.nodes[i].is_leaf()) {
    const TreeNode& n = tree.nodes[i];
    const std::uint16_t code = binned.column(n.split_feature)[row];
    const FeatureBins& bins = binned.bins[n.split_feature];
    bool left;
    if (code == bins.missing_code()) {
      left = n.default_branch == Branch::kLeft;
    } else {
      left = code == 0 ? true : bins.thresholds[code - 1] < n.threshold;
    }
    i = left ? n.left : n.right;
  }
  return tree.nodes[i].leaf_value;
}

double MeanSquaredError(std::span<const double> pred,
                        std::span<const double> y) {
  double s = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const double d = pred[i] - y[i];
    s += d * d;
  }
  return s / static_cast<double>(y.size());
}

}  // namespace

SplitCandidate FindBestSplit(const BinnedMatrix& binned,
                             std::span<const std::size_t> rows,
                             std::span<const double> gradients,
                             std::span<const int> features,
                             double min_child_cover, double l2,
                             Execution exec) {
  double g = 0.0;
  for (std::size_t r : rows) g += gradients[r];
  const double parent_score = Score(g, static_cast<double>(rows.size()), l2);

  const int n = static_cast<int>(features.size());
  std::vector<SplitCandidate> per_feature(features.size());
#pragma omp parallel for schedule(dynamic) if (IsParallel(exec) && n > 1)
  for (int k = 0; k < n; ++k) {
    const auto hist = BuildHistogram(binned, features[k], rows, gradients);
    per_feature[k] =
        BestSplitForFeature(features[k], hist, min_child_cover, l2, parent_score);
  }
  // `features` is ascending, so a strict comparison keeps the lowest index.
  SplitCandidate best;
  for (const SplitCandidate& c : per_feature) {
    if (c.valid() && c.gain > best.gain) best = c;
  }
  return best;
}

Ensemble Fit(const FeatureMatrix& x, std::span<const double> y,
             const Hyperparameters& hp, Execution exec, FitTrace* trace) {
  hp.Validate();
  if (x.rows() == 0 || y.empty()) {
    throw InvalidInputError("cannot fit on empty input");
  }
  if (x.rows() != y.size()) {
    throw InvalidInputError("feature rows (" + std::to_string(x.rows()) +
                            ") and target length (" + std::to_string(y.size()) +
                            ") differ");
  }
  if (y.size() < 2) throw InvalidInputError("need at least two rows to fit");
  if (x.cols() == 0) throw InvalidInputError("need at least one feature");
  for (double v : y) {
    if (!std::isfinite(v)) throw InvalidInputError("target has non-finite values");
  }

  Ensemble model;
  model.feature_names = x.names();
  model.learning_rate = hp.learning_rate;
  model.hyperparameters = hp;
  const std::size_t n = y.size();
  double sum = 0.0;
  for (double v : y) sum += v;
  model.base_score = sum / static_cast<double>(n);

  const BinnedMatrix binned = Quantize(x, hp.n_histogram_bins);
  std::vector<double> pred(n, model.base_score);
  std::vector<double> grad(n);
  if (trace) trace->training_mse = {MeanSquaredError(pred, y)};

  Rng rng(hp.seed);
  const std::size_t n_features = x.cols();
  const std::size_t row_count = std::max<std::size_t>(
      2, static_cast<std::size_t>(std::floor(hp.subsample_rows * n)));
  const std::size_t feature_count = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::llround(hp.subsample_features * n_features)));

  for (int t = 0; t < hp.n_trees; ++t) {
    std::vector<std::size_t> rows;
    if (row_count >= n) {
      rows.resize(n);
      std::iota(rows.begin(), rows.end(), std::size_t{0});
    } else {
      rows = rng.SampleWithoutReplacement(n, row_count);
    }
    std::vector<int> features;
    if (feature_count >= n_features) {
      features.resize(n_features);
      std::iota(features.begin(), features.end(), 0);
    } else {
      for (std::size_t f : rng.SampleWithoutReplacement(n_features, feature_count)) {
        features.push_back(static_cast<int>(f));
      }
    }
    for (std::size_t i = 0; i < n; ++i) grad[i] = pred[i] - y[i];

    RegressionTree tree =
        GrowTree(binned, std::move(rows), grad, features, hp, exec);
    if (tree.nodes.size() == 1) break;

    const long long nn = static_cast<long long>(n);
#pragma omp parallel for schedule(static) if (IsParallel(exec))
    for (long long i = 0; i < nn; ++i) {
      pred[i] += RoutedLeafValue(tree, binned, static_cast<std::size_t>(i));
    }
    model.trees.push_back(std::move(tree));
    if (trace) trace->training_mse.push_back(MeanSquaredError(pred, y));
  }
  return model;
}

}  // namespace gridxai::gbt

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

#include "gridxai/gbt/model_io.h"

#include "gridxai/common/csv.h"
#include "gridxai/common/error.h"

namespace gridxai::gbt {

using nlohmann::json;

json HyperparametersToJson(const Hyperparameters& hp) {
  return json{{"n_trees", hp.n_trees},
              {"max_depth", hp.max_depth},
              {"learning_rate", hp.learning_rate},
              {"min_child_cover", hp.min_child_cover},
              {"subsample_rows", hp.subsample_rows},
              {"subsample_features", hp.subsample_features},
              {"n_histogram_bins", hp.n_histogram_bins},
              {"l2_leaf_penalty", hp.l2_leaf_penalty},
              {"seed", hp.seed}};
}

Hyperparameters HyperparametersFromJson(const json& j) {
  if (!j.is_object()) throw ConfigError("hyperparameters must be an object");
  Hyperparameters hp;
  try {
    hp.n_trees = j.value("n_trees", hp.n_trees);
    hp.max_depth = j.value("max_depth", hp.max_depth);
    hp.learning_rate = j.value("learning_rate", hp.learning_rate);
    hp.min_child_cover = j.value("min_child_cover", hp.min_child_cover);
    hp.subsample_rows = j.value("subsample_rows", hp.subsample_rows);
    hp.subsample_features = j.value("subsample_features", hp.subsample_features);
    hp.n_histogram_bins = j.value("n_histogram_bins", hp.n_histogram_bins);
    hp.l2_leaf_penalty = j.value("l2_leaf_penalty", hp.l2_leaf_penalty);
    hp.seed = j.value("seed", hp.seed);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad hyperparameters: ") + e.what());
  }
  hp.Validate();
  return hp;
}

json ModelToJson(const Ensemble& model) {
  json trees = json::array();
  for (const RegressionTree& tree : model.trees) {
    json nodes = json::array();
    for (const TreeNode& n : tree.nodes) {
      if (n.is_leaf()) {
        nodes.push_back({{"leaf_value", n.leaf_value}, {"cover", n.cover}});
      } else {
        nodes.push_back(
            {{"split_feature", n.split_feature},
             {"threshold", n.threshold},
             {"left", n.left},
             {"right", n.right},
             {"default_branch",
              n.default_branch == Branch::kLeft ? "left" : "right"},
             {"cover", n.cover}});
      }
    }
    trees.push_back({{"nodes", std::move(nodes)}});
  }
  return json{{"format_version", kModelFormatVersion},
              {"feature_names", model.feature_names},
              {"base_score", model.base_score},
              {"learning_rate", model.learning_rate},
              {"hyperparameters", HyperparametersToJson(model.hyperparameters)},
              {"seed", model.hyperparameters.seed},
              {"trees", std::move(trees)}};
}

Ensemble ModelFromJson(const json& j) {
  Ensemble model;
  try {
    if (j.at("format_version").get<std::string>() != kModelFormatVersion) {
      throw ParseError("unsupported model format_version");
    }
    model.feature_names = j.at("feature_names").get<std::vector<std::string>>();
    model.base_score = j.at("base_score").get<double>();
    model.learning_rate = j.value("learning_rate", 1.0);
    if (j.contains("hyperparameters")) {
      model.hyperparameters = HyperparametersFromJson(j.at("hyperparameters"));
    }
    for (const json& jt : j.at("trees")) {
      RegressionTree tree;
      for (const json& jn : jt.at("nodes")) {
        TreeNode n;
        n.cover = jn.at("cover").get<double>();
        if (jn.contains("split_feature") && !jn.at("split_feature").is_null()) {
          n.split_feature = jn.at("split_feature").get<int>();
          n.threshold = jn.at("threshold").get<double>();
          n.left = jn.at("left").get<int>();
          n.right = jn.at("right").get<int>();
          const std::string dir = jn.value("default_branch", "left");
          if (dir != "left" && dir != "right") {
            throw ParseError("default_branch must be 'left' or 'right'");
          }
          n.default_branch = dir == "left" ? Branch::kLeft : Branch::kRight;
        } else {
          n.leaf_value = jn.at("leaf_value").get<double>();
        }
        tree.nodes.push_back(n);
      }
      model.trees.push_back(std::move(tree));
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed model JSON: ") + e.what());
  }
  model.Validate();
  return model;
}

std::string SerializeModel(const Ensemble& model) {
  return ModelToJson(model).dump(1) + "\n";
}

Ensemble DeserializeModel(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("model is not valid JSON: ") + e.what(),
                     static_cast<long long>(e.byte));
  }
  return ModelFromJson(j);
}

void SaveModel(const Ensemble& model, const std::filesystem::path& path) {
  WriteFileAtomic(path, SerializeModel(model));
}

Ensemble LoadModel(const std::filesystem::path& path) {
  return DeserializeModel(ReadFile(path));
}

}  // namespace gridxai::gbt

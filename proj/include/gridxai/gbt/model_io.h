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

#ifndef GRIDXAI_GBT_MODEL_IO_H_
#define GRIDXAI_GBT_MODEL_IO_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "gridxai/gbt/hyperparameters.h"
#include "gridxai/gbt/tree.h"
#include "json.hpp"

namespace gridxai::gbt {

inline constexpr std::string_view kModelFormatVersion = "1";

nlohmann::json HyperparametersToJson(const Hyperparameters& hp);
// Missing keys keep their defaults; the result is validated.
Hyperparameters HyperparametersFromJson(const nlohmann::json& j);

// {feature_names, base_score, learning_rate, trees:[{nodes:[...]}],
//  hyperparameters, seed, format_version:"1"}. Doubles are written in their
// shortest round-trip decimal form, so reading back is value-exact.
nlohmann::json ModelToJson(const Ensemble& model);
Ensemble ModelFromJson(const nlohmann::json& j);

std::string SerializeModel(const Ensemble& model);
Ensemble DeserializeModel(std::string_view text);

void SaveModel(const Ensemble& model, const std::filesystem::path& path);
Ensemble LoadModel(const std::filesystem::path& path);

}  // namespace gridxai::gbt

#endif  // GRIDXAI_GBT_MODEL_IO_H_

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

#include "gridxai/eval/rfe.h"

#include "gridxai/common/csv.h"
#include "gridxai/common/error.h"
#include "json.hpp"

namespace gridxai::eval {
namespace {

nlohmann::json StepToJson(const RfeStep& s) {
  nlohmann::json j{{"n_features", s.active.size()},
                   {"active", s.active},
                   {"fold_r2", s.fold_r2},
                   {"mean_r2", s.mean_r2},
                   {"importance", s.importance}};
  j["eliminated"] = s.eliminated.empty() ? nlohmann::json(nullptr)
                                         : nlohmann::json(s.eliminated);
  return j;
}

RfeStep StepFromJson(const nlohmann::json& j) {
  RfeStep s;
  s.active = j.at("active").get<std::vector<std::string>>();
  s.fold_r2 = j.at("fold_r2").get<std::vector<double>>();
  s.mean_r2 = j.at("mean_r2").get<double>();
  s.importance = j.at("importance").get<std::vector<double>>();
  if (!j.at("eliminated").is_null()) s.eliminated = j.at("eliminated").get<std::string>();
  return s;
}

RfeStep Evaluate(const FeatureMatrix& x, std::span<const double> y,
                 const std::vector<std::string>& active,
                 const gbt::Hyperparameters& hp, const CvConfig& cv) {
  const FeatureMatrix sub = x.Select(active);
  const CvResult result = CrossValidate(sub, y, hp, cv, /*with_importance=*/true);
  RfeStep step;
  step.active = active;
  step.fold_r2 = result.fold_r2;
  step.mean_r2 = result.mean_r2;
  step.importance = shap::AverageImportance(result.fold_importance).values;
  return step;
}

}  // namespace

const RfeStep* RfeTrace::WithFeatureCount(std::size_t n) const {
  for (const auto& s : steps) {
    if (s.active.size() == n) return &s;
  }
  if (final_step.active.size() == n) return &final_step;
  return nullptr;
}

RfeTrace RecursiveFeatureElimination(const FeatureMatrix& x,
                                     std::span<const double> y,
                                     const gbt::Hyperparameters& hp,
                                     const CvConfig& cv) {
  if (x.cols() < 2) {
    throw InvalidInputError("feature elimination needs at least two features");
  }
  RfeTrace trace;
  std::vector<std::string> active = x.names();
  while (active.size() > 1) {
    RfeStep step = Evaluate(x, y, active, hp, cv);
    std::size_t drop = 0;
    for (std::size_t j = 1; j < step.importance.size(); ++j) {
      if (step.importance[j] <= step.importance[drop]) drop = j;
    }
    step.eliminated = active[drop];
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(drop));
    trace.steps.push_back(std::move(step));
  }
  trace.final_step = Evaluate(x, y, active, hp, cv);
  return trace;
}

std::string RfeTraceJsonLines(const RfeTrace& trace) {
  std::string out;
  for (const auto& s : trace.steps) out += StepToJson(s).dump() + "\n";
  out += StepToJson(trace.final_step).dump() + "\n";
  return out;
}

RfeTrace RfeTraceFromJsonLines(std::string_view text) {
  RfeTrace trace;
  std::vector<RfeStep> all;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string line = Trim(text.substr(pos, end - pos));
    pos = end + 1;
    if (line.empty()) continue;
    try {
      all.push_back(StepFromJson(nlohmann::json::parse(line)));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("invalid RFE trace line: ") + e.what());
    }
  }
  if (all.empty()) throw ParseError("empty RFE trace");
  trace.final_step = std::move(all.back());
  all.pop_back();
  trace.steps = std::move(all);
  return trace;
}

std::string RfeSummaryCsv(const RfeTrace& trace) {
  const std::size_t k = trace.final_step.fold_r2.size();
  std::string out = "n_features,mean_r2";
  for (std::size_t f = 0; f < k; ++f) out += ",fold_" + std::to_string(f + 1);
  out += "\n";
  auto row = [&](const RfeStep& s) {
    out += std::to_string(s.active.size()) + "," + FormatDouble(s.mean_r2);
    for (double r : s.fold_r2) out += "," + FormatDouble(r);
    out += "\n";
  };
  for (const auto& s : trace.steps) row(s);
  row(trace.final_step);
  return out;
}

}  // namespace gridxai::eval

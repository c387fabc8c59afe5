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

// Serial versus OpenMP-parallel kernels: prediction, TreeSHAP, interaction
// values and histogram split search.

#include <numeric>
#include <vector>

#include <benchmark/benchmark.h>

#include "gridxai/eval/synthetic.h"
#include "gridxai/gbt/binning.h"
#include "gridxai/gbt/predict.h"
#include "gridxai/gbt/trainer.h"
#include "gridxai/shap/interaction.h"
#include "gridxai/shap/tree_shap.h"

namespace gridxai {
namespace {

struct Fixture {
  eval::SyntheticData data;
  gbt::Ensemble model;
  gbt::BinnedMatrix binned;
  std::vector<double> gradients;
  std::vector<std::size_t> rows;
  std::vector<int> features;
};

const Fixture& Shared() {
  static const Fixture f = [] {
    Fixture out;
    out.data = eval::GenerateStudy({.n_days = 120, .seed = 1, .n_noise_features = 6});
    gbt::Hyperparameters hp;
    hp.n_trees = 200;
    hp.max_depth = 6;
    out.model = gbt::Fit(out.data.x, out.data.y, hp);
    out.binned = gbt::Quantize(out.data.x, 256);
    const double mean = std::accumulate(out.data.y.begin(), out.data.y.end(), 0.0) /
                        static_cast<double>(out.data.y.size());
    for (double y : out.data.y) out.gradients.push_back(mean - y);
    out.rows.resize(out.data.x.rows());
    std::iota(out.rows.begin(), out.rows.end(), 0);
    out.features.resize(out.data.x.cols());
    std::iota(out.features.begin(), out.features.end(), 0);
    return out;
  }();
  return f;
}

Execution ExecOf(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::kSerial : Execution::kParallel;
}

void BM_Predict(benchmark::State& state) {
  const auto& f = Shared();
  for (auto _ : state) {
    benchmark::DoNotOptimize(gbt::Predict(f.model, f.data.x, ExecOf(state)));
  }
}
BENCHMARK(BM_Predict)->Arg(0)->Arg(1)->ArgName("parallel");

void BM_TreeShap(benchmark::State& state) {
  const auto& f = Shared();
  for (auto _ : state) {
    benchmark::DoNotOptimize(shap::TreeShap(f.model, f.data.x, ExecOf(state)));
  }
}
BENCHMARK(BM_TreeShap)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

void BM_Interactions(benchmark::State& state) {
  const auto& f = Shared();
  const std::vector<std::size_t> take(f.rows.begin(), f.rows.begin() + 240);
  const auto x = f.data.x.TakeRows(take);
  for (auto _ : state) {
    benchmark::DoNotOptimize(shap::InteractionValues(f.model, x, ExecOf(state)));
  }
}
BENCHMARK(BM_Interactions)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

void BM_FindBestSplit(benchmark::State& state) {
  const auto& f = Shared();
  for (auto _ : state) {
    benchmark::DoNotOptimize(gbt::FindBestSplit(f.binned, f.rows, f.gradients, f.features,
                                                1.0, 1.0, ExecOf(state)));
  }
}
BENCHMARK(BM_FindBestSplit)->Arg(0)->Arg(1)->ArgName("parallel");

}  // namespace
}  // namespace gridxai

BENCHMARK_MAIN();

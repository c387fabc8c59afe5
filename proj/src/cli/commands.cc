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

#include "gridxai/cli/commands.h"

#include <cstdlib>
#include <filesystem>

#include "gridxai/cli/report.h"
#include "gridxai/common/csv.h"
#include "gridxai/common/error.h"
#include "gridxai/common/sha256.h"
#include "gridxai/dataset/assemble.h"
#include "gridxai/dataset/dataset_io.h"
#include "gridxai/dataset/features.h"
#include "gridxai/dataset/pipeline.h"
#include "gridxai/eval/metrics.h"
#include "gridxai/eval/rfe.h"
#include "gridxai/eval/synthetic.h"
#include "gridxai/gbt/model_io.h"
#include "gridxai/gbt/predict.h"
#include "gridxai/gbt/trainer.h"
#include "gridxai/ingest/areas.h"
#include "gridxai/ingest/client.h"
#include "gridxai/ingest/snapshot.h"
#include "gridxai/shap/dependence.h"
#include "gridxai/shap/export.h"
#include "gridxai/shap/interaction.h"
#include "gridxai/shap/tree_shap.h"

namespace gridxai::cli {
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr const char* kModelFile = "model.json";

void Prepare(const RunConfig& c) {
  fs::create_directories(c.out);
  WriteFileAtomic(c.out / "config.json", ConfigToJson(c).dump(2) + "\n");
}

void WriteJson(const fs::path& path, const json& j) {
  WriteFileAtomic(path, j.dump(2) + "\n");
}

dataset::Dataset RequireDataset(const RunConfig& c) {
  const fs::path path = c.DatasetPath();
  if (!fs::exists(path)) {
    throw Error(ErrorKind::kMissingArtifact,
                "dataset " + path.string() + " not found; run `gridxai build` first");
  }
  return dataset::LoadDataset(path);
}

gbt::Ensemble RequireModel(const RunConfig& c) {
  const fs::path path = c.out / kModelFile;
  if (!fs::exists(path)) {
    throw Error(ErrorKind::kMissingArtifact,
                "model " + path.string() + " not found; run `gridxai train` first");
  }
  return gbt::LoadModel(path);
}

// Dataset columns in model order.
FeatureMatrix ModelColumns(const dataset::Dataset& d, const gbt::Ensemble& model) {
  return d.x.Select(model.feature_names);
}

std::string SafeFileName(const std::string& name) {
  std::string out;
  for (char ch : name) {
    out += (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '-') ? ch : '_';
  }
  return out;
}

}  // namespace

int ExitCodeFor(const std::exception& e) {
  const auto* err = dynamic_cast<const Error*>(&e);
  if (err == nullptr) return kExitRuntime;
  switch (err->kind()) {
    case ErrorKind::kConfig:
    case ErrorKind::kAuth:
      return kExitConfig;
    case ErrorKind::kInvalidInput:
    case ErrorKind::kSchemaMismatch:
    case ErrorKind::kModelIntegrity:
    case ErrorKind::kCapacity:
    case ErrorKind::kUndefinedScore:
    case ErrorKind::kParse:
    case ErrorKind::kMissingArtifact:
      return kExitData;
    case ErrorKind::kRateLimit:
    case ErrorKind::kNetwork:
    case ErrorKind::kIo:
      return kExitRuntime;
  }
  return kExitRuntime;
}

void RunIngest(const RunConfig& c, std::ostream& log,
               std::unique_ptr<ingest::Transport> transport) {
  ingest::ClientOptions options;
  options.max_attempts = c.ingest.max_attempts;
  options.requests_per_second = c.ingest.requests_per_second;
  options.burst = c.ingest.burst;
  if (c.fixtures) {
    if (!fs::is_directory(*c.fixtures)) {
      throw ConfigError("fixtures directory " + c.fixtures->string() + " does not exist");
    }
    options.mode = ingest::FetchMode::kFixture;
    options.fixtures_dir = *c.fixtures;
  } else if (c.offline) {
    if (!c.ingest.cache_dir) {
      throw ConfigError("--offline needs --fixtures <dir> or an ingest.cache_dir");
    }
    options.mode = ingest::FetchMode::kOffline;
    options.cache_dir = *c.ingest.cache_dir;
  } else {
    options.mode = ingest::FetchMode::kLive;
    options.cache_dir = c.ingest.cache_dir.value_or(c.out / "cache");
    if (const char* token = std::getenv(ingest::kTokenEnvVar)) options.token = token;
  }
  Prepare(c);
  ingest::EntsoeClient client(std::move(options), std::move(transport));
  ingest::SnapshotSpec spec;
  spec.window = c.window;
  spec.requests = ingest::StudyRequests(c.window);
  if (c.redispatch_csv) {
    spec.redispatch_csv = *c.redispatch_csv;
  } else if (c.fixtures && fs::exists(*c.fixtures / "redispatch.csv")) {
    spec.redispatch_csv = *c.fixtures / "redispatch.csv";
  }
  const fs::path bundle = c.BundleDir();
  const ingest::Manifest m = ingest::Snapshot(client, spec, bundle);
  log << "ingest: " << m.series.size() << " series, " << m.gaps.size()
      << " gaps, bundle " << bundle.string() << " (" << m.content_hash << ")\n";
  for (const auto& g : m.gaps) log << "  gap " << g.name << ": " << g.error << "\n";
  if (m.interventions) {
    log << "  interventions: " << m.interventions->records << " records, "
        << m.interventions->rejects << " rejected rows\n";
  }
}

void RunBuild(const RunConfig& c, std::ostream& log) {
  const fs::path bundle = c.BundleDir();
  const ingest::Manifest manifest = ingest::LoadManifest(bundle);
  TimeWindow window{std::max(c.window.start, manifest.window.start),
                    std::min(c.window.end, manifest.window.end)};
  if (!(window.end > window.start)) {
    throw InvalidInputError("config window does not overlap the bundle window");
  }
  Prepare(c);
  const auto series = ingest::LoadBundleSeries(bundle);
  const FeatureMatrix base = dataset::BaseFeatures(series, window);
  const FeatureMatrix engineered = dataset::EngineerFeatures(base);
  const FeatureMatrix selected = dataset::SelectFeatureSet(
      engineered, c.feature_set, c.include_features, c.exclude_features);

  const auto records = ingest::LoadBundleInterventions(bundle);
  const auto filtered = dataset::FilterRecords(records);
  const auto completed = dataset::CompleteCrossBorder(filtered);
  const dataset::HourlyTarget target = dataset::HourlyVolume(completed, window);

  dataset::AssembleOptions options;
  options.max_gap_hours = c.max_gap_hours;
  const dataset::Dataset d = dataset::Assemble(target, selected, options);
  const fs::path out = c.DatasetPath();
  if (out.has_parent_path()) fs::create_directories(out.parent_path());
  dataset::SaveDataset(d, out);

  double total = 0.0;
  for (double v : target.volume_mwh) total += v;
  WriteJson(c.out / "build_report.json",
            {{"records", records.size()},
             {"records_after_filter", filtered.size()},
             {"mirror_records_added", completed.size() - filtered.size()},
             {"target_hours", target.hours.size()},
             {"target_volume_mwh", total},
             {"rows", d.x.rows()},
             {"features", d.x.names()},
             {"dataset_sha256", Sha256File(out)},
             {"bundle_content_hash", manifest.content_hash}});
  log << "build: " << d.x.rows() << " rows x " << d.x.cols() << " features ("
      << d.provenance.dropped_rows << " dropped) -> " << out.string() << "\n";
}

void RunSynth(const RunConfig& c, std::ostream& log) {
  Prepare(c);
  eval::StudyGeneratorOptions options;
  options.n_days = c.synthetic.n_days;
  options.n_noise_features = c.synthetic.n_noise_features;
  options.seed = c.seed;
  options.start = FloorHour(c.window.start);
  eval::SyntheticData data = eval::GenerateStudy(options);
  dataset::Dataset d;
  d.x = std::move(data.x);
  d.y = std::move(data.y);
  d.provenance.target_hours = d.y.size();
  d.provenance.feature_hours = d.x.rows();
  d.provenance.joined_rows = d.x.rows();
  d.provenance.kept_rows = d.x.rows();
  d.provenance.max_gap_hours = c.max_gap_hours;
  d.provenance.feature_set = std::string(FeatureSetName(d.x.feature_set()));
  d.provenance.first_hour = FormatIso(d.x.hours().front());
  d.provenance.last_hour = FormatIso(d.x.hours().back());
  for (const auto& name : d.x.names()) {
    d.provenance.missing_per_column[name] = 0;
    d.provenance.interpolated_per_column[name] = 0;
  }
  const fs::path out = c.DatasetPath();
  if (out.has_parent_path()) fs::create_directories(out.parent_path());
  dataset::SaveDataset(d, out);
  log << "synth: " << d.x.rows() << " rows x " << d.x.cols() << " features -> "
      << out.string() << "\n";
}

void RunTrain(const RunConfig& c, std::ostream& log) {
  const dataset::Dataset d = RequireDataset(c);
  Prepare(c);
  gbt::Hyperparameters hp = c.hyperparameters;
  eval::CvResult cv;
  if (c.hpo.enabled) {
    const eval::SearchResult search = eval::RandomSearch(
        d.x, d.y, c.hpo.space, hp, c.hpo.n_trials, c.seed, c.cv);
    WriteFileAtomic(c.out / "trial_log.jsonl", eval::TrialLogJsonLines(search));
    hp = search.best().hp;
    cv.fold_r2 = search.best().fold_r2;
    cv.mean_r2 = search.best().mean_r2;
    WriteJson(c.out / "best_hyperparameters.json", gbt::HyperparametersToJson(hp));
    log << "train: best of " << c.hpo.n_trials << " trials is #" << search.best_trial
        << "\n";
  } else {
    cv = eval::CrossValidate(d.x, d.y, hp, c.cv);
  }
  const gbt::Ensemble model = gbt::Fit(d.x, d.y, hp);
  gbt::SaveModel(model, c.out / kModelFile);
  const std::vector<double> fitted = gbt::Predict(model, d.x);
  WriteJson(c.out / "cv_report.json",
            {{"features", d.x.names()},
             {"rows", d.x.rows()},
             {"hyperparameters", gbt::HyperparametersToJson(hp)},
             {"cv", eval::CvConfigToJson(c.cv)},
             {"fold_r2", cv.fold_r2},
             {"mean_r2", cv.mean_r2},
             // In-sample score of the model refit on all rows; optimistic.
             {"retrained_in_sample_r2", eval::R2(d.y, fitted)},
             {"trees", model.trees.size()}});
  log << "train: mean CV R2 " << FormatDouble(cv.mean_r2) << " over "
      << cv.fold_r2.size() << " folds, " << model.trees.size() << " trees\n";
}

void RunRfe(const RunConfig& c, std::ostream& log) {
  const dataset::Dataset d = RequireDataset(c);
  Prepare(c);
  const eval::RfeTrace trace =
      eval::RecursiveFeatureElimination(d.x, d.y, c.hyperparameters, c.cv);
  WriteFileAtomic(c.out / "rfe_trace.jsonl", eval::RfeTraceJsonLines(trace));
  WriteFileAtomic(c.out / "rfe_summary.csv", eval::RfeSummaryCsv(trace));
  log << "rfe: " << trace.steps.size() << " eliminations; last feature "
      << trace.final_step.active.front() << "\n";
}

void RunExplain(const RunConfig& c, std::ostream& log) {
  const gbt::Ensemble model = RequireModel(c);
  const dataset::Dataset d = RequireDataset(c);
  Prepare(c);
  const FeatureMatrix x = ModelColumns(d, model);
  const shap::ShapResult values = shap::TreeShap(model, x);
  WriteFileAtomic(c.out / "shap_values.csv", shap::AttributionsCsv(values));
  const shap::FeatureImportance fi = shap::ComputeFeatureImportance(values);
  WriteFileAtomic(c.out / "importance.csv", shap::ImportanceCsv(fi));
  if (c.explain.interactions) {
    WriteFileAtomic(c.out / "shap_interactions.csv",
                    shap::InteractionsCsv(shap::InteractionValues(model, x)));
  }
  log << "explain: " << values.n_samples << " samples; most important feature "
      << fi.feature_names[fi.ArgMax()] << "\n";
}

void RunReport(const RunConfig& c, std::ostream& log) {
  const gbt::Ensemble model = RequireModel(c);
  const dataset::Dataset d = RequireDataset(c);
  Prepare(c);
  const fs::path dir = c.out / "report";
  fs::create_directories(dir / "dependence");
  fs::create_directories(dir / "interactions");

  const FeatureMatrix x = ModelColumns(d, model);
  const shap::ShapResult values = shap::TreeShap(model, x);
  const shap::FeatureImportance fi = shap::ComputeFeatureImportance(values);
  WriteFileAtomic(dir / "importance.csv", shap::ImportanceCsv(fi));

  std::optional<shap::InteractionResult> inter;
  if (c.explain.interactions) inter = shap::InteractionValues(model, x);
  const std::string& wind = c.report.wind_feature;
  const bool has_wind = x.Find(wind).has_value();

  for (const auto& f : model.feature_names) {
    std::optional<std::string> color;
    if (!inter) color = has_wind && f != wind ? wind : f;
    const auto table =
        shap::DependenceData(values, x, f, color, inter ? &*inter : nullptr);
    WriteFileAtomic(dir / "dependence" / (SafeFileName(f) + ".csv"),
                    shap::DependenceCsv(table));
  }

  json grids = json::array();
  if (has_wind) {
    const std::size_t w = x.IndexOf(wind);
    if (inter) {
      for (std::size_t k = 0; k < x.cols(); ++k) {
        if (k == w) continue;
        const std::string& other = model.feature_names[k];
        std::string csv = "timestamp," + wind + "," + other + ",interaction\n";
        for (std::size_t s = 0; s < x.rows(); ++s) {
          csv += FormatIso(x.hours()[s]) + "," + FormatDouble(x.at(s, w)) + "," +
                 FormatDouble(x.at(s, k)) + "," + FormatDouble(inter->at(s, w, k)) + "\n";
        }
        WriteFileAtomic(dir / "interactions" /
                            (SafeFileName(wind) + "__" + SafeFileName(other) + ".csv"),
                        csv);
      }
    }
    for (const auto& f : x.names()) {
      if (!f.starts_with("flow_")) continue;
      const auto wx = x.column(wind);
      const auto fy = x.column(f);
      const BinnedGrid grid =
          BinnedMeans(wx, fy, d.y, c.report.bins_x, c.report.bins_y);
      const std::string stem = SafeFileName(wind) + "__" + SafeFileName(f);
      WriteFileAtomic(dir / ("heatmap_" + stem + ".csv"), BinnedGridCsv(grid));
      const KdeGrid kde = GaussianKde2d(wx, fy, c.report.kde_grid);
      WriteFileAtomic(dir / ("kde_" + stem + ".csv"), KdeGridCsv(kde));
      grids.push_back({{"x", wind},
                       {"y", f},
                       {"bins", {c.report.bins_x, c.report.bins_y}},
                       {"kde_bandwidth", {kde.bandwidth_x, kde.bandwidth_y}}});
    }
  }
  WriteJson(dir / "metadata.json",
            {{"features", model.feature_names},
             {"samples", x.rows()},
             {"base_value", values.base_value},
             {"importance_normalizer_mwh", fi.normalizer},
             {"interactions", inter.has_value()},
             {"heatmap", {{"binning", "fixed-width"}, {"empty_bins", "blank"}}},
             {"kde",
              {{"kernel", "gaussian"},
               {"bandwidth_rule", "scott"},
               {"grid", c.report.kde_grid}}},
             {"grids", grids},
             {"model_sha256", Sha256File(c.out / kModelFile)},
             {"dataset_sha256", Sha256File(c.DatasetPath())}});
  log << "report: " << model.feature_names.size() << " dependence tables, "
      << grids.size() << " wind/flow grids -> " << dir.string() << "\n";
}

void RunAblate(const RunConfig& c, std::ostream& log) {
  if (c.ablations.empty()) throw ConfigError("no ablations configured");
  const dataset::Dataset d = RequireDataset(c);
  Prepare(c);
  json reports = json::array();
  for (const auto& a : c.ablations) {
    const eval::AblationReport r =
        eval::ProxyAblation(d.x, d.y, a.feature, a.proxy, c.hyperparameters, c.cv);
    reports.push_back(eval::AblationReportToJson(r));
    log << "ablate: " << a.feature << " -> " << eval::ProxyKindName(a.proxy.kind)
        << ": R2 " << FormatDouble(r.original_mean_r2) << " -> "
        << FormatDouble(r.ablated_mean_r2) << "\n";
  }
  WriteJson(c.out / "ablations.json", reports);
}

}  // namespace gridxai::cli

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

#include "gridxai/eval/synthetic.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gridxai/common/error.h"
#include "gridxai/common/random.h"

namespace gridxai::eval {
namespace {

std::vector<UtcHour> ConsecutiveHours(UtcHour start, std::size_t n) {
  std::vector<UtcHour> hours(n);
  for (std::size_t i = 0; i < n; ++i) hours[i] = start + std::chrono::hours(i);
  return hours;
}

// Stationary AR(1) with the given marginal standard deviation.
std::vector<double> Ar1(Rng& rng, std::size_t n, double phi, double sd) {
  std::vector<double> v(n);
  const double innovation = sd * std::sqrt(1.0 - phi * phi);
  double state = rng.Normal(0.0, sd);
  for (std::size_t i = 0; i < n; ++i) {
    state = phi * state + rng.Normal(0.0, innovation);
    v[i] = state;
  }
  return v;
}

}  // namespace

SyntheticData GenerateLinear(std::size_t n_rows, std::uint64_t seed,
                             double noise_sd) {
  if (n_rows < 2) throw InvalidInputError("need at least two rows");
  Rng rng(seed);
  std::vector<double> x1(n_rows), x2(n_rows), y(n_rows);
  for (std::size_t i = 0; i < n_rows; ++i) {
    x1[i] = rng.Uniform(0.0, 10.0);
    x2[i] = rng.Uniform(0.0, 10.0);
    y[i] = 2.0 * x1[i] + rng.Normal(0.0, noise_sd);
  }
  SyntheticData d;
  d.x = FeatureMatrix(ConsecutiveHours(MakeUtcHour(2020, 1, 1), n_rows));
  d.x.AddColumn({"x1", "MW"}, std::move(x1));
  d.x.AddColumn({"x2", "MW"}, std::move(x2));
  d.y = std::move(y);
  return d;
}

std::vector<std::string> StudyInformativeFeatures() {
  return {"wind_north", "hydro_south", "flow_DK"};
}

SyntheticData GenerateStudy(const StudyGeneratorOptions& o) {
  if (o.n_days < 1) throw InvalidInputError("n_days must be positive");
  if (o.n_noise_features < 0) throw InvalidInputError("negative noise count");
  const std::size_t n = static_cast<std::size_t>(o.n_days) * 24;
  Rng rng(o.seed);
  const auto hours = ConsecutiveHours(o.start, n);
  constexpr double kTwoPi = 2.0 * std::numbers::pi;

  const std::vector<double> wind_state = Ar1(rng, n, 0.97, 5000.0);
  const std::vector<double> hydro_noise = Ar1(rng, n, 0.9, 80.0);
  const std::vector<double> dk_noise = Ar1(rng, n, 0.9, 400.0);
  const std::vector<double> fr_state = Ar1(rng, n, 0.95, 1500.0);
  const std::vector<double> load_noise = Ar1(rng, n, 0.8, 300.0);
  std::vector<double> cloud(static_cast<std::size_t>(o.n_days));
  for (auto& c : cloud) c = rng.Uniform(0.3, 1.0);
  const double hydro_phase = rng.Uniform(0.0, kTwoPi);

  std::vector<double> wind(n), hydro(n), dk(n), fr(n), solar(n), resid(n), y(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double hour = static_cast<double>(i % 24);
    const double day = static_cast<double>(i) / 24.0;
    wind[i] = std::max(0.0, 9000.0 + wind_state[i]);
    hydro[i] = 1050.0 + 350.0 * std::sin(kTwoPi * day / 25.0 + hydro_phase) +
               hydro_noise[i];
    dk[i] = 300.0 + 0.12 * (wind[i] - 9000.0) + dk_noise[i];
    fr[i] = fr_state[i];
    const double sun = std::max(0.0, std::sin(std::numbers::pi * (hour - 5.0) / 14.0));
    solar[i] = 25000.0 * sun * cloud[i / 24];
    resid[i] = 6500.0 + 1500.0 * std::sin(kTwoPi * (hour - 9.0) / 24.0) -
               0.1 * solar[i] + load_noise[i];
  }
  for (std::size_t i = 0; i < n; ++i) {
    const double v = o.wind_coef * wind[i] +
                     o.hydro_coef * std::max(0.0, o.hydro_threshold - hydro[i]) +
                     o.interaction_coef * (wind[i] / 1000.0) *
                         std::max(0.0, dk[i] / 1000.0) +
                     rng.Normal(0.0, o.noise_sd);
    y[i] = std::max(0.0, v);
  }

  SyntheticData d;
  d.x = FeatureMatrix(hours);
  d.x.AddColumn({"wind_north", "MW"}, std::move(wind));
  d.x.AddColumn({"hydro_south", "MW"}, std::move(hydro));
  d.x.AddColumn({"flow_DK", "MW"}, std::move(dk));
  d.x.AddColumn({"flow_FR", "MW"}, std::move(fr));
  d.x.AddColumn({"solar_DE", "MW"}, std::move(solar));
  d.x.AddColumn({"residual_load_transnet", "MW"}, std::move(resid));
  for (int k = 0; k < o.n_noise_features; ++k) {
    std::vector<double> noise(n);
    for (auto& v : noise) v = rng.Normal(0.0, 1000.0);
    d.x.AddColumn({"noise_" + std::to_string(k + 1), "MW"}, std::move(noise));
  }
  d.x.set_feature_set(o.n_noise_features == 0 ? FeatureSet::kReduced
                                              : FeatureSet::kBase);
  d.y = std::move(y);
  return d;
}

std::vector<dataset::InterventionRecord> GenerateInterventions(
    std::size_t n_records, std::uint64_t seed, const TimeWindow& window) {
  using dataset::Direction;
  using dataset::MeasureKind;
  using dataset::Reason;
  using std::chrono::minutes;
  const auto span_quarters =
      std::chrono::duration_cast<minutes>(window.end - window.start).count() / 15;
  if (span_quarters < 32) throw InvalidInputError("window too short");
  static const char* kGerman[] = {"50Hertz", "Amprion", "TenneT DE", "TransnetBW"};
  static const char* kForeign[] = {"APG", "TenneT NL", "Swissgrid", "PSE"};

  Rng rng(seed);
  std::vector<dataset::InterventionRecord> out;
  out.reserve(n_records);
  for (std::size_t i = 0; i < n_records; ++i) {
    dataset::InterventionRecord r;
    const auto quarters = rng.Integer(1, 32);
    const auto offset = rng.Integer(0, span_quarters - quarters);
    r.start = window.start + minutes(15 * offset);
    r.end = r.start + minutes(15 * quarters);
    r.direction = rng.Index(2) == 0 ? Direction::kIncrease : Direction::kDecrease;
    r.power_mw = static_cast<double>(rng.Integer(10, 5000)) / 10.0;
    const auto kind = rng.Index(20);
    r.kind = kind < 12   ? MeasureKind::kRedispatch
             : kind < 17 ? MeasureKind::kCountertrade
                         : MeasureKind::kGridReserve;
    r.cross_border = r.kind == MeasureKind::kCountertrade && rng.Index(2) == 0;
    const auto reason = rng.Index(20);
    r.reason = reason < 16 ? Reason::kCurrent
               : reason < 19 ? Reason::kVoltage
                             : Reason::kOther;
    const auto who = rng.Index(10);
    if (who == 0) {
      r.requesting_tsos = {kForeign[rng.Index(4)]};
    } else {
      r.requesting_tsos = {kGerman[rng.Index(4)]};
      if (who == 1) r.requesting_tsos.push_back(kForeign[rng.Index(4)]);
    }
    r.domestic_request = who != 0;
    if (r.kind != MeasureKind::kCountertrade) {
      r.plant_id = "PLANT-" + std::to_string(rng.Integer(1, 200));
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace gridxai::eval

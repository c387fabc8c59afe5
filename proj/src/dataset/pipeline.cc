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

#include "gridxai/dataset/pipeline.h"

#include <algorithm>
#include <map>
#include <tuple>

#include "gridxai/common/error.h"

namespace gridxai::dataset {
namespace {

using MirrorKey = std::tuple<std::int64_t, std::int64_t, double, Direction>;

MirrorKey KeyOf(const InterventionRecord& r) {
  return {r.start.time_since_epoch().count(), r.end.time_since_epoch().count(),
          r.power_mw, r.direction};
}

Direction Opposite(Direction d) {
  return d == Direction::kIncrease ? Direction::kDecrease : Direction::kIncrease;
}

bool NeedsMirror(const InterventionRecord& r) {
  return !r.synthetic && r.cross_border && r.kind == MeasureKind::kCountertrade;
}

}  // namespace

std::vector<InterventionRecord> FilterRecords(
    const std::vector<InterventionRecord>& records) {
  std::vector<InterventionRecord> out;
  for (const auto& r : records) {
    if (r.domestic_request && r.reason == Reason::kCurrent) out.push_back(r);
  }
  return out;
}

std::vector<InterventionRecord> CompleteCrossBorder(
    const std::vector<InterventionRecord>& records) {
  std::map<MirrorKey, int> available;
  for (const auto& r : records) {
    if (r.synthetic) ++available[KeyOf(r)];
  }
  std::vector<InterventionRecord> out = records;
  for (const auto& r : records) {
    if (!NeedsMirror(r)) continue;
    InterventionRecord mirror = r;
    mirror.direction = Opposite(r.direction);
    mirror.synthetic = true;
    mirror.plant_id.reset();
    auto it = available.find(KeyOf(mirror));
    if (it != available.end() && it->second > 0) {
      --it->second;
      continue;
    }
    out.push_back(std::move(mirror));
  }
  return out;
}

TimeWindow DefaultStudyWindow() {
  return {MakeUtc(2019, 5, 1), MakeUtc(2023, 2, 1)};
}

HourlyTarget HourlyVolume(const std::vector<InterventionRecord>& records,
                          const TimeWindow& window) {
  using std::chrono::hours;
  if (!IsHourAligned(window.start) || !IsHourAligned(window.end)) {
    throw InvalidInputError("target window must start and end on the hour");
  }
  if (!(window.end > window.start)) {
    throw InvalidInputError("target window is empty");
  }
  const UtcHour first = FloorHour(window.start);
  const auto n = static_cast<std::size_t>((FloorHour(window.end) - first).count());
  HourlyTarget target;
  target.hours.reserve(n);
  for (std::size_t i = 0; i < n; ++i) target.hours.push_back(first + hours(i));
  target.volume_mwh.assign(n, 0.0);

  for (const auto& r : records) {
    r.Validate();
    const UtcTime lo = std::max(r.start, window.start);
    const UtcTime hi = std::min(r.end, window.end);
    if (!(hi > lo)) continue;
    for (UtcHour h = FloorHour(lo); UtcTime(h) < hi; h += hours(1)) {
      const UtcTime a = std::max(lo, UtcTime(h));
      const UtcTime b = std::min(hi, UtcTime(h + hours(1)));
      const double overlap_h = static_cast<double>((b - a).count()) / 3600.0;
      const auto idx = static_cast<std::size_t>((h - first).count());
      target.volume_mwh[idx] += r.power_mw * overlap_h;
    }
  }
  return target;
}

}  // namespace gridxai::dataset

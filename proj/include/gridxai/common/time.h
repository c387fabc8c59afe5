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

#ifndef GRIDXAI_COMMON_TIME_H_
#define GRIDXAI_COMMON_TIME_H_

#include <chrono>
#include <string>
#include <string_view>
#include <vector>

namespace gridxai {

using UtcTime = std::chrono::sys_seconds;
using UtcHour = std::chrono::sys_time<std::chrono::hours>;
using LocalTime = std::chrono::local_seconds;

// Half-open [start, end) interval of UTC instants.
struct TimeWindow {
  UtcTime start;
  UtcTime end;
};

inline UtcHour FloorHour(UtcTime t) {
  return std::chrono::floor<std::chrono::hours>(t);
}
inline bool IsHourAligned(UtcTime t) { return FloorHour(t) == t; }

UtcTime MakeUtc(int year, unsigned month, unsigned day, int hour = 0,
                int minute = 0, int second = 0);
UtcHour MakeUtcHour(int year, unsigned month, unsigned day, int hour = 0);

// "2021-06-01T10:00:00Z".
std::string FormatIso(UtcTime t);
inline std::string FormatIso(UtcHour h) { return FormatIso(UtcTime(h)); }

// Accepts "YYYY-MM-DDTHH:MM[:SS]Z" and "YYYY-MM-DD HH:MM[:SS]" (taken as
// UTC). Throws ParseError.
UtcTime ParseIso(std::string_view text);

// Compact form used by the transparency platform query string: yyyyMMddHHmm.
std::string FormatCompactUtc(UtcTime t);

// Calendar day (UTC) containing `t`, as days since epoch.
std::chrono::sys_days UtcDay(UtcTime t);
inline std::chrono::sys_days UtcDay(UtcHour h) { return UtcDay(UtcTime(h)); }

// Hour of day [0, 24) and day of year [1, 366] in UTC.
int HourOfDay(UtcHour h);
int DayOfYear(UtcHour h);

// Central European civil time. Summer time runs from the last Sunday in March
// 01:00 UTC to the last Sunday in October 01:00 UTC.
UtcTime SummerTimeStart(int year);
UtcTime SummerTimeEnd(int year);
int BerlinUtcOffsetHours(UtcTime t);

// All UTC instants whose Berlin wall-clock reading equals `local`, earliest
// first. Two entries during the autumn fall-back hour, none inside the spring
// gap.
std::vector<UtcTime> BerlinLocalToUtcCandidates(LocalTime local);

// "DD.MM.YYYY HH:MM" (seconds optional) to a wall-clock reading.
LocalTime ParseGermanLocal(std::string_view text);

}  // namespace gridxai

#endif  // GRIDXAI_COMMON_TIME_H_

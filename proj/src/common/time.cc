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

#include "gridxai/common/time.h"

#include <charconv>
#include <cstdio>

#include "gridxai/common/error.h"

namespace gridxai {
namespace {

using namespace std::chrono;

bool ReadInt(std::string_view text, size_t pos, size_t len, int* out) {
  if (pos + len > text.size()) return false;
  const char* first = text.data() + pos;
  const char* last = first + len;
  auto [ptr, ec] = std::from_chars(first, last, *out);
  return ec == std::errc() && ptr == last;
}

UtcTime LastSundayAt(int y, unsigned m, int hour_utc) {
  const sys_days month_end{year{y} / month{m} / std::chrono::last};
  const weekday wd{month_end};
  const sys_days sunday = month_end - (wd - Sunday);
  return UtcTime(sunday) + hours(hour_utc);
}

UtcTime CheckedUtc(int y, int mo, int d, int h, int mi, int s,
                   std::string_view text) {
  const year_month_day ymd{year{y}, month{static_cast<unsigned>(mo)},
                           day{static_cast<unsigned>(d)}};
  if (!ymd.ok() || h < 0 || h > 23 || mi < 0 || mi > 59 || s < 0 || s > 59) {
    throw ParseError("invalid calendar timestamp '" + std::string(text) + "'");
  }
  return UtcTime(sys_days(ymd)) + hours(h) + minutes(mi) + seconds(s);
}

}  // namespace

UtcTime MakeUtc(int y, unsigned mo, unsigned d, int h, int mi, int s) {
  return UtcTime(sys_days(year{y} / month{mo} / day{d})) + hours(h) +
         minutes(mi) + seconds(s);
}

UtcHour MakeUtcHour(int y, unsigned mo, unsigned d, int h) {
  return floor<hours>(MakeUtc(y, mo, d, h));
}

std::string FormatIso(UtcTime t) {
  const sys_days day = floor<days>(t);
  const year_month_day ymd{day};
  const hh_mm_ss hms{t - day};
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02uT%02d:%02d:%02dZ",
                static_cast<int>(ymd.year()), static_cast<unsigned>(ymd.month()),
                static_cast<unsigned>(ymd.day()),
                static_cast<int>(hms.hours().count()),
                static_cast<int>(hms.minutes().count()),
                static_cast<int>(hms.seconds().count()));
  return buf;
}

std::string FormatCompactUtc(UtcTime t) {
  const std::string iso = FormatIso(t);
  // yyyy-mm-ddThh:mm:ssZ -> yyyymmddhhmm
  return iso.substr(0, 4) + iso.substr(5, 2) + iso.substr(8, 2) +
         iso.substr(11, 2) + iso.substr(14, 2);
}

UtcTime ParseIso(std::string_view text) {
  int y, mo, d, h, mi, s = 0;
  const bool date_ok = text.size() >= 16 && ReadInt(text, 0, 4, &y) &&
                       text[4] == '-' && ReadInt(text, 5, 2, &mo) &&
                       text[7] == '-' && ReadInt(text, 8, 2, &d) &&
                       (text[10] == 'T' || text[10] == ' ') &&
                       ReadInt(text, 11, 2, &h) && text[13] == ':' &&
                       ReadInt(text, 14, 2, &mi);
  if (!date_ok) {
    throw ParseError("unparseable UTC timestamp '" + std::string(text) + "'");
  }
  std::string_view rest = text.substr(16);
  if (rest.size() >= 3 && rest[0] == ':') {
    if (!ReadInt(rest, 1, 2, &s)) {
      throw ParseError("unparseable UTC timestamp '" + std::string(text) + "'");
    }
    rest = rest.substr(3);
  }
  if (!(rest.empty() || rest == "Z" || rest == "+00:00")) {
    throw ParseError("timestamp is not UTC: '" + std::string(text) + "'");
  }
  return CheckedUtc(y, mo, d, h, mi, s, text);
}

sys_days UtcDay(UtcTime t) { return floor<days>(t); }

int HourOfDay(UtcHour h) {
  return static_cast<int>((h - floor<days>(h)).count());
}

int DayOfYear(UtcHour h) {
  const sys_days day = floor<days>(h);
  const year_month_day ymd{day};
  const sys_days jan1{ymd.year() / January / 1};
  return static_cast<int>((day - jan1).count()) + 1;
}

UtcTime SummerTimeStart(int y) { return LastSundayAt(y, 3, 1); }
UtcTime SummerTimeEnd(int y) { return LastSundayAt(y, 10, 1); }

int BerlinUtcOffsetHours(UtcTime t) {
  const int y = static_cast<int>(year_month_day{floor<days>(t)}.year());
  return (t >= SummerTimeStart(y) && t < SummerTimeEnd(y)) ? 2 : 1;
}

std::vector<UtcTime> BerlinLocalToUtcCandidates(LocalTime local) {
  std::vector<UtcTime> out;
  for (int offset : {2, 1}) {
    const UtcTime candidate = UtcTime(local.time_since_epoch()) - hours(offset);
    if (BerlinUtcOffsetHours(candidate) == offset) out.push_back(candidate);
  }
  return out;
}

LocalTime ParseGermanLocal(std::string_view text) {
  // Trim surrounding blanks.
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) {
    text.remove_prefix(1);
  }
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' ||
                           text.back() == '\r')) {
    text.remove_suffix(1);
  }
  int d, mo, y, h, mi, s = 0;
  const bool ok = text.size() >= 16 && ReadInt(text, 0, 2, &d) &&
                  text[2] == '.' && ReadInt(text, 3, 2, &mo) &&
                  text[5] == '.' && ReadInt(text, 6, 4, &y) &&
                  text[10] == ' ' && ReadInt(text, 11, 2, &h) &&
                  text[13] == ':' && ReadInt(text, 14, 2, &mi) &&
                  (text.size() == 16 ||
                   (text.size() == 19 && text[16] == ':' &&
                    ReadInt(text, 17, 2, &s)));
  if (!ok) {
    throw ParseError("unparseable local timestamp '" + std::string(text) + "'");
  }
  const UtcTime as_utc = CheckedUtc(y, mo, d, h, mi, s, text);
  return LocalTime(as_utc.time_since_epoch());
}

}  // namespace gridxai

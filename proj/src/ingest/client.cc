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

#include "gridxai/ingest/client.h"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "gridxai/common/csv.h"
#include "gridxai/common/error.h"
#include "gridxai/common/sha256.h"
#include "gridxai/ingest/areas.h"
#include "gridxai/ingest/xml_document.h"

namespace gridxai::ingest {
namespace {

struct DocumentType {
  const char* document;
  const char* process;  // empty when not used
  const char* psr;      // empty when not used
};

DocumentType DocumentFor(Quantity q) {
  switch (q) {
    case Quantity::kLoadForecast:
      return {"A65", "A01", ""};
    case Quantity::kWindOnshoreForecast:
      return {"A69", "A01", "B19"};
    case Quantity::kWindOffshoreForecast:
      return {"A69", "A01", "B18"};
    case Quantity::kSolarForecast:
      return {"A69", "A01", "B16"};
    case Quantity::kRorHydroForecast:
      return {"A69", "A01", "B11"};
    case Quantity::kOtherGenerationForecast:
      return {"A71", "A01", ""};
    case Quantity::kScheduledExchange:
      return {"A09", "", ""};
    case Quantity::kDayAheadPrice:
      return {"A44", "", ""};
  }
  return {"", "", ""};
}

std::string NowIso() {
  return FormatIso(std::chrono::floor<std::chrono::seconds>(
      std::chrono::system_clock::now()));
}

}  // namespace

std::map<std::string, std::string> BuildQuery(const SeriesRequest& request,
                                              const TimeWindow& page,
                                              const std::string& token) {
  const DocumentType doc = DocumentFor(request.quantity);
  std::map<std::string, std::string> q;
  q["securityToken"] = token;
  q["documentType"] = doc.document;
  if (*doc.process) q["processType"] = doc.process;
  if (*doc.psr) q["psrType"] = doc.psr;
  q["periodStart"] = FormatCompactUtc(page.start);
  q["periodEnd"] = FormatCompactUtc(page.end);
  const std::string eic = FindArea(request.area).eic;
  switch (request.quantity) {
    case Quantity::kLoadForecast:
      q["outBiddingZone_Domain"] = eic;
      break;
    case Quantity::kScheduledExchange:
      q["out_Domain"] = eic;
      q["in_Domain"] = FindArea(request.counterparty.value()).eic;
      q["contract_MarketAgreement.Type"] = "A01";
      break;
    case Quantity::kDayAheadPrice:
      q["in_Domain"] = eic;
      q["out_Domain"] = eic;
      break;
    default:
      q["in_Domain"] = eic;
      break;
  }
  return q;
}

std::vector<TimeWindow> Paginate(const TimeWindow& interval) {
  using namespace std::chrono;
  std::vector<TimeWindow> pages;
  UtcTime start = interval.start;
  while (start < interval.end) {
    const auto day = floor<days>(start);
    const year_month_day ymd(day);
    const year_month_day next_ymd(ymd.year() + years(1), ymd.month(), ymd.day());
    sys_days next_day = next_ymd.ok() ? sys_days(next_ymd)
                                      : sys_days(next_ymd.year() / next_ymd.month() / last);
    UtcTime end = UtcTime(next_day) + (start - UtcTime(day));
    end = std::min(end, interval.end);
    pages.push_back({start, end});
    start = end;
  }
  return pages;
}

std::string CacheKey(const SeriesRequest& request, const TimeWindow& page) {
  SeriesRequest r = request;
  r.interval = page;
  return Sha256Hex(r.Canonical());
}

EntsoeClient::EntsoeClient(ClientOptions options,
                           std::unique_ptr<Transport> transport)
    : options_(std::move(options)), transport_(std::move(transport)) {
  if (options_.max_attempts < 1) throw ConfigError("max_attempts must be >= 1");
  if (options_.mode == FetchMode::kFixture && options_.fixtures_dir.empty()) {
    throw ConfigError("fixture mode needs a fixtures directory");
  }
  if (options_.mode == FetchMode::kLive) {
    limiter_ = std::make_unique<TokenBucket>(options_.requests_per_second,
                                             options_.burst, options_.clock);
    if (!transport_) transport_ = std::make_unique<HttpsTransport>();
  }
}

std::string EntsoeClient::Download(const SeriesRequest& request,
                                   const TimeWindow& page) {
  if (options_.token.empty()) {
    throw Error(ErrorKind::kAuth, std::string("no API token; set ") + kTokenEnvVar);
  }
  const auto query = BuildQuery(request, page, options_.token);
  double backoff = options_.backoff_initial_seconds;
  for (int attempt = 1;; ++attempt) {
    limiter_->Acquire();
    ++transport_calls_;
    const HttpResponse response = transport_->Get(query);
    if (response.status == 200) return response.body;
    if (response.status == 401 || response.status == 403) {
      throw Error(ErrorKind::kAuth, "API token rejected (HTTP " +
                                        std::to_string(response.status) + ")");
    }
    const bool retryable = response.status == 429 || response.status >= 500;
    if (!retryable) {
      // The platform reports "no data" as an acknowledgement with HTTP 400.
      if (response.body.find("Acknowledgement_MarketDocument") != std::string::npos) {
        return response.body;
      }
      throw Error(ErrorKind::kNetwork, "HTTP " + std::to_string(response.status) +
                                           " for " + request.Canonical());
    }
    if (attempt >= options_.max_attempts) {
      throw Error(response.status == 429 ? ErrorKind::kRateLimit : ErrorKind::kNetwork,
                  "giving up after " + std::to_string(attempt) +
                      " attempts (HTTP " + std::to_string(response.status) + ")");
    }
    const double wait = std::min(options_.backoff_max_seconds,
                                 response.retry_after_seconds.value_or(backoff));
    options_.clock.sleep(wait);
    backoff = std::min(options_.backoff_max_seconds, backoff * 2.0);
  }
}

std::string EntsoeClient::FetchPage(const SeriesRequest& request,
                                    const TimeWindow& page, Source& source) {
  if (options_.mode == FetchMode::kFixture) {
    const auto path = options_.fixtures_dir / request.FixtureName();
    if (!std::filesystem::exists(path)) {
      throw Error(ErrorKind::kMissingArtifact,
                  "fixture not found: " + path.string());
    }
    source = Source::kFixture;
    return ReadFile(path);
  }
  std::filesystem::path cached;
  if (!options_.cache_dir.empty()) {
    cached = options_.cache_dir / (CacheKey(request, page) + ".xml");
    if (std::filesystem::exists(cached)) {
      source = Source::kCache;
      return ReadFile(cached);
    }
  }
  if (options_.mode == FetchMode::kOffline) {
    throw Error(ErrorKind::kMissingArtifact,
                "offline and not cached: " + request.Canonical());
  }
  std::string body = Download(request, page);
  if (!cached.empty()) {
    std::filesystem::create_directories(options_.cache_dir);
    WriteFileAtomic(cached, body);
  }
  source = Source::kLive;
  return body;
}

RawSeries EntsoeClient::Fetch(const SeriesRequest& request) {
  request.Validate();
  RawSeries series;
  series.request = request;
  const std::vector<TimeWindow> pages =
      options_.mode == FetchMode::kFixture ? std::vector<TimeWindow>{request.interval}
                                           : Paginate(request.interval);
  bool all_cached = true;
  bool any_data = false;
  for (const auto& page : pages) {
    Source source = Source::kFixture;
    std::string body = FetchPage(request, page, source);
    all_cached = all_cached && source == Source::kCache;
    if (source == Source::kLive) series.fetched_at = NowIso();
    const MarketDocument doc = ParseMarketDocument(body);
    series.raw_documents.push_back(std::move(body));
    if (doc.acknowledgement) continue;
    any_data = true;
    if (!doc.unit.empty()) {
      if (!series.unit.empty() && series.unit != doc.unit) {
        throw ParseError("pages of " + request.Canonical() + " disagree on units");
      }
      series.unit = doc.unit;
    }
    for (const auto& p : ToHourlyPoints(doc, page)) {
      if (series.points.empty() || p.hour > series.points.back().hour) {
        series.points.push_back(p);
      }
    }
  }
  series.source = options_.mode == FetchMode::kFixture ? Source::kFixture
                  : all_cached                          ? Source::kCache
                                                        : Source::kLive;
  series.empty_response = !any_data || series.points.empty();
  if (series.unit.empty()) {
    series.unit = request.quantity == Quantity::kDayAheadPrice ? "EUR/MWh" : "MW";
  }
  return series;
}

}  // namespace gridxai::ingest

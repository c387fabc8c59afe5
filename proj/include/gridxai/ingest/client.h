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

#ifndef GRIDXAI_INGEST_CLIENT_H_
#define GRIDXAI_INGEST_CLIENT_H_

#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "gridxai/ingest/rate_limiter.h"
#include "gridxai/ingest/series.h"
#include "gridxai/ingest/transport.h"

namespace gridxai::ingest {

enum class FetchMode {
  kFixture,  // local fixture files only
  kOffline,  // cache only
  kLive,     // cache, then network
};

inline constexpr const char* kTokenEnvVar = "ENTSOE_API_TOKEN";

struct ClientOptions {
  FetchMode mode = FetchMode::kFixture;
  std::filesystem::path fixtures_dir;
  // Raw documents are cached here when set.
  std::filesystem::path cache_dir;
  std::string token;
  int max_attempts = 5;
  double backoff_initial_seconds = 1.0;
  double backoff_max_seconds = 60.0;
  double requests_per_second = 2.0;
  double burst = 4.0;
  Clock clock = Clock::Steady();
};

// Query parameters for one page of `request`.
std::map<std::string, std::string> BuildQuery(const SeriesRequest& request,
                                              const TimeWindow& page,
                                              const std::string& token);

// Splits an interval into pages of at most one year.
std::vector<TimeWindow> Paginate(const TimeWindow& interval);

// Cache file name for one page: SHA-256 of its canonical request.
std::string CacheKey(const SeriesRequest& request, const TimeWindow& page);

class EntsoeClient {
 public:
  // Live mode without a transport uses HttpsTransport.
  explicit EntsoeClient(ClientOptions options,
                        std::unique_ptr<Transport> transport = nullptr);

  // Errors: kAuth for a missing or rejected token, kRateLimit after the
  // retry budget, kNetwork for other transport failures, kMissingArtifact
  // for absent fixtures or cache entries, ParseError for malformed
  // documents.
  RawSeries Fetch(const SeriesRequest& request);

  std::size_t transport_calls() const { return transport_calls_; }

 private:
  std::string FetchPage(const SeriesRequest& request, const TimeWindow& page,
                        Source& source);
  std::string Download(const SeriesRequest& request, const TimeWindow& page);

  ClientOptions options_;
  std::unique_ptr<Transport> transport_;
  std::unique_ptr<TokenBucket> limiter_;
  std::size_t transport_calls_ = 0;
};

}  // namespace gridxai::ingest

#endif  // GRIDXAI_INGEST_CLIENT_H_

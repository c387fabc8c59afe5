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

#include "gridxai/ingest/rate_limiter.h"

#include <algorithm>
#include <chrono>
#include <thread>

#include "gridxai/common/error.h"

namespace gridxai::ingest {

Clock Clock::Steady() {
  return {[] {
            return std::chrono::duration<double>(
                       std::chrono::steady_clock::now().time_since_epoch())
                .count();
          },
          [](double seconds) {
            if (seconds > 0) {
              std::this_thread::sleep_for(std::chrono::duration<double>(seconds));
            }
          }};
}

TokenBucket::TokenBucket(double rate, double burst, Clock clock)
    : rate_(rate), burst_(burst), clock_(std::move(clock)) {
  if (!(rate > 0.0) || !(burst >= 1.0)) {
    throw ConfigError("rate limit needs rate > 0 and burst >= 1");
  }
  tokens_ = burst_;
  last_ = clock_.now();
}

double TokenBucket::Acquire() {
  std::lock_guard<std::mutex> lock(mu_);
  const double now = clock_.now();
  tokens_ = std::min(burst_, tokens_ + (now - last_) * rate_);
  last_ = now;
  double waited = 0.0;
  if (tokens_ < 1.0) {
    waited = (1.0 - tokens_) / rate_;
    clock_.sleep(waited);
    const double after = clock_.now();
    tokens_ = std::min(burst_, tokens_ + (after - last_) * rate_);
    last_ = after;
    tokens_ = std::max(tokens_, 1.0);
  }
  tokens_ -= 1.0;
  return waited;
}

}  // namespace gridxai::ingest

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

#ifndef GRIDXAI_INGEST_RATE_LIMITER_H_
#define GRIDXAI_INGEST_RATE_LIMITER_H_

#include <functional>
#include <mutex>

namespace gridxai::ingest {

// Seconds on a monotonic clock, and a way to wait.
struct Clock {
  std::function<double()> now;
  std::function<void(double)> sleep;
  static Clock Steady();
};

// Token bucket: `rate` tokens per second up to `burst` stored tokens.
class TokenBucket {
 public:
  TokenBucket(double rate, double burst, Clock clock = Clock::Steady());

  // Takes one token, sleeping until one is available. Returns the seconds
  // waited.
  double Acquire();

 private:
  double rate_;
  double burst_;
  Clock clock_;
  std::mutex mu_;
  double tokens_;
  double last_;
};

}  // namespace gridxai::ingest

#endif  // GRIDXAI_INGEST_RATE_LIMITER_H_

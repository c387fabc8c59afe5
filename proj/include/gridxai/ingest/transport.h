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

#ifndef GRIDXAI_INGEST_TRANSPORT_H_
#define GRIDXAI_INGEST_TRANSPORT_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string>

namespace gridxai::ingest {

struct HttpResponse {
  int status = 0;
  std::string body;
  std::optional<double> retry_after_seconds;
};

// Issues GET requests for `/api?<query>` against the platform endpoint.
class Transport {
 public:
  virtual ~Transport() = default;
  virtual HttpResponse Get(const std::map<std::string, std::string>& query) = 0;
};

// HTTPS transport backed by cpp-httplib. Every call counts as one network
// operation.
class HttpsTransport : public Transport {
 public:
  explicit HttpsTransport(std::string host = "web-api.tp.entsoe.eu",
                          std::string path = "/api", int timeout_seconds = 60);
  HttpResponse Get(const std::map<std::string, std::string>& query) override;

 private:
  std::string host_;
  std::string path_;
  int timeout_seconds_;
};

// Process-wide count of attempted network operations.
std::size_t NetworkOperationCount();

// Percent-encodes and joins query parameters in key order.
std::string EncodeQuery(const std::map<std::string, std::string>& query);

}  // namespace gridxai::ingest

#endif  // GRIDXAI_INGEST_TRANSPORT_H_

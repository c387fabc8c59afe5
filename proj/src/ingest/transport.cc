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

#include "gridxai/ingest/transport.h"

#include <atomic>
#include <cctype>
#include <cstdio>

#include "gridxai/common/error.h"
#include "httplib.h"

namespace gridxai::ingest {
namespace {

std::atomic<std::size_t> g_network_operations{0};

}  // namespace

std::size_t NetworkOperationCount() { return g_network_operations.load(); }

std::string EncodeQuery(const std::map<std::string, std::string>& query) {
  std::string out;
  for (const auto& [key, value] : query) {
    if (!out.empty()) out += '&';
    out += key;
    out += '=';
    for (unsigned char c : value) {
      if (std::isalnum(c) || c == '-' || c == '_' || c == '.' || c == '~') {
        out += static_cast<char>(c);
      } else {
        char buf[4];
        std::snprintf(buf, sizeof buf, "%%%02X", c);
        out += buf;
      }
    }
  }
  return out;
}

HttpsTransport::HttpsTransport(std::string host, std::string path,
                               int timeout_seconds)
    : host_(std::move(host)), path_(std::move(path)),
      timeout_seconds_(timeout_seconds) {}

HttpResponse HttpsTransport::Get(const std::map<std::string, std::string>& query) {
  ++g_network_operations;
  httplib::SSLClient client(host_);
  client.set_connection_timeout(timeout_seconds_);
  client.set_read_timeout(timeout_seconds_);
  client.enable_server_certificate_verification(true);
  const auto result = client.Get(path_ + "?" + EncodeQuery(query));
  if (!result) {
    throw Error(ErrorKind::kNetwork,
                "request to " + host_ + " failed: " + httplib::to_string(result.error()));
  }
  HttpResponse response;
  response.status = result->status;
  response.body = result->body;
  if (result->has_header("Retry-After")) {
    try {
      response.retry_after_seconds = std::stod(result->get_header_value("Retry-After"));
    } catch (const std::exception&) {
    }
  }
  return response;
}

}  // namespace gridxai::ingest

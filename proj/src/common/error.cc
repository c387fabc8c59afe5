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

#include "gridxai/common/error.h"

namespace gridxai {

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidInput:
      return "invalid-input";
    case ErrorKind::kSchemaMismatch:
      return "schema-mismatch";
    case ErrorKind::kModelIntegrity:
      return "model-integrity";
    case ErrorKind::kCapacity:
      return "capacity";
    case ErrorKind::kUndefinedScore:
      return "undefined-score";
    case ErrorKind::kParse:
      return "parse";
    case ErrorKind::kAuth:
      return "auth";
    case ErrorKind::kRateLimit:
      return "rate-limit";
    case ErrorKind::kNetwork:
      return "network";
    case ErrorKind::kConfig:
      return "config";
    case ErrorKind::kMissingArtifact:
      return "missing-artifact";
    case ErrorKind::kIo:
      return "io";
  }
  return "unknown";
}

}  // namespace gridxai

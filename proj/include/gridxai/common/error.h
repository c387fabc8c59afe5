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

#ifndef GRIDXAI_COMMON_ERROR_H_
#define GRIDXAI_COMMON_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace gridxai {

// Coarse error classes. The CLI maps each class to a distinct exit code.
enum class ErrorKind {
  kInvalidInput,
  kSchemaMismatch,
  kModelIntegrity,
  kCapacity,
  kUndefinedScore,
  kParse,
  kAuth,
  kRateLimit,
  kNetwork,
  kConfig,
  kMissingArtifact,
  kIo,
};

std::string_view ErrorKindName(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

class InvalidInputError : public Error {
 public:
  explicit InvalidInputError(const std::string& m)
      : Error(ErrorKind::kInvalidInput, m) {}
};

class SchemaError : public Error {
 public:
  explicit SchemaError(const std::string& m)
      : Error(ErrorKind::kSchemaMismatch, m) {}
};

class ModelIntegrityError : public Error {
 public:
  explicit ModelIntegrityError(const std::string& m)
      : Error(ErrorKind::kModelIntegrity, m) {}
};

class CapacityError : public Error {
 public:
  explicit CapacityError(const std::string& m)
      : Error(ErrorKind::kCapacity, m) {}
};

class UndefinedScoreError : public Error {
 public:
  explicit UndefinedScoreError(const std::string& m)
      : Error(ErrorKind::kUndefinedScore, m) {}
};

// Malformed payload. `offset` is a byte offset into the input when known.
class ParseError : public Error {
 public:
  ParseError(const std::string& m, long long offset = -1)
      : Error(ErrorKind::kParse, m), offset_(offset) {}
  long long offset() const { return offset_; }

 private:
  long long offset_;
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& m) : Error(ErrorKind::kConfig, m) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& m) : Error(ErrorKind::kIo, m) {}
};

}  // namespace gridxai

#endif  // GRIDXAI_COMMON_ERROR_H_

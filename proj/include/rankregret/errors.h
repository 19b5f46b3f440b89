// Copyright 2026 The rankregret Authors
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

#ifndef RANKREGRET_ERRORS_H_
#define RANKREGRET_ERRORS_H_

#include <stdexcept>
#include <string>

namespace rankregret {

enum class ErrorCode {
  kInvalidArgument,
  kUndefinedMetric,
  kCapacity,
  kMarginViolation,
  kParse,
};

// Base class for every error thrown by the library. The code lets callers
// (the CLI in particular) map failures onto stable exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

class InvalidArgumentError : public Error {
 public:
  explicit InvalidArgumentError(const std::string& message)
      : Error(ErrorCode::kInvalidArgument, message) {}
};

// A metric has no value on the given instance, e.g. AUC on a one-class list.
class UndefinedMetricError : public Error {
 public:
  explicit UndefinedMetricError(const std::string& message)
      : Error(ErrorCode::kUndefinedMetric, message) {}
};

// An exhaustive enumeration was requested beyond its supported size.
class CapacityError : public Error {
 public:
  CapacityError(const std::string& what, std::size_t size, std::size_t limit)
      : Error(ErrorCode::kCapacity,
              what + ": size " + std::to_string(size) + " exceeds limit " +
                  std::to_string(limit)),
        limit_(limit) {}

  std::size_t limit() const { return limit_; }

 private:
  std::size_t limit_;
};

class MarginError : public Error {
 public:
  explicit MarginError(const std::string& message)
      : Error(ErrorCode::kMarginViolation, message) {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& source, std::size_t line,
             const std::string& message)
      : Error(ErrorCode::kParse,
              source + ":" + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace rankregret

#endif  // RANKREGRET_ERRORS_H_

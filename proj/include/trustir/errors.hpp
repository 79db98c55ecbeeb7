// Copyright 2026 The trustir Authors
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

#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace trustir {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Corpus file or corpus invariant violations.
class CorpusError : public Error {
 public:
  using Error::Error;
};

/// Query-time errors from the searcher (e.g. a query with no usable terms).
class QueryError : public Error {
 public:
  using Error::Error;
};

/// Cache file format or persistence errors.
class CacheError : public Error {
 public:
  using Error::Error;
};

/// Trust computation failures. Carries the omega trajectory observed before
/// the failure so callers can inspect what the iteration did.
class TrustError : public Error {
 public:
  TrustError(const std::string& what, std::vector<double> trajectory)
      : Error(what), trajectory_(std::move(trajectory)) {}

  const std::vector<double>& trajectory() const noexcept { return trajectory_; }

 private:
  std::vector<double> trajectory_;
};

/// Policy text errors (syntax or semantic), located at line:column.
class PolicyError : public Error {
 public:
  PolicyError(int line, int column, const std::string& message)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        message_(message) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  int line_;
  int column_;
  std::string message_;
};

}  // namespace trustir

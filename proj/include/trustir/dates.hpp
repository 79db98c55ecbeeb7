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

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace trustir {

/// A UTC calendar date, stored as whole days since 1970-01-01. Comparison,
/// differencing and the ISO-8601 text form are all defined in terms of that
/// day count, so date handling stays locale-free and bit-exact.
class Date {
 public:
  Date() = default;

  /// Parses a strict "YYYY-MM-DD" string. Throws Error on anything else,
  /// including calendar-invalid dates like 2009-02-30.
  static Date parse(std::string_view iso);

  static Date from_days(std::int64_t days_since_epoch);

  /// UTC day containing the given epoch second (floor division).
  static Date from_epoch_seconds(std::int64_t seconds);

  std::int64_t days_since_epoch() const noexcept { return days_; }

  std::string to_string() const;

  friend auto operator<=>(Date, Date) = default;

 private:
  std::int64_t days_ = 0;
};

/// Whole days from `from` to `to`; negative if `to` precedes `from`.
inline std::int64_t days_between(Date from, Date to) {
  return to.days_since_epoch() - from.days_since_epoch();
}

}  // namespace trustir

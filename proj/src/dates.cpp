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

#include "trustir/dates.hpp"

#include <cctype>
#include <chrono>
#include <cstdio>

#include "trustir/errors.hpp"

namespace trustir {

namespace {

bool all_digits(std::string_view s) {
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return !s.empty();
}

}  // namespace

Date Date::parse(std::string_view iso) {
  if (iso.size() != 10 || iso[4] != '-' || iso[7] != '-' ||
      !all_digits(iso.substr(0, 4)) || !all_digits(iso.substr(5, 2)) ||
      !all_digits(iso.substr(8, 2))) {
    throw Error("invalid date '" + std::string(iso) + "' (expected YYYY-MM-DD)");
  }
  int y = (iso[0] - '0') * 1000 + (iso[1] - '0') * 100 + (iso[2] - '0') * 10 + (iso[3] - '0');
  unsigned m = static_cast<unsigned>((iso[5] - '0') * 10 + (iso[6] - '0'));
  unsigned d = static_cast<unsigned>((iso[8] - '0') * 10 + (iso[9] - '0'));
  std::chrono::year_month_day ymd{std::chrono::year{y}, std::chrono::month{m}, std::chrono::day{d}};
  if (!ymd.ok()) {
    throw Error("invalid date '" + std::string(iso) + "' (not a calendar date)");
  }
  return from_days(std::chrono::sys_days(ymd).time_since_epoch().count());
}

Date Date::from_days(std::int64_t days_since_epoch) {
  Date date;
  date.days_ = days_since_epoch;
  return date;
}

Date Date::from_epoch_seconds(std::int64_t seconds) {
  std::int64_t days = seconds / 86400;
  if (seconds < 0 && seconds % 86400 != 0) --days;
  return from_days(days);
}

std::string Date::to_string() const {
  std::chrono::year_month_day ymd{std::chrono::sys_days{std::chrono::days{days_}}};
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
  return buf;
}

}  // namespace trustir

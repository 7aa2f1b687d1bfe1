// Copyright 2026 The Geobehave Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "absl/time/civil_time.h"
#include "absl/time/time.h"

namespace geobehave {

// Milliseconds since the Unix epoch, UTC.
using TimestampMs = std::int64_t;
using Date = absl::CivilDay;

inline constexpr TimestampMs kMsPerSecond = 1000;
inline constexpr TimestampMs kMsPerMinute = 60 * kMsPerSecond;
inline constexpr TimestampMs kMsPerHour = 60 * kMsPerMinute;
inline constexpr TimestampMs kMsPerDay = 24 * kMsPerHour;

// Local wall-clock view of UTC timestamps for one IANA zone. Day, night and
// school-hour boundaries are all local-time concepts.
class LocalClock {
 public:
  LocalClock();  // UTC
  static LocalClock load(const std::string& zone_id);

  const std::string& zone_id() const { return zone_id_; }

  Date date_of(TimestampMs t) const;
  // Minutes since local midnight, in [0, 1440).
  int minute_of_day(TimestampMs t) const;
  // UTC instant of a local wall-clock minute on `day`.
  TimestampMs at(Date day, int minute_of_day) const;
  TimestampMs day_start(Date day) const { return at(day, 0); }
  TimestampMs day_end(Date day) const { return at(day + 1, 0); }
  // ISO-like local minute key, e.g. "20190701T11:52".
  std::string minute_key(TimestampMs t) const;

 private:
  std::string zone_id_;
  absl::TimeZone zone_;
};

Date parse_date(std::string_view text);
std::string format_date(Date d);
// "HH:MM" → minutes since midnight.
int parse_clock(std::string_view text);
std::string format_clock(int minute_of_day);
// ISO week key, e.g. "2019W27".
std::string week_key(Date d);

}  // namespace geobehave

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

#include <filesystem>
#include <map>
#include <set>
#include <string>

#include "geobehave/time.hpp"
#include "nlohmann/json.hpp"

namespace geobehave {

enum class DayType { kSchool, kNonSchool };

std::string to_string(DayType d);
DayType parse_day_type(const std::string& s);

/// School days and school hours for one school.
struct SchoolCalendar {
  std::string id;
  int school_start_min = 8 * 60;
  int school_end_min = 14 * 60;
  std::set<Date> school_days;

  DayType day_type(Date d) const {
    return school_days.count(d) ? DayType::kSchool : DayType::kNonSchool;
  }

  static SchoolCalendar from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

/// Calendars keyed by id, loaded from {"calendars": [...]}.
std::map<std::string, SchoolCalendar> load_calendars(const std::filesystem::path& path);

}  // namespace geobehave

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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "geobehave/geocell.hpp"
#include "geobehave/time.hpp"
#include "nlohmann/json.hpp"

namespace geobehave {

// Accel records further apart than this open a recording gap.
inline constexpr TimestampMs kGapThresholdMs = 5 * kMsPerMinute;

enum class DeviceClass { kSmartwatch, kSmartphone };

std::string to_string(DeviceClass d);
DeviceClass parse_device_class(const std::string& s);

/// A pseudonymous participant. Only registration-code style identifiers are
/// accepted; records carrying names or e-mail addresses are rejected.
struct Participant {
  std::string id;
  std::string age_band;
  std::string gender;
  DeviceClass device_class = DeviceClass::kSmartphone;
  std::string school_calendar_id;
  std::string timezone = "UTC";

  static Participant from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

std::vector<Participant> load_participants(const std::filesystem::path& path);

struct AccelSample {
  TimestampMs t = 0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

struct GpsSample {
  TimestampMs t = 0;
  GeoPoint point;
  double accuracy_m = 0.0;
};

enum class ReportKind { kMeal, kFoodAd };
enum class MealType { kBreakfast, kLunch, kDinner, kSnack };

std::string to_string(MealType m);
MealType parse_meal_type(const std::string& s);
inline constexpr MealType kAllMealTypes[] = {MealType::kBreakfast, MealType::kLunch,
                                             MealType::kDinner, MealType::kSnack};

struct SelfReportEvent {
  TimestampMs t = 0;
  ReportKind kind = ReportKind::kMeal;
  std::optional<MealType> meal_type;  // present iff kind == kMeal
  std::string food_category;
  std::optional<std::string> photo_ref;  // opaque, never opened
};

/// Nominal accel sampling rate from `t` onward.
struct RateMark {
  TimestampMs t = 0;
  double rate_hz = 0.0;
};

struct Gap {
  TimestampMs start = 0;
  TimestampMs end = 0;
  TimestampMs duration() const { return end - start; }
};

/// One participant's validated records. Every sequence is strictly increasing
/// in time; `gaps` are the maximal accel-free intervals longer than five
/// minutes.
struct SensorStream {
  std::string participant;
  std::vector<AccelSample> accel;
  std::vector<GpsSample> gps;
  std::vector<SelfReportEvent> reports;
  std::vector<RateMark> accel_rates;
  std::vector<Gap> gaps;

  /// Declared rate at `t`, or the rate estimated from sample spacing when the
  /// source declared none.
  double rate_at(TimestampMs t) const;
};

/// Recomputes `gaps` from the accel samples.
void compute_gaps(SensorStream& s);

enum class StreamFormat { kJsonl, kCsv };

struct RowError {
  std::string source;
  int line = 0;
  std::string message;
};

struct ParseResult {
  SensorStream stream;
  std::vector<RowError> rejects;
  std::size_t records = 0;  // accepted + rejected
};

struct StreamSource {
  std::filesystem::path path;
  StreamFormat format = StreamFormat::kJsonl;
};

/// Parses and validates one participant's sources into a single stream.
/// Bad rows and non-monotone timestamps are rejected and reported with line
/// numbers; more than half the records rejected is a StreamError.
ParseResult parse_stream(const std::vector<StreamSource>& sources, const std::string& participant);
ParseResult parse_stream(const StreamSource& source, const std::string& participant);
ParseResult parse_stream_text(std::string_view text, StreamFormat format,
                              const std::string& participant,
                              const std::string& source_name = "<memory>");

struct DayAvailability {
  double accel_hours = 0.0;
  double gps_hours = 0.0;
};

/// Hours of `day` (local) covered by samples at nominal cadence; spans across
/// recording gaps are excluded.
DayAvailability compute_availability(const SensorStream& s, Date day, const LocalClock& clock);
std::map<Date, DayAvailability> availability_by_day(const SensorStream& s, const LocalClock& clock);

// Serialization used by the generator and the tests; the layout is the one
// parse_stream reads.
std::string gps_reports_to_jsonl(const SensorStream& s);
std::string accel_to_csv(const SensorStream& s);
nlohmann::json report_to_json(const SelfReportEvent& r);

}  // namespace geobehave

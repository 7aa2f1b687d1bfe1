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

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "geobehave/ingest.hpp"
#include "geobehave/time.hpp"
#include "nlohmann/json.hpp"

namespace geobehave {

enum class IndicatorKind { kSelfReported, kBase, kDerived };
/// Time-key resolution of an indicator's tuples.
enum class Granularity { kMinute, kDay, kWeek };

std::string to_string(IndicatorKind k);
std::string to_string(Granularity g);
Granularity parse_granularity(const std::string& s);

struct IndicatorDef {
  std::string id;
  IndicatorKind kind = IndicatorKind::kBase;
  std::string units;
  std::vector<std::string> categories;  // empty for numeric indicators
  Granularity granularity = Granularity::kMinute;
  std::vector<std::string> inputs;  // derived indicators only

  bool categorical() const { return !categories.empty(); }
};

class IndicatorCatalog {
 public:
  IndicatorCatalog() = default;
  explicit IndicatorCatalog(std::vector<IndicatorDef> defs);  // validates

  /// The built-in catalog of every indicator this library emits.
  static const IndicatorCatalog& standard();
  /// Copy with per-indicator overrides, e.g. {"steps": {"granularity": "day"}}.
  IndicatorCatalog with_overrides(const nlohmann::json& overrides) const;

  const IndicatorDef* find(const std::string& id) const;
  const IndicatorDef& at(const std::string& id) const;  // throws ArgumentError
  std::vector<std::string> ids() const;
  const std::vector<IndicatorDef>& defs() const { return defs_; }

 private:
  std::vector<IndicatorDef> defs_;
};

using IndicatorScalar = std::variant<double, std::string>;

struct Window {
  TimestampMs start = 0;
  TimestampMs end = 0;
};

/// One observation of one indicator for one participant.
struct IndicatorValue {
  std::string participant;
  Window window;
  std::string key;  // local time key at the indicator's granularity
  std::string name;
  IndicatorScalar value;
  double quality = 1.0;

  bool numeric() const { return std::holds_alternative<double>(value); }
  double number() const { return std::get<double>(value); }
  const std::string& category() const { return std::get<std::string>(value); }

  nlohmann::json to_json() const;
  // to_json().dump() plus a newline, without the intermediate object.
  void append_json_line(std::string& out) const;
  static IndicatorValue from_json(const nlohmann::json& j);
};

/// Validates name and value domain against the catalog; throws ValidationError.
void validate(const IndicatorValue& v, const IndicatorCatalog& catalog);

// ---- physical activity ----------------------------------------------------

enum class Intensity { kSedentary, kLight, kModerate, kVigorous };
inline constexpr Intensity kAllIntensities[] = {Intensity::kSedentary, Intensity::kLight,
                                                Intensity::kModerate, Intensity::kVigorous};
std::string to_string(Intensity i);
Intensity parse_intensity(const std::string& s);

struct ActivityConfig {
  double band_low_hz = 0.25;
  double band_high_hz = 2.5;
  // Scale from rectified band-passed acceleration (g·s) to counts.
  double counts_per_g_second = 250.0;
  double min_rate_hz = 5.0;
  // A minute is complete when it holds at least this share of its nominal samples.
  double complete_fraction = 0.9;
  // Upper bounds (exclusive) of sedentary, light and moderate, counts/min.
  double sedentary_below = 100.0;
  double light_below = 2000.0;
  double moderate_below = 6000.0;
  // (counts/min, MET) anchors; linear between, last slope extrapolated.
  std::vector<std::pair<double, double>> met_anchors{{0.0, 1.0}, {6000.0, 6.0}};

  static ActivityConfig from_json(const nlohmann::json& j);
};

struct MinuteCount {
  TimestampMs minute = 0;  // UTC start of the minute
  long counts = 0;
  bool low_rate = false;
};

/// Band-passes |a| - 1 g, rectifies and integrates per wall-clock minute.
/// Only complete minutes are reported; filter state restarts after each gap.
std::vector<MinuteCount> activity_counts(std::span<const AccelSample> samples, double rate_hz,
                                         const ActivityConfig& config = {});
std::vector<MinuteCount> activity_counts(const SensorStream& s, const ActivityConfig& config = {});

struct MinuteActivity {
  TimestampMs minute = 0;
  Intensity intensity = Intensity::kSedentary;
  double met = 1.0;
};

Intensity intensity_for(double counts, const ActivityConfig& config = {});
double met_for(double counts, const ActivityConfig& config = {});
std::vector<MinuteActivity> classify_activity(std::span<const MinuteCount> counts,
                                              const ActivityConfig& config = {});

struct StepConfig {
  double band_low_hz = 0.5;
  double band_high_hz = 3.0;
  double min_peak_g = 0.08;
  double min_step_interval_s = 0.25;
  double complete_fraction = 0.9;
};

struct MinuteSteps {
  TimestampMs minute = 0;
  long steps = 0;
};

/// Peak detection on the band-passed dynamic magnitude with a refractory
/// interval; reported on the same complete-minute grid as activity_counts.
std::vector<MinuteSteps> count_steps(std::span<const AccelSample> samples, double rate_hz,
                                     const StepConfig& config = {});
std::vector<MinuteSteps> count_steps(const SensorStream& s, const StepConfig& config = {});

// ---- sleep ----------------------------------------------------------------

struct SleepConfig {
  int window_start_min = 20 * 60;  // 20:00 on the night's date
  int window_end_min = 12 * 60;    // 12:00 the next day
  double still_max_counts = 20.0;
  int tolerated_movement_min = 5;  // shorter movements do not break sleep
  int max_interruption_min = 60;   // longer active bouts end the episode
  int min_sleep_min = 60;
  double min_available_hours = 4.0;
};

struct SleepResult {
  Date night;
  std::optional<TimestampMs> sleep_start;
  std::optional<TimestampMs> wake_time;
  int interruptions = 0;
  double hours = 0.0;
  double available_hours = 0.0;
  double quality = 1.0;
};

/// Longest low-activity episode in the night window. Active bouts of at least
/// `tolerated_movement_min` minutes inside it are interruptions. Minutes with
/// no data that sit between still minutes count as still.
SleepResult detect_sleep(std::span<const MinuteCount> counts, Date night, const LocalClock& clock,
                         const SleepConfig& config = {});
SleepResult detect_sleep(const SensorStream& s, Date night, const LocalClock& clock,
                         const SleepConfig& config = {}, const ActivityConfig& activity = {});

// ---- extraction -----------------------------------------------------------

struct ExtractionConfig {
  ActivityConfig activity;
  StepConfig steps;
  SleepConfig sleep;
};

/// Quality of `indicator` observed on local date `day`.
using QualityFn = std::function<double(const std::string& indicator, Date day)>;

/// Base and self-reported indicators of one stream for the local days
/// [first, first + days): per-minute counts, intensity, MET and steps, daily
/// step totals, one sleep record per night whose morning lies inside the
/// range, and one value per self-report. Sleep times are minutes after local
/// midnight of the night's date (start) and of the following day (wake).
std::vector<IndicatorValue> extract_base_indicators(const SensorStream& s, const LocalClock& clock, Date first,
                                                    int days, const ExtractionConfig& config = {},
                                                    const QualityFn& quality = {});

}  // namespace geobehave

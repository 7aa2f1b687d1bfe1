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

#include <Eigen/Core>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "geobehave/calendar.hpp"
#include "geobehave/geocell.hpp"
#include "geobehave/indicators.hpp"
#include "geobehave/ingest.hpp"
#include "geobehave/poi.hpp"
#include "nlohmann/json.hpp"

namespace geobehave {

enum class TransportMode { kWalking, kCycling, kVehicle };
inline constexpr TransportMode kAllModes[] = {TransportMode::kWalking, TransportMode::kCycling,
                                              TransportMode::kVehicle};
std::string to_string(TransportMode m);
TransportMode parse_transport_mode(const std::string& s);

/// Physical-activity and diet indicators attached to a stop or move.
struct EventIndicators {
  int observed_minutes = 0;
  std::map<Intensity, int> intensity_minutes;
  long steps = 0;
  int meals = 0;

  int active_minutes() const;  // moderate + vigorous
};

struct StopEvent {
  TimestampMs start = 0;
  TimestampMs end = 0;
  GeoPoint centroid;
  std::string poi_type = poi_category::kUnknown;
  int fixes = 0;
  EventIndicators indicators;

  TimestampMs duration() const { return end - start; }
};

struct MoveEvent {
  TimestampMs start = 0;
  TimestampMs end = 0;
  std::string origin_poi = poi_category::kUnknown;
  std::string dest_poi = poi_category::kUnknown;
  double distance_m = 0.0;
  TransportMode mode = TransportMode::kWalking;
  double mode_quality = 1.0;
  int fixes = 0;
  EventIndicators indicators;

  TimestampMs duration() const { return end - start; }
};

using TimelineEvent = std::variant<StopEvent, MoveEvent>;

TimestampMs event_start(const TimelineEvent& e);
TimestampMs event_end(const TimelineEvent& e);

/// One local day of alternating stop and move events.
struct Timeline {
  std::string participant;
  Date date;
  DayType day_type = DayType::kNonSchool;
  std::string home_cell;  // empty when no home could be inferred
  std::vector<TimelineEvent> events;

  nlohmann::json to_json() const;
  static Timeline from_json(const nlohmann::json& j);
};

/// Throws ValidationError unless events alternate, are ordered and do not overlap.
void validate(const Timeline& t);

struct StopParams {
  double eps_m = 75.0;
  TimestampMs min_duration = 10 * kMsPerMinute;
  int min_pts = 3;
  // Moves spanning a recording gap longer than this are split around an
  // `unknown` stop covering the gap.
  TimestampMs move_split_gap = 30 * kMsPerMinute;

  static StopParams from_json(const nlohmann::json& j);
};

/// Stops are maximal time-ordered runs of fixes staying within `eps_m` of
/// their running centroid for at least `min_duration` and `min_pts` fixes.
std::vector<StopEvent> detect_stops(std::span<const GpsSample> gps, const StopParams& params = {});

struct PoiMatchParams {
  double match_radius_m = 75.0;
};

/// Modal 7-character cell of the fixes recorded between 00:00 and 06:00 local.
std::optional<GeoCell> infer_home(std::span<const GpsSample> gps, const LocalClock& clock);

/// Nearest POI within the match radius (ties: distance, then category name);
/// otherwise `home` if the centroid lies in the home cell; otherwise `unknown`.
std::string assign_poi_type(const StopEvent& stop, std::span<const Poi> pois,
                            const std::optional<GeoCell>& home_cell, const PoiMatchParams& params = {});

struct TransportParams {
  double walking_below_kmh = 7.0;
  double cycling_up_to_kmh = 16.0;

  static TransportParams from_json(const nlohmann::json& j);
};

struct TransportResult {
  TransportMode mode = TransportMode::kWalking;
  double quality = 1.0;
  double median_speed_kmh = 0.0;
};

/// Mode from the median speed between consecutive fixes. Fewer than two
/// fixes yields walking at very-low quality.
TransportResult classify_transport(std::span<const GpsSample> fixes, const TransportParams& params = {});

/// Per-minute indicators used to annotate timeline events.
struct MinuteIndicators {
  std::map<TimestampMs, Intensity> intensity;
  std::map<TimestampMs, long> steps;
  std::vector<TimestampMs> meals;

  EventIndicators summarize(TimestampMs start, TimestampMs end) const;
};

struct TimelineContext {
  std::string participant;
  LocalClock clock;
  const SchoolCalendar* calendar = nullptr;
  std::span<const Poi> pois;
  StopParams stop_params;
  PoiMatchParams poi_params;
  TransportParams transport_params;
};

struct SegmentedTrack {
  std::optional<GeoCell> home;
  std::vector<Timeline> timelines;
};

/// Segments a GPS track into stop/move events, labels them and splits them
/// into per-day timelines. Stops crossing midnight are cut at midnight; a
/// move belongs to the day it starts on.
SegmentedTrack build_timelines(std::span<const GpsSample> gps, const TimelineContext& ctx,
                               const MinuteIndicators* indicators = nullptr);

// ---- behavior profiles ---------------------------------------------------

/// Running mean / standard deviation / count (Welford).
struct Moments {
  double mean = 0.0;
  double m2 = 0.0;
  long count = 0;

  void add(double x);
  double stddev() const;
  nlohmann::json to_json() const;
};

struct ModeSummary {
  Moments distance_m;
  Moments duration_min;
  Moments active_minutes;
  Moments steps;
};

struct EdgeMetadata {
  long transitions = 0;
  std::map<TransportMode, double> mode_pmf;
  std::map<TransportMode, ModeSummary> per_mode;
};

struct PoiMetadata {
  long visits = 0;
  Moments duration_min;
  Moments meals;
  Moments active_minutes;
  Moments steps;
};

/// First-order Markov transition graph over POI types plus edge and node
/// metadata. Holds no coordinates.
struct BehaviorProfile {
  std::string participant;
  DayType day_type = DayType::kSchool;
  int timelines = 0;
  long moves = 0;
  std::vector<std::string> poi_types;  // sorted; row/column order of `transition`
  Eigen::MatrixXd transition;
  std::map<std::pair<int, int>, EdgeMetadata> edges;
  std::vector<PoiMetadata> nodes;

  int index_of(const std::string& poi_type) const;  // -1 if absent
  double probability(const std::string& from, const std::string& to) const;
  nlohmann::json to_json() const;
};

/// P(i→j) = moves from i to j / moves leaving i, over all timelines of the
/// requested day type. Unobserved edges stay zero.
BehaviorProfile build_profile(std::span<const Timeline> timelines, DayType day_type);

/// Graphviz digraph: one node per POI type, edges labelled with P rounded to
/// two decimals, sorted output.
std::string profile_to_dot(const BehaviorProfile& profile);

struct DotEdge {
  std::string from;
  std::string to;
  std::string label;
  friend auto operator<=>(const DotEdge&, const DotEdge&) = default;
};
std::vector<DotEdge> parse_dot_edges(const std::string& dot);

}  // namespace geobehave

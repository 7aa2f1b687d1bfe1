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
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "geobehave/calendar.hpp"
#include "geobehave/geocell.hpp"
#include "geobehave/ingest.hpp"
#include "geobehave/mobility.hpp"
#include "geobehave/poi.hpp"
#include "geobehave/time.hpp"
#include "nlohmann/json.hpp"

namespace geobehave {

/// Deterministic random source: mt19937_64 seeded through splitmix64 so that
/// nearby seeds give unrelated streams. Uniform and normal draws are
/// computed here rather than through <random> distributions, whose output
/// is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  static std::uint64_t mix(std::uint64_t x);  // splitmix64 finalizer

  double uniform();  // [0, 1)
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  int uniform_int(int lo, int hi);  // inclusive
  double normal();
  double normal(double mean, double sd) { return mean + sd * normal(); }
  bool bernoulli(double p) { return uniform() < p; }

 private:
  std::mt19937_64 engine_;
  std::optional<double> spare_;
};

/// Accel signal of one activity: |a| = 1 g + amplitude·sin(2π·freq·t) + noise.
struct ActivitySignal {
  double amplitude_g = 0.0;
  double freq_hz = 0.0;
  double noise_g = 0.002;
  bool steps = false;  // each cycle is one step
};

/// Built-in activities: sleep, sedentary, light, walking, vigorous, cycling, vehicle.
const std::map<std::string, ActivitySignal>& default_activity_signals();

struct Bout {
  std::string activity;
  int start_min = 0;  // local minute of day
  int minutes = 0;
};

struct MealPlan {
  MealType type = MealType::kSnack;
  int at_min = 0;
  std::string food_category;
  double report_probability = 1.0;
};

/// One block of a day template: a stay at a place alias until a local time,
/// or travel to the next stay.
struct TemplateItem {
  bool travel = false;
  std::string place;  // alias, stays only
  int until_min = 0;  // stays only; 1440 for the final stay
  std::string activity = "sedentary";
  TransportMode mode = TransportMode::kWalking;  // travel only
  std::vector<Bout> bouts;
  std::vector<MealPlan> meals;
};

struct DayTemplate {
  std::string id;
  std::vector<TemplateItem> items;
};

struct ClockWindow {
  int start_min = 0;
  int end_min = 0;  // may be smaller than start: the window wraps midnight
  bool contains(int minute_of_day) const;
};

struct PlaceSpec {
  std::string id;
  GeoPoint location;
  std::string category;
  std::string source = "osm";
  std::string raw_category;
};

struct ParticipantSpec {
  Participant participant;
  GeoPoint home;
  std::map<std::string, std::string> places;  // alias -> place id
  std::vector<std::string> school_templates;
  std::vector<std::string> free_templates;
  int sleep_start_min = 22 * 60;
  int wake_min = 7 * 60;
  std::vector<ClockWindow> wear;  // empty: worn all day
  std::optional<double> accel_rate_hz;
  double meal_report_probability = 1.0;
};

struct DozeSpec {
  double stay_gap_rate_per_hour = 0.0;  // random recording gaps during stays
  int min_gap_min = 10;
  int max_gap_min = 30;
  // While asleep the device records `sleep_on_min` out of every
  // `sleep_on_min + sleep_off_min` minutes; 0 disables duty cycling.
  int sleep_on_min = 0;
  int sleep_off_min = 0;
};

struct MarkovSpec {
  std::vector<std::string> states;
  Eigen::MatrixXd matrix;
  int days = 1000;
  int places_per_state = 2;
  int min_dwell_min = 20;
  int max_dwell_min = 60;
  double spacing_m = 600.0;
  GeoPoint origin{40.6401, 22.9444};
  TransportMode travel_mode = TransportMode::kWalking;
};

struct GeneratorSpec {
  Date start_date{2026, 3, 2};
  int days = 14;
  std::string timezone = "UTC";
  double accel_rate_hz = 5.0;
  int gps_period_s = 60;
  double gps_noise_m = 6.0;
  double gps_accuracy_m = 10.0;
  int jitter_min = 10;
  std::map<TransportMode, double> speed_kmh{
      {TransportMode::kWalking, 4.5}, {TransportMode::kCycling, 13.0}, {TransportMode::kVehicle, 30.0}};
  DozeSpec doze;
  double night_awakening_probability = 0.0;
  double food_ads_per_day = 0.0;
  std::map<std::string, ActivitySignal> signals = default_activity_signals();
  std::vector<SchoolCalendar> calendars;
  std::vector<PlaceSpec> places;  // includes background POIs
  std::map<std::string, DayTemplate> templates;
  std::vector<ParticipantSpec> participants;
  std::optional<MarkovSpec> markov;

  /// Throws SpecError for inconsistent specs (unknown aliases, overlapping
  /// blocks, stays that are not separated by travel, ...).
  static GeneratorSpec from_json(const nlohmann::json& j);
  void validate() const;
};

struct TruthStay {
  std::string participant;
  TimestampMs start = 0;
  TimestampMs end = 0;
  std::string place;
  std::string category;
  GeoPoint location;
};

struct TruthMove {
  std::string participant;
  TimestampMs start = 0;
  TimestampMs end = 0;
  TransportMode mode = TransportMode::kWalking;
  std::string from_category;
  std::string to_category;
};

struct TruthSleep {
  std::string participant;
  Date night;
  TimestampMs start = 0;
  TimestampMs end = 0;
  int interruptions = 0;
};

struct TruthMeal {
  std::string participant;
  TimestampMs t = 0;
  MealType type = MealType::kSnack;
  bool reported = true;
};

struct GroundTruth {
  std::vector<TruthStay> stays;
  std::vector<TruthMove> moves;
  std::vector<TruthSleep> sleep;
  std::vector<TruthMeal> meals;
  // participant -> local date -> steps inside recorded accel
  std::map<std::string, std::map<Date, long>> steps;
  // participant -> day type -> from category -> to category -> moves
  std::map<std::string, std::map<DayType, std::map<std::string, std::map<std::string, long>>>> transitions;

  nlohmann::json to_json() const;
};

struct GeneratedParticipant {
  Participant participant;
  SensorStream stream;
};

/// Streams one participant at a time into `sink` so that memory stays bounded
/// by a single participant's data.
using ParticipantSink = std::function<void(GeneratedParticipant&&)>;
GroundTruth generate_cohort(const GeneratorSpec& spec, std::uint64_t seed, const ParticipantSink& sink);

struct MarkovTrack {
  std::string id;
  std::vector<GpsSample> gps;
  std::vector<std::string> visited;  // state of every stay, in order
};

struct MarkovCohort {
  std::vector<Poi> pois;
  std::vector<MarkovTrack> days;
  Eigen::MatrixXd planted;
  std::vector<std::string> states;
};

/// One independent GPS day per draw of the planted chain. Consecutive stays
/// in the same state go to different places of that state.
MarkovCohort generate_markov(const GeneratorSpec& spec, std::uint64_t seed);

std::vector<Poi> spec_pois(const GeneratorSpec& spec);

/// Writes participants.json, calendars.json, pois.geojson, streams/ and
/// ground_truth.json under `out_dir`; returns the ground truth.
GroundTruth write_cohort(const GeneratorSpec& spec, std::uint64_t seed, const std::filesystem::path& out_dir);

}  // namespace geobehave

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

#include <algorithm>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nlohmann/json.hpp"

namespace geobehave {

// Anchors of the five-level quality scale.
inline constexpr double kQualityVeryLow = 0.2;
inline constexpr double kQualityLow = 0.4;
inline constexpr double kQualityModerate = 0.6;
inline constexpr double kQualityHigh = 0.8;
inline constexpr double kQualityVeryHigh = 1.0;

/// A quality value in [0, 1] plus the (source, raw score) pairs it was
/// combined from.
struct QualityScore {
  double value = kQualityVeryHigh;
  std::vector<std::pair<std::string, double>> provenance;

  /// Throws ValidationError unless value is in [0, 1].
  static QualityScore make(double value, std::string source = {});
};

struct AvailabilityThresholds {
  double very_low = 1.0;
  double very_high = 6.0;
  std::string units = "hours/day";

  void validate() const;
};

namespace availability {
inline const AvailabilityThresholds kAccelHoursPerDay{1.0, 6.0, "hours/day"};
inline const AvailabilityThresholds kGpsHoursPerDay{1.0, 6.0, "hours/day"};
inline const AvailabilityThresholds kHoursPerRegion{10.0, 100.0, "hours"};
inline const AvailabilityThresholds kUsersPerRegion{10.0, 100.0, "users"};
}  // namespace availability

/// Clamps to 0.2 at or below `very_low`, to 1.0 at or above `very_high`,
/// linear in between. Negative values are rejected.
QualityScore availability_quality(double value, const AvailabilityThresholds& thresholds);

enum class TNorm { kMinimum, kProduct, kLukasiewicz };
enum class TConorm { kMaximum, kProbabilisticSum, kBoundedSum };

TNorm parse_tnorm(const std::string& name);
TConorm parse_tconorm(const std::string& name);
std::string to_string(TNorm n);
std::string to_string(TConorm n);

template <typename Scalar>
Scalar t_norm(TNorm norm, Scalar a, Scalar b) {
  switch (norm) {
    case TNorm::kProduct:
      return a * b;
    case TNorm::kLukasiewicz:
      return std::max(Scalar(0), a + b - Scalar(1));
    case TNorm::kMinimum:
    default:
      return std::min(a, b);
  }
}

template <typename Scalar>
Scalar t_conorm(TConorm conorm, Scalar a, Scalar b) {
  switch (conorm) {
    case TConorm::kProbabilisticSum:
      return a + b - a * b;
    case TConorm::kBoundedSum:
      return std::min(Scalar(1), a + b);
    case TConorm::kMaximum:
    default:
      return std::max(a, b);
  }
}

/// Fuzzy intersection: the combined quality when independent error sources
/// all apply to one measurement.
QualityScore combine_intersect(const QualityScore& m1, const QualityScore& m2,
                               TNorm norm = TNorm::kMinimum);
/// Fuzzy union: the combined quality when two measurements of the same
/// quantity corroborate each other.
QualityScore combine_union(const QualityScore& m1, const QualityScore& m2,
                           TConorm conorm = TConorm::kMaximum);
/// Left fold of combine_intersect; an empty span yields 1.0.
QualityScore intersect_all(std::span<const QualityScore> scores, TNorm norm = TNorm::kMinimum);

struct SourceLookup {
  QualityScore score;
  bool known = true;
};

/// Quality of a device class or external data source.
class SourceQualityTable {
 public:
  SourceQualityTable();  // smartwatch, smartphone, official statistics, map providers
  explicit SourceQualityTable(std::map<std::string, double> table);

  /// Unknown sources score 0.6 and come back with known == false.
  SourceLookup lookup(const std::string& source) const;
  const std::map<std::string, double>& entries() const { return table_; }

 private:
  std::map<std::string, double> table_;
};

SourceLookup source_quality(const std::string& source);

struct QualityConfig {
  AvailabilityThresholds accel = availability::kAccelHoursPerDay;
  AvailabilityThresholds gps = availability::kGpsHoursPerDay;
  AvailabilityThresholds region_hours = availability::kHoursPerRegion;
  AvailabilityThresholds region_users = availability::kUsersPerRegion;
  SourceQualityTable sources;
  TNorm norm = TNorm::kMinimum;
  TConorm conorm = TConorm::kMaximum;
  double default_indicator_accuracy = kQualityHigh;
  std::map<std::string, double> indicator_accuracy;

  double accuracy_of(const std::string& indicator) const;
  static QualityConfig from_json(const nlohmann::json& j);
};

// ---- audit report -------------------------------------------------------

struct DailyAvailability {
  std::string date;
  double accel_hours = 0.0;
  double gps_hours = 0.0;
};

struct ParticipantQualityInput {
  std::string participant;
  std::string device_class;
  std::vector<DailyAvailability> days;
  std::vector<std::string> indicators;
};

struct RegionQualityInput {
  std::string cell;
  int n_users = 0;
  double data_hours = 0.0;
};

struct QualityDataset {
  std::vector<ParticipantQualityInput> participants;
  std::vector<RegionQualityInput> regions;
};

struct ParticipantQualityRow {
  std::string participant;
  int days = 0;
  double mean_accel_hours = 0.0;
  double mean_gps_hours = 0.0;
  double accel_quality = 0.0;
  double gps_quality = 0.0;
  double source_quality = 0.0;
  double accuracy_quality = 0.0;
  double combined = 0.0;
};

struct RegionQualityRow {
  std::string cell;
  int n_users = 0;
  double data_hours = 0.0;
  double users_quality = 0.0;
  double hours_quality = 0.0;
  double combined = 0.0;
};

struct QualityReport {
  std::vector<ParticipantQualityRow> participants;
  std::vector<RegionQualityRow> regions;

  nlohmann::json to_json() const;
  std::string participants_csv() const;
  std::string regions_csv() const;
};

/// Tabulates availability, source and indicator-accuracy scores and their
/// combination. Rows are sorted by participant id and cell code.
QualityReport quality_report(const QualityDataset& dataset, const QualityConfig& config);

}  // namespace geobehave

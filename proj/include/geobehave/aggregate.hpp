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
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "geobehave/calendar.hpp"
#include "geobehave/geocell.hpp"
#include "geobehave/indicators.hpp"
#include "geobehave/quality.hpp"
#include "nlohmann/json.hpp"

namespace geobehave {

/// Habits key a tuple on where the participant lives, resources on where the
/// observation was made.
enum class TupleMode { kHabits, kResources };
std::string to_string(TupleMode m);
TupleMode parse_tuple_mode(const std::string& s);

/// (U, G, T, B_i) plus quality and the tags filters need.
struct IndicatorTuple {
  std::string u;
  GeoCell g{"s"};
  std::string t;  // time key at the indicator's granularity
  Window window;
  std::string name;
  IndicatorScalar value;
  double quality = 1.0;
  TupleMode mode = TupleMode::kHabits;
  DayType day_type = DayType::kNonSchool;

  nlohmann::json to_json() const;
  static IndicatorTuple from_json(const nlohmann::json& j);
};

// ---- filtering ------------------------------------------------------------

struct ParticipantAttributes {
  std::string age_band;
  std::string gender;
};

/// Condition on the participant's mean of another indicator.
struct IndicatorCondition {
  enum class Op { kLess, kLessEqual, kGreater, kGreaterEqual };
  std::string indicator;
  Op op = Op::kLessEqual;
  double threshold = 0.0;

  bool holds(double v) const;
};

struct Filter {
  std::set<std::string> age_bands;  // empty: any
  std::set<std::string> genders;    // empty: any
  std::optional<DayType> day_type;
  std::optional<Window> time_range;  // tuple window must start in [start, end)
  // Quality gate: tuples below this quality are left out, users included.
  std::optional<double> min_quality;
  std::vector<IndicatorCondition> conditions;

  bool empty() const;
  static Filter from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

/// What a filter needs to know beyond the tuple itself.
struct FilterContext {
  std::map<std::string, ParticipantAttributes> participants;
  // participant -> indicator -> mean value
  std::map<std::string, std::map<std::string, double>> user_means;
};

using TuplePredicate = std::function<bool(const IndicatorTuple&)>;
TuplePredicate compile(const Filter& f, const FilterContext& ctx);
TuplePredicate conjunction(TuplePredicate a, TuplePredicate b);

/// Per-participant means of numeric tuples, for IndicatorCondition lookups.
std::map<std::string, double> participant_means(std::span<const IndicatorTuple> tuples);

// ---- aggregation ------------------------------------------------------------

enum class AggregateFn { kF1, kF2, kF3, kF4 };
std::string to_string(AggregateFn f);
AggregateFn parse_aggregate_fn(const std::string& s);

/// Explicit edges [e0, e1), ..., [e_{M-1}, e_M] for numeric values, or a
/// category list for categorical ones.
struct Bins {
  std::vector<double> edges;
  std::vector<std::string> categories;
};

struct AggregateOptions {
  bool quality_weighted = false;  // f1/f2 weights are tuple qualities
  bool strict_below = false;      // f4 uses < instead of <=
  AvailabilityThresholds users = availability::kUsersPerRegion;
  TNorm norm = TNorm::kMinimum;
};

struct AggregateResult {
  GeoCell cell{"s"};
  GeoCell requested{"s"};
  Window window;
  AggregateFn function = AggregateFn::kF1;
  std::string indicator;
  TupleMode mode = TupleMode::kHabits;
  std::optional<double> value;  // f1, f2, f4
  std::vector<std::string> labels;  // f3
  std::vector<double> pmf;          // f3
  long n_participants = 0;
  long n_tuples = 0;
  long n_clamped = 0;
  double quality = 0.0;
  bool suppressed = false;
  std::string reason;

  nlohmann::json to_json() const;
};

AggregateResult f1_avg_over_individuals(std::span<const IndicatorTuple> tuples, const GeoCell& cell,
                                        const TuplePredicate& filter = {},
                                        const AggregateOptions& opt = {});
AggregateResult f2_weighted_avg(std::span<const IndicatorTuple> tuples, const GeoCell& cell,
                                const TuplePredicate& filter = {}, const AggregateOptions& opt = {});
/// Categorical values: each participant's category shares, averaged over
/// participants. Numeric values: histogram of participant means.
AggregateResult f3_distribution(std::span<const IndicatorTuple> tuples, const GeoCell& cell,
                                const Bins& bins, const TuplePredicate& filter = {},
                                const AggregateOptions& opt = {});
AggregateResult f4_fraction_below(std::span<const IndicatorTuple> tuples, const GeoCell& cell,
                                  double threshold, const TuplePredicate& filter = {},
                                  const AggregateOptions& opt = {});

struct AggregateRequest {
  std::string indicator;
  AggregateFn function = AggregateFn::kF1;
  GeoCell cell{"s"};
  TupleMode mode = TupleMode::kHabits;
  Bins bins;
  double threshold = 0.0;
};

inline constexpr int kDefaultKMin = 10;
inline constexpr int kDefaultCellLength = 6;
inline constexpr int kDefaultMinLength = 4;

/// Aggregates at the requested cell when it holds at least k_min distinct
/// participants, otherwise at successively shorter prefixes down to min_len;
/// beyond that the result is suppressed.
AggregateResult privacy_gate(const AggregateRequest& req, std::span<const IndicatorTuple> tuples,
                             int k_min = kDefaultKMin, int min_len = kDefaultMinLength,
                             const TuplePredicate& filter = {}, const AggregateOptions& opt = {});

/// GeoJSON FeatureCollection, one Polygon per non-suppressed cell, in cell order.
nlohmann::json export_choropleth(std::span<const AggregateResult> results);

// ---- tuple store ------------------------------------------------------------

/// JSONL partitions <root>/<mode>/<indicator>/<4-char prefix>.jsonl.
std::vector<std::filesystem::path> write_tuple_store(const std::filesystem::path& root,
                                                     std::vector<IndicatorTuple> tuples);
std::vector<IndicatorTuple> read_tuple_store(const std::filesystem::path& root, TupleMode mode,
                                             const std::string& indicator);

}  // namespace geobehave

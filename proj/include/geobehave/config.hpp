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
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "geobehave/aggregate.hpp"
#include "geobehave/derived.hpp"
#include "geobehave/indicators.hpp"
#include "geobehave/mobility.hpp"
#include "geobehave/quality.hpp"
#include "nlohmann/json.hpp"

namespace geobehave {

/// Environment variable that, when set, replaces the --config path.
inline constexpr const char* kConfigEnvVar = "GEOBEHAVE_CONFIG";

struct RunPaths {
  std::filesystem::path generator_spec;
  std::filesystem::path input;  // participants.json, calendars.json, streams/
  std::filesystem::path pois;
  std::filesystem::path taxonomy;
  std::filesystem::path stats;
  std::filesystem::path region_map;
  std::filesystem::path output;
};

struct AggregateSettings {
  std::string indicator = "activity_counts";
  AggregateFn function = AggregateFn::kF1;
  TupleMode mode = TupleMode::kHabits;
  std::string cell;  // empty: every cell at cell_length
  Filter filter;
  Bins bins;
  double threshold = 0.0;
  AggregateOptions options;
};

struct ChoroplethSettings {
  std::string indicator = "activity_counts";
  AggregateFn function = AggregateFn::kF1;
  TupleMode mode = TupleMode::kResources;
  int cell_length = 7;
};

/// Everything a run needs, from one JSON document. Relative paths resolve
/// against the directory of the config file.
struct RunConfig {
  std::uint64_t seed = 1;
  RunPaths paths;
  int cell_length = kDefaultCellLength;
  int store_cell_length = 7;
  int k_min = kDefaultKMin;
  int min_len = kDefaultMinLength;
  int lec_cell_length = 6;
  StopParams stop;
  PoiMatchParams poi_match;
  TransportParams transport;
  ExtractionConfig extraction;
  DerivedConfig derived;
  QualityConfig quality;
  IndicatorCatalog catalog = IndicatorCatalog::standard();
  AggregateSettings aggregate;
  ChoroplethSettings choropleth;
  nlohmann::json document;  // effective config after overrides

  static RunConfig from_json(const nlohmann::json& j, const std::filesystem::path& base_dir);
  /// Reads `path` and applies `key.path=value` overrides; values parse as
  /// JSON when they can and are taken as strings otherwise.
  static RunConfig load(const std::filesystem::path& path, const std::vector<std::string>& overrides = {});
  /// Checks parameter ranges; file existence is checked by each command.
  void validate() const;
};

/// Sets a dotted key in a JSON document, creating objects on the way.
void apply_override(nlohmann::json& doc, const std::string& assignment);

}  // namespace geobehave

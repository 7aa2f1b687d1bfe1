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
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "geobehave/geocell.hpp"
#include "geobehave/poi.hpp"
#include "geobehave/quality.hpp"
#include "nlohmann/json.hpp"

namespace geobehave {

struct MappingStats {
  long mapped = 0;
  long unmapped = 0;
  std::map<std::string, long> unmapped_raw;  // "source|raw_category" -> count
};

/// Maps provider-specific categories onto the internal taxonomy. Rows for a
/// specific source take precedence over rows whose source is "*"; anything
/// left over maps to `other`.
class TaxonomyMapper {
 public:
  TaxonomyMapper() = default;
  /// CSV with header `source,raw_category,category`.
  static TaxonomyMapper from_csv_text(std::string_view text);
  static TaxonomyMapper from_csv(const std::filesystem::path& path);

  void add(const std::string& source, const std::string& raw_category, const std::string& category);
  std::string map(const std::string& source, const std::string& raw_category, MappingStats* stats = nullptr) const;

 private:
  std::map<std::pair<std::string, std::string>, std::string> by_source_;
  std::map<std::string, std::string> any_source_;
};

/// Reads a GeoJSON FeatureCollection of Point features whose properties carry
/// `source` and `raw_category`.
std::vector<Poi> load_poi_snapshot(const nlohmann::json& geojson, const TaxonomyMapper& mapper,
                                   MappingStats* stats = nullptr);
std::vector<Poi> load_poi_snapshot(const std::filesystem::path& path, const TaxonomyMapper& mapper,
                                   MappingStats* stats = nullptr);
nlohmann::json poi_snapshot_to_geojson(std::span<const Poi> pois);

using Pmf = std::map<std::string, double>;
using LecScalar = std::variant<double, bool, Pmf>;

struct LecValue {
  GeoCell cell;
  std::string name;
  LecScalar value;
  double quality = 1.0;

  nlohmann::json to_json() const;
};

/// Named groups of taxonomy categories, e.g. "food_outlets".
const std::map<std::string, std::set<std::string>>& category_groups();
/// Group members when `name` is a group, otherwise {name}.
std::set<std::string> categories_for(const std::string& name);

long count_in_cell(std::span<const Poi> pois, const std::string& category, const GeoCell& cell);
/// POIs of `category` (or group) whose haversine distance to `p` is at most `radius_m`.
long count_within_radius(const GeoPoint& p, std::span<const Poi> pois, const std::string& category,
                         double radius_m);
double density_per_km2(long count, double area_km2);

/// Urban-environment LECs of one cell (length >= 4): availability and count
/// per facility group, food-outlet and recreation densities, radius counts
/// around the cell center, recreation-type distribution and the open-space
/// share of the surrounding 6-character neighborhood.
std::vector<LecValue> compute_cell_lecs(std::span<const Poi> pois, const GeoCell& cell,
                                        const SourceQualityTable& sources = {});

struct StatRow {
  std::string region;
  double avg_income = 0.0;
  double unemployment_rate = 0.0;
  Pmf education;
};

/// Regional statistics plus the region -> cell-prefix map. A region key
/// that is itself a geohash and absent from the map covers its own cell.
struct StatTable {
  std::vector<StatRow> rows;
  std::map<std::string, std::vector<std::string>> region_cells;

  /// Stats CSV `region,avg_income,unemployment_rate,edu_<level>...`; map CSV
  /// `region,cell_prefix`.
  static StatTable from_csv_text(std::string_view stats_csv, std::string_view region_map_csv);
  static StatTable from_csv(const std::filesystem::path& stats, const std::filesystem::path& region_map);
  void validate() const;
};

struct Omission {
  std::string cell;
  std::string reason;
};

struct JoinResult {
  std::vector<LecValue> values;
  std::vector<Omission> omitted;
};

/// Each cell takes the values of the most specific covering region
/// (longest prefix, then region id). Quality is that of official statistics.
JoinResult join_stats(std::span<const GeoCell> cells, const StatTable& table,
                      const SourceQualityTable& sources = {});

}  // namespace geobehave

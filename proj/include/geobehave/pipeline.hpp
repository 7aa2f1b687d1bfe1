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
#include <optional>
#include <string>
#include <vector>

#include "geobehave/aggregate.hpp"
#include "geobehave/config.hpp"

namespace geobehave {

// Stage directories under the configured output directory.
namespace layout {
inline constexpr const char* kCorpus = "corpus";
inline constexpr const char* kIngest = "ingest";
inline constexpr const char* kIndicators = "indicators";
inline constexpr const char* kStore = "store";
inline constexpr const char* kProfiles = "profiles";
inline constexpr const char* kLec = "lec";
inline constexpr const char* kAggregate = "aggregate";
inline constexpr const char* kQuality = "quality";
}  // namespace layout

/// Writes the synthetic corpus and its ground truth under paths.input.
void cmd_generate(const RunConfig& config, std::optional<std::uint64_t> seed = std::nullopt);
/// Validates every participant's streams; writes a manifest, per-day
/// availability and rejected rows. Streams stay where they are.
void cmd_ingest(const RunConfig& config);
/// Base, transport and derived indicators per participant plus the tuple store.
void cmd_indicators(const RunConfig& config);
/// Timelines, behavior profiles per day type and their dot graphs.
void cmd_profile(const RunConfig& config);
void cmd_lec(const RunConfig& config);
/// Privacy-gated aggregates for config.aggregate; returns the results it wrote.
std::vector<AggregateResult> cmd_aggregate(const RunConfig& config,
                                           const std::optional<std::filesystem::path>& geojson = std::nullopt);
void cmd_quality(const RunConfig& config);
/// Gated aggregates of config.choropleth at every occupied cell, as GeoJSON.
void cmd_export_choropleth(const RunConfig& config);

/// Every stage in order, generate included when a generator spec is configured.
void run_all(const RunConfig& config);

}  // namespace geobehave

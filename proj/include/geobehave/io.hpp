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
#include <string>
#include <string_view>
#include <vector>

#include "nlohmann/json.hpp"

namespace geobehave::io {

/// Shortest round-trip decimal form; integers print without a fraction.
std::string format_number(double v);
// Appends `v` as a quoted, escaped JSON string.
void append_json_string(std::string& out, std::string_view v);
// Appends `v` exactly as nlohmann::json::dump() prints a double.
void append_json_number(std::string& out, double v);
/// Fixed number of decimals, trailing zeros kept.
std::string format_fixed(double v, int decimals);

std::vector<std::string_view> split(std::string_view line, char sep);
bool parse_double(std::string_view text, double& out);
bool parse_int64(std::string_view text, long long& out);

std::string read_file(const std::filesystem::path& path);
/// Writes through a temporary sibling and renames, creating parent dirs.
void write_file(const std::filesystem::path& path, std::string_view content);

nlohmann::json read_json(const std::filesystem::path& path);
void write_json(const std::filesystem::path& path, const nlohmann::json& j);
std::vector<nlohmann::json> read_jsonl(const std::filesystem::path& path);
std::string to_jsonl(const std::vector<nlohmann::json>& rows);

}  // namespace geobehave::io

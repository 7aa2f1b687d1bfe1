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

#include <string>

#include "geobehave/geocell.hpp"

namespace geobehave {

/// A mapped venue after taxonomy mapping.
struct Poi {
  GeoPoint location;
  std::string source;
  std::string raw_category;
  std::string category;
};

// Internal taxonomy values.
namespace poi_category {
inline const std::string kHome = "home";
inline const std::string kUnknown = "unknown";
inline const std::string kOther = "other";
inline const std::string kSchool = "school";
inline const std::string kFastFood = "fast_food";
}  // namespace poi_category

}  // namespace geobehave

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

#include <compare>
#include <string>
#include <string_view>

namespace geobehave {

/// Mean Earth radius (IUGG) used for all great-circle computations.
inline constexpr double kEarthRadiusKm = 6371.0088;
inline constexpr double kEarthRadiusM = kEarthRadiusKm * 1000.0;

inline constexpr int kMinCellLength = 1;
inline constexpr int kMaxCellLength = 12;

struct GeoPoint {
  double lat = 0.0;
  double lon = 0.0;

  friend bool operator==(const GeoPoint&, const GeoPoint&) = default;
};

/// Throws ValidationError for NaN or out-of-range coordinates.
GeoPoint make_point(double lat, double lon);
bool is_valid(const GeoPoint& p);

/// Great-circle distance in meters on the spherical Earth.
double haversine_m(const GeoPoint& a, const GeoPoint& b);

struct BoundingBox {
  double min_lat = 0.0;
  double max_lat = 0.0;
  double min_lon = 0.0;
  double max_lon = 0.0;

  bool contains(const GeoPoint& p) const {
    return p.lat >= min_lat && p.lat <= max_lat && p.lon >= min_lon && p.lon <= max_lon;
  }
  bool contains(const BoundingBox& b) const {
    return b.min_lat >= min_lat && b.max_lat <= max_lat && b.min_lon >= min_lon &&
           b.max_lon <= max_lon;
  }
  GeoPoint center() const { return {(min_lat + max_lat) / 2.0, (min_lon + max_lon) / 2.0}; }
  double height_deg() const { return max_lat - min_lat; }
  double width_deg() const { return max_lon - min_lon; }
};

/// A geohash cell. The code is lowercase base32, 1-12 characters; every
/// prefix of a valid code is itself a valid, spatially containing cell.
class GeoCell {
 public:
  /// Validates alphabet and length; throws ValidationError.
  explicit GeoCell(std::string code);

  const std::string& code() const { return code_; }
  int length() const { return static_cast<int>(code_.size()); }
  /// True if `other` lies inside this cell (this code is a prefix of it).
  bool contains(const GeoCell& other) const {
    return other.code_.compare(0, code_.size(), code_) == 0;
  }

  friend auto operator<=>(const GeoCell&, const GeoCell&) = default;

 private:
  std::string code_;
};

bool is_valid_code(std::string_view code);

GeoCell encode(const GeoPoint& p, int precision);
BoundingBox decode(const GeoCell& c);
/// The `new_len`-character prefix; throws ArgumentError if longer than `c`.
GeoCell coarsen(const GeoCell& c, int new_len);
/// Surface area of the decoded box on the sphere, km².
double cell_area_km2(const GeoCell& c);

}  // namespace geobehave

// Copyright 2026 The coexsim Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "coexsim/geometry.hpp"
#include "coexsim/scenario.hpp"

namespace coexsim {

/// Geodetic anchor of the local planar frame (the incumbent's location).
struct GeoOrigin {
  double lat_deg = 0.0;
  double lon_deg = 0.0;
};

struct LatLon {
  double lat_deg = 0.0;
  double lon_deg = 0.0;
};

/// Equirectangular projection about `origin`: x east, y north, meters.
Point2 project(const GeoOrigin& origin, const LatLon& p);
LatLon unproject(const GeoOrigin& origin, const Point2& p);

struct RecordError {
  std::size_t index = 0;  // feature index, or 1-based line number for CSV
  std::string message;
};

struct BuildingIngest {
  std::vector<Building> buildings;
  std::vector<RecordError> errors;
};

/// Reads a FeatureCollection of Polygon features (exterior ring only).
/// Height comes from a numeric "height" property (plain numbers and strings
/// like "12" or "12 m" are accepted), else `default_height_m`. Features with
/// other geometry types, degenerate or self-intersecting rings, or invalid
/// coordinates are reported in `errors` and skipped. Throws ParseError when
/// the document is not JSON or not a FeatureCollection.
BuildingIngest parse_buildings_geojson(std::string_view document, const GeoOrigin& origin,
                                       double default_height_m = 25.0);

struct CellSiteOptions {
  double default_height_m = 25.0;
  double nominal_power_dbm = 42.0;
  double down_tilt_deg = 10.0;
  int subarrays_per_sector = 4;
};

struct CellSiteIngest {
  std::vector<BaseStation> stations;
  std::vector<RecordError> errors;
};

/// Reads a comma-separated site list whose header names `lat` and `lon`
/// columns (case-insensitive) and optionally `height`. Each good row becomes a
/// BS with sectors centred at 0/120/240 degrees; ids follow row order. Bad rows
/// are reported by line number. Throws ParseError when the header lacks the
/// required columns.
CellSiteIngest parse_cell_sites_csv(std::string_view document, const GeoOrigin& origin,
                                    const CellSiteOptions& options = {});

/// Splits one CSV record (RFC 4180 quoting, no embedded newlines).
std::vector<std::string> split_csv_record(std::string_view line);

}  // namespace coexsim

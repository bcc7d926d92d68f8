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

#include "coexsim/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <optional>

#include <json.hpp>

#include "coexsim/error.hpp"
#include "coexsim/units.hpp"

namespace coexsim {

namespace {

constexpr double kEarthRadiusM = 6371008.8;

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Whole-field number; trailing unit text is accepted only when `allow_unit`.
std::optional<double> parse_number(std::string_view text, bool allow_unit = false) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || !std::isfinite(v)) return std::nullopt;
  const std::string_view rest = trim({end, static_cast<std::size_t>(text.data() + text.size() - end)});
  if (!rest.empty() && !(allow_unit && lower(rest) == "m")) return std::nullopt;
  return v;
}

bool valid_lat_lon(double lat, double lon) {
  return std::isfinite(lat) && std::isfinite(lon) && std::fabs(lat) <= 90.0 &&
         std::fabs(lon) <= 180.0;
}

std::optional<double> feature_height(const nlohmann::json& props) {
  if (!props.is_object()) return std::nullopt;
  const auto it = props.find("height");
  if (it == props.end() || it->is_null()) return std::nullopt;
  if (it->is_number()) return it->get<double>();
  if (it->is_string()) return parse_number(it->get_ref<const std::string&>(), true);
  return std::nullopt;
}

// Value of a string member, or "" when absent or of another type.
std::string string_member(const nlohmann::json& obj, const char* key) {
  const auto it = obj.find(key);
  return it != obj.end() && it->is_string() ? it->get<std::string>() : std::string();
}

}  // namespace

Point2 project(const GeoOrigin& origin, const LatLon& p) {
  const double cos_lat0 = std::cos(deg_to_rad(origin.lat_deg));
  return {kEarthRadiusM * deg_to_rad(p.lon_deg - origin.lon_deg) * cos_lat0,
          kEarthRadiusM * deg_to_rad(p.lat_deg - origin.lat_deg)};
}

LatLon unproject(const GeoOrigin& origin, const Point2& p) {
  const double cos_lat0 = std::cos(deg_to_rad(origin.lat_deg));
  return {origin.lat_deg + rad_to_deg(p.y / kEarthRadiusM),
          origin.lon_deg + rad_to_deg(p.x / (kEarthRadiusM * cos_lat0))};
}

BuildingIngest parse_buildings_geojson(std::string_view document, const GeoOrigin& origin,
                                       double default_height_m) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(document);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("buildings: ") + e.what(), e.byte);
  } catch (const nlohmann::json::exception& e) {
    // Out-of-range numbers surface here rather than as parse errors.
    throw ParseError(std::string("buildings: ") + e.what(), 0);
  }
  if (!doc.is_object() || string_member(doc, "type") != "FeatureCollection") {
    throw ParseError("buildings: not a GeoJSON FeatureCollection", 0);
  }
  const auto features = doc.find("features");
  if (features == doc.end() || !features->is_array()) {
    throw ParseError("buildings: FeatureCollection without a features array", 0);
  }

  BuildingIngest out;
  for (std::size_t i = 0; i < features->size(); ++i) {
    const nlohmann::json& f = (*features)[i];
    auto fail = [&](std::string msg) { out.errors.push_back({i, std::move(msg)}); };
    if (!f.is_object()) {
      fail("feature is not an object");
      continue;
    }
    const auto geom = f.find("geometry");
    if (geom == f.end() || !geom->is_object()) {
      fail("missing geometry");
      continue;
    }
    const std::string type = string_member(*geom, "type");
    if (type != "Polygon") {
      fail("unsupported geometry type '" + type + "'");
      continue;
    }
    const auto coords = geom->find("coordinates");
    if (coords == geom->end() || !coords->is_array() || coords->empty() ||
        !(*coords)[0].is_array()) {
      fail("polygon without an exterior ring");
      continue;
    }

    std::vector<Point2> ring;
    bool bad = false;
    for (const auto& pos : (*coords)[0]) {
      if (!pos.is_array() || pos.size() < 2 || !pos[0].is_number() || !pos[1].is_number()) {
        bad = true;
        break;
      }
      const double lon = pos[0].get<double>();
      const double lat = pos[1].get<double>();
      if (!valid_lat_lon(lat, lon)) {
        bad = true;
        break;
      }
      ring.push_back(project(origin, {lat, lon}));
    }
    if (bad) {
      fail("invalid coordinate in exterior ring");
      continue;
    }
    if (ring.size() > 1 && ring.front() == ring.back()) ring.pop_back();
    if (ring.size() < 3) {
      fail("polygon has fewer than 3 vertices");
      continue;
    }
    if (!is_simple_polygon(ring)) {
      fail("polygon is degenerate or self-intersecting");
      continue;
    }

    double height = default_height_m;
    if (const auto props = f.find("properties"); props != f.end()) {
      if (props->is_object() && props->contains("height") && !(*props)["height"].is_null()) {
        const auto h = feature_height(*props);
        if (!h || !(*h > 0.0)) {
          fail("height must be a positive number");
          continue;
        }
        height = *h;
      }
    }
    out.buildings.push_back({std::move(ring), height});
  }
  return out;
}

std::vector<std::string> split_csv_record(std::string_view line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  fields.push_back(std::move(cur));
  return fields;
}

CellSiteIngest parse_cell_sites_csv(std::string_view document, const GeoOrigin& origin,
                                    const CellSiteOptions& options) {
  std::vector<std::string_view> lines;
  for (std::size_t pos = 0; pos <= document.size();) {
    std::size_t end = document.find('\n', pos);
    if (end == std::string_view::npos) end = document.size();
    std::string_view line = document.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    pos = end + 1;
  }
  if (!lines.empty() && lines[0].starts_with("\xEF\xBB\xBF")) lines[0].remove_prefix(3);

  std::optional<std::size_t> lat_col, lon_col, height_col;
  std::size_t header_line = 0;
  for (; header_line < lines.size() && trim(lines[header_line]).empty(); ++header_line) {
  }
  if (header_line == lines.size()) throw ParseError("cell sites: missing header row", 0, 1);
  const auto header = split_csv_record(lines[header_line]);
  for (std::size_t c = 0; c < header.size(); ++c) {
    const std::string name = lower(trim(header[c]));
    if (name == "lat") lat_col = c;
    if (name == "lon") lon_col = c;
    if (name == "height") height_col = c;
  }
  if (!lat_col || !lon_col) {
    throw ParseError("cell sites: header must name lat and lon columns", 0, header_line + 1);
  }

  CellSiteIngest out;
  for (std::size_t li = header_line + 1; li < lines.size(); ++li) {
    if (trim(lines[li]).empty()) continue;
    const std::size_t line_no = li + 1;
    const auto fields = split_csv_record(lines[li]);
    auto field = [&](std::size_t c) -> std::string_view {
      return c < fields.size() ? std::string_view(fields[c]) : std::string_view();
    };
    const auto lat = parse_number(field(*lat_col));
    const auto lon = parse_number(field(*lon_col));
    if (!lat || !lon) {
      out.errors.push_back({line_no, "lat/lon must be numbers"});
      continue;
    }
    if (!valid_lat_lon(*lat, *lon)) {
      out.errors.push_back({line_no, "lat/lon out of range"});
      continue;
    }
    double height = options.default_height_m;
    if (height_col && !trim(field(*height_col)).empty()) {
      const auto h = parse_number(field(*height_col));
      if (!h || !(*h > 0.0)) {
        out.errors.push_back({line_no, "height must be a positive number"});
        continue;
      }
      height = *h;
    }
    const Point2 xy = project(origin, {*lat, *lon});
    BaseStation bs;
    bs.id = static_cast<int>(out.stations.size());
    bs.position = {xy.x, xy.y, 0.0};
    bs.height_m = height;
    bs.sectors = default_sectors(0.0, options.subarrays_per_sector);
    bs.nominal_power_dbm = options.nominal_power_dbm;
    bs.down_tilt_deg = options.down_tilt_deg;
    out.stations.push_back(std::move(bs));
  }
  return out;
}

}  // namespace coexsim

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

#include "coexsim/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "coexsim/error.hpp"
#include "coexsim/rng.hpp"
#include "coexsim/units.hpp"
#include "json.hpp"

namespace coexsim {

using nlohmann::json;

std::vector<double> PowerRange::offsets() const {
  std::vector<double> out;
  if (!(step_db > 0.0) || min_offset_db > max_offset_db) return out;
  const int count = static_cast<int>(std::floor((max_offset_db - min_offset_db) / step_db + 1e-9)) + 1;
  out.reserve(count);
  for (int i = 0; i < count; ++i) out.push_back(min_offset_db + i * step_db);
  return out;
}

std::size_t Scenario::ue_count() const {
  std::size_t n = 0;
  for (const auto& bs : base_stations) {
    for (const auto& sec : bs.sectors) n += sec.ues.size();
  }
  return n;
}

double thermal_noise_dbm(double bandwidth_mhz, double noise_figure_db) {
  return kThermalNoiseDbmPerHz + 10.0 * std::log10(bandwidth_mhz * 1e6) + noise_figure_db;
}

// ---------------------------------------------------------------------------
// Validation

std::string ValidationReport::to_string() const {
  std::ostringstream os;
  for (const auto& i : issues) os << i.path << ": " << i.message << '\n';
  return os.str();
}

namespace {

class Checker {
 public:
  void require(bool ok, const std::string& path, const std::string& msg) {
    if (!ok) report_.issues.push_back({path, msg});
  }
  void point(const GeoPoint& p, const std::string& path) {
    require(std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.z), path,
            "coordinates must be finite");
    require(p.z >= 0.0, path, "z must be >= 0");
  }
  ValidationReport take() { return std::move(report_); }

 private:
  ValidationReport report_;
};

bool sectors_partition_circle(const std::vector<Sector>& sectors) {
  std::vector<double> centers;
  for (const auto& s : sectors) centers.push_back(wrap_degrees(s.azimuth_center_deg));
  std::sort(centers.begin(), centers.end());
  for (std::size_t i = 0; i < centers.size(); ++i) {
    const double next = i + 1 < centers.size() ? centers[i + 1] : centers[0] + 360.0;
    if (std::fabs(next - centers[i] - 120.0) > 1e-6) return false;
  }
  return true;
}

}  // namespace

ValidationReport validate_scenario(const Scenario& s) {
  Checker c;
  c.require(s.power_range.min_offset_db <= s.power_range.max_offset_db, "scenario.power_range",
            "min_offset_db must be <= max_offset_db");
  c.require(s.power_range.step_db > 0.0, "scenario.power_range.step_db", "step must be > 0");
  c.require(s.carrier_ghz > 0.0, "scenario.carrier_ghz", "carrier frequency must be > 0");
  if (s.rain_model_enabled) {
    c.require(s.carrier_ghz > kRainModelMinGhz && s.carrier_ghz < kRainModelMaxGhz,
              "scenario.carrier_ghz", "must lie in (10, 100) GHz when the rain model is enabled");
  }
  c.require(s.bandwidth_mhz > 0.0, "scenario.bandwidth_mhz", "bandwidth must be > 0");
  c.require(s.coverage_radius_m > 0.0, "scenario.coverage_radius_m", "coverage radius must be > 0");
  c.require(s.array.rows >= 1 && s.array.cols >= 1, "scenario.array", "rows and cols must be >= 1");
  c.require(s.array.dx > 0.0 && s.array.dy > 0.0, "scenario.array", "element spacing must be > 0");
  c.require(s.codebook_size >= 1, "scenario.codebook_size", "codebook needs at least one beam");
  c.require(s.weight > 0.0 && s.weight < 1.0, "scenario.weight", "weight must lie in (0, 1)");
  c.require(std::isfinite(s.rate_qos_bps_hz) && s.rate_qos_bps_hz >= 0.0,
            "scenario.rate_qos_bps_hz", "rate QoS must be finite and >= 0");
  c.require(std::isfinite(s.ue_noise_power_dbm), "scenario.ue_noise_power_dbm", "must be finite");
  c.require(s.shadow.sigma_los_db >= 0.0 && s.shadow.sigma_nlos_db >= 0.0, "scenario.shadow",
            "shadow fading sigmas must be >= 0");

  c.point(s.fss.position, "fss.position");
  c.require(s.fss.elevation_deg >= 0.0 && s.fss.elevation_deg <= 90.0, "fss.elevation_deg",
            "elevation must lie in [0, 90] degrees");
  c.require(std::isfinite(s.fss.noise_power_dbm), "fss.noise_power_dbm", "must be finite");
  c.require(std::isfinite(s.fss.max_gain_dbi), "fss.max_gain_dbi", "must be finite");

  std::vector<int> ids;
  for (std::size_t k = 0; k < s.base_stations.size(); ++k) {
    const BaseStation& bs = s.base_stations[k];
    const std::string bp = "base_stations[" + std::to_string(k) + "]";
    ids.push_back(bs.id);
    c.point(bs.position, bp + ".position");
    c.require(bs.height_m > 0.0, bp + ".height_m", "height must be > 0");
    c.require(std::isfinite(bs.nominal_power_dbm), bp + ".nominal_power_dbm", "must be finite");
    c.require(bs.sectors.size() == 3, bp + ".sectors", "a base station needs exactly 3 sectors");
    if (bs.sectors.size() == 3) {
      c.require(sectors_partition_circle(bs.sectors), bp + ".sectors",
                "sector spans must be disjoint 120 degree spans covering [0, 360)");
    }
    for (std::size_t j = 0; j < bs.sectors.size(); ++j) {
      const Sector& sec = bs.sectors[j];
      const std::string sp = bp + ".sectors[" + std::to_string(j) + "]";
      c.require(!sec.subarrays.empty(), sp + ".subarrays", "a sector needs at least one sub-array");
      for (std::size_t u = 0; u < sec.ues.size(); ++u) {
        const std::string up = sp + ".ues[" + std::to_string(u) + "].position";
        c.point(sec.ues[u].position, up);
        c.require(distance_2d(sec.ues[u].position, bs.position) <= s.coverage_radius_m + 1e-6, up,
                  "UE lies outside the coverage disc of its base station");
      }
    }
  }
  std::sort(ids.begin(), ids.end());
  c.require(std::adjacent_find(ids.begin(), ids.end()) == ids.end(), "base_stations",
            "base station ids must be unique");

  for (std::size_t b = 0; b < s.buildings.size(); ++b) {
    const Building& bld = s.buildings[b];
    const std::string p = "buildings[" + std::to_string(b) + "]";
    bool finite = true;
    for (const auto& v : bld.footprint) finite = finite && std::isfinite(v.x) && std::isfinite(v.y);
    c.require(finite, p + ".footprint", "vertices must be finite");
    c.require(finite && is_simple_polygon(bld.footprint), p + ".footprint",
              "polygon simple (non-self-intersecting) with at least 3 vertices");
    c.require(bld.height_m > 0.0, p + ".height_m", "height must be > 0");
  }
  return c.take();
}

// ---------------------------------------------------------------------------
// Synthetic deployments

std::vector<SubArray> default_subarrays(int count) {
  std::vector<SubArray> out;
  for (int m = 0; m < count; ++m) out.push_back({-60.0 + 120.0 * (m + 0.5) / count});
  return out;
}

std::vector<Sector> default_sectors(double first_center_deg, int subarrays_per_sector) {
  std::vector<Sector> out(3);
  for (int j = 0; j < 3; ++j) {
    out[j].azimuth_center_deg = wrap_degrees(first_center_deg + 120.0 * j);
    out[j].subarrays = default_subarrays(subarrays_per_sector);
  }
  return out;
}

namespace {

struct IndexedBuilding {
  BoundingBox box;
  const Building* building;
};

bool inside_any(const std::vector<IndexedBuilding>& index, Point2 p) {
  for (const auto& ib : index) {
    if (p.x < ib.box.min_x || p.x > ib.box.max_x || p.y < ib.box.min_y || p.y > ib.box.max_y) {
      continue;
    }
    if (point_in_polygon(p, ib.building->footprint)) return true;
  }
  return false;
}

// Point uniform by area in the annulus sector [r_min, r_max] x [az0, az0+span).
Point2 sample_wedge(UniformStream& rng, Point2 center, double r_min, double r_max,
                    double az0_deg, double span_deg) {
  const double r = std::sqrt(rng.uniform(r_min * r_min, r_max * r_max));
  const double az = deg_to_rad(az0_deg + span_deg * rng.next());
  return {center.x + r * std::sin(az), center.y + r * std::cos(az)};
}

constexpr std::uint64_t kStreamBs = 0xB5;
constexpr std::uint64_t kStreamBuildings = 0xB1D;
constexpr std::uint64_t kStreamUes = 0x0E5;

}  // namespace

void populate_ues(Scenario& s, int ues_per_sector, double ue_height_m, double min_distance_m,
                  std::uint64_t seed) {
  if (ues_per_sector < 0) throw std::invalid_argument("ues_per_sector must be >= 0");
  if (ues_per_sector > 0 && !(s.coverage_radius_m > min_distance_m)) {
    throw std::invalid_argument("coverage radius leaves no area for UE placement");
  }
  std::vector<IndexedBuilding> index;
  index.reserve(s.buildings.size());
  for (const auto& b : s.buildings) index.push_back({bounding_box(b.footprint), &b});

  UniformStream rng(seed);
  int next_id = 0;
  for (auto& bs : s.base_stations) {
    const Point2 c{bs.position.x, bs.position.y};
    for (auto& sec : bs.sectors) {
      sec.ues.clear();
      for (int u = 0; u < ues_per_sector; ++u) {
        Point2 p{};
        for (int attempt = 0; attempt < 32; ++attempt) {
          p = sample_wedge(rng, c, min_distance_m, s.coverage_radius_m,
                           sec.azimuth_center_deg - 60.0, 120.0);
          if (!inside_any(index, p)) break;
        }
        sec.ues.push_back({next_id++, {p.x, p.y, ue_height_m}});
      }
    }
  }
}

Scenario generate_synthetic_scenario(const GeneratorParams& p, std::uint64_t seed) {
  if (p.num_bs < 0 || p.ues_per_sector < 0 || p.num_buildings < 0) {
    throw std::invalid_argument("generator counts must be >= 0");
  }
  if (p.subarrays_per_sector < 1) throw std::invalid_argument("need at least one sub-array per sector");
  if (p.num_bs > 0 && !(p.deployment_radius_m > p.min_bs_distance_m)) {
    throw std::invalid_argument("deployment region has zero area");
  }
  if (!(p.coverage_radius_m > 0.0)) throw std::invalid_argument("coverage radius must be > 0");
  if (p.num_buildings > 0 &&
      !(p.building_height_min_m > 0.0 && p.building_height_min_m <= p.building_height_max_m &&
        p.building_side_min_m > 0.0 && p.building_side_min_m <= p.building_side_max_m)) {
    throw std::invalid_argument("building size/height ranges must be positive and ordered");
  }
  if (!(p.bs_height_m > 0.0)) throw std::invalid_argument("BS height must be > 0");

  Scenario s;
  s.carrier_ghz = p.carrier_ghz;
  s.bandwidth_mhz = p.bandwidth_mhz;
  s.coverage_radius_m = p.coverage_radius_m;
  s.array = make_array_config(p.array_rows, p.array_cols, p.carrier_ghz);
  s.codebook_size = p.codebook_size;
  s.ue_noise_power_dbm = thermal_noise_dbm(p.bandwidth_mhz, p.noise_figure_db);
  s.shadow = {p.sigma_los_db, p.sigma_nlos_db, seed};
  s.fss.position = {0.0, 0.0, p.fss_height_m};
  s.fss.boresight_azimuth_deg = p.fss_azimuth_deg;
  s.fss.elevation_deg = p.fss_elevation_deg;
  s.fss.max_gain_dbi = p.fss_max_gain_dbi;
  s.fss.noise_power_dbm = thermal_noise_dbm(p.bandwidth_mhz, p.noise_figure_db);

  const double nominal = p.nominal_psd_dbm_per_hz + 10.0 * std::log10(p.bandwidth_mhz * 1e6);
  UniformStream bs_rng(hash_combine(seed, kStreamBs));
  for (int k = 0; k < p.num_bs; ++k) {
    const Point2 xy = sample_wedge(bs_rng, {0.0, 0.0}, p.min_bs_distance_m,
                                   p.deployment_radius_m, 0.0, 360.0);
    BaseStation bs;
    bs.id = k;
    bs.position = {xy.x, xy.y, 0.0};
    bs.height_m = p.bs_height_m;
    bs.nominal_power_dbm = nominal;
    bs.down_tilt_deg = p.down_tilt_deg;
    bs.sectors = default_sectors(bs_rng.uniform(0.0, 120.0), p.subarrays_per_sector);
    s.base_stations.push_back(std::move(bs));
  }

  std::vector<Point2> keep_clear{{s.fss.position.x, s.fss.position.y}};
  for (const auto& bs : s.base_stations) keep_clear.push_back({bs.position.x, bs.position.y});

  UniformStream b_rng(hash_combine(seed, kStreamBuildings));
  const double region = p.deployment_radius_m + p.coverage_radius_m;
  for (int i = 0; i < p.num_buildings; ++i) {
    for (int attempt = 0; attempt < 64; ++attempt) {
      const Point2 c = sample_wedge(b_rng, {0.0, 0.0}, 0.0, region, 0.0, 360.0);
      const double w = b_rng.uniform(p.building_side_min_m, p.building_side_max_m);
      const double l = b_rng.uniform(p.building_side_min_m, p.building_side_max_m);
      const double rot = b_rng.uniform(0.0, kPi);
      const double h = b_rng.uniform(p.building_height_min_m, p.building_height_max_m);
      const double cr = std::cos(rot), sr = std::sin(rot);
      Building b;
      b.height_m = h;
      for (auto [u, v] : {std::pair{-0.5, -0.5}, {0.5, -0.5}, {0.5, 0.5}, {-0.5, 0.5}}) {
        const double lx = u * w, ly = v * l;
        b.footprint.push_back({c.x + lx * cr - ly * sr, c.y + lx * sr + ly * cr});
      }
      bool blocked = false;
      for (const Point2& q : keep_clear) {
        if (std::hypot(q.x - c.x, q.y - c.y) < p.building_side_max_m) {
          blocked = true;
          break;
        }
      }
      if (!blocked) {
        s.buildings.push_back(std::move(b));
        break;
      }
    }
  }

  populate_ues(s, p.ues_per_sector, p.ue_height_m, p.min_ue_distance_m,
               hash_combine(seed, kStreamUes));
  return s;
}

// ---------------------------------------------------------------------------
// JSON

namespace {

json point_json(const GeoPoint& p) { return json::array({p.x, p.y, p.z}); }

const json& field(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw ValidationError(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ValidationError(path + "." + key, "missing required field");
  return *it;
}

double number(const json& j, const char* key, const std::string& path) {
  const json& v = field(j, key, path);
  if (!v.is_number()) throw ValidationError(path + "." + key, "expected a number");
  return v.get<double>();
}

double number_or(const json& j, const char* key, const std::string& path, double fallback) {
  if (!j.contains(key)) return fallback;
  return number(j, key, path);
}

int integer(const json& j, const char* key, const std::string& path) {
  const json& v = field(j, key, path);
  if (!v.is_number_integer()) throw ValidationError(path + "." + key, "expected an integer");
  return v.get<int>();
}

GeoPoint parse_point(const json& v, const std::string& path) {
  if (!v.is_array() || v.size() != 3 || !v[0].is_number() || !v[1].is_number() ||
      !v[2].is_number()) {
    throw ValidationError(path, "expected [x, y, z]");
  }
  return {v[0].get<double>(), v[1].get<double>(), v[2].get<double>()};
}

const json& array_field(const json& j, const char* key, const std::string& path) {
  const json& v = field(j, key, path);
  if (!v.is_array()) throw ValidationError(path + "." + key, "expected an array");
  return v;
}

}  // namespace

std::string scenario_to_json(const Scenario& s) {
  json doc;
  doc["scenario"] = {
      {"carrier_ghz", s.carrier_ghz},
      {"bandwidth_mhz", s.bandwidth_mhz},
      {"coverage_radius_m", s.coverage_radius_m},
      {"power_range",
       {{"min_offset_db", s.power_range.min_offset_db},
        {"max_offset_db", s.power_range.max_offset_db},
        {"step_db", s.power_range.step_db}}},
      {"array", {{"rows", s.array.rows}, {"cols", s.array.cols}, {"dx", s.array.dx}, {"dy", s.array.dy}}},
      {"codebook_size", s.codebook_size},
      {"rate_qos_bps_hz", s.rate_qos_bps_hz},
      {"weight", s.weight},
      {"ue_noise_power_dbm", s.ue_noise_power_dbm},
      {"shadow",
       {{"sigma_los_db", s.shadow.sigma_los_db},
        {"sigma_nlos_db", s.shadow.sigma_nlos_db},
        {"seed", s.shadow.seed}}},
      {"rain_model_enabled", s.rain_model_enabled},
  };
  json bss = json::array();
  for (const auto& bs : s.base_stations) {
    json sectors = json::array();
    for (const auto& sec : bs.sectors) {
      json subs = json::array();
      for (const auto& sa : sec.subarrays) subs.push_back(sa.azimuth_offset_deg);
      json ues = json::array();
      for (const auto& ue : sec.ues) ues.push_back({{"id", ue.id}, {"position", point_json(ue.position)}});
      sectors.push_back({{"azimuth_center_deg", sec.azimuth_center_deg},
                         {"cochannel", sec.cochannel},
                         {"subarray_offsets_deg", subs},
                         {"ues", ues}});
    }
    bss.push_back({{"id", bs.id},
                   {"position", point_json(bs.position)},
                   {"height_m", bs.height_m},
                   {"nominal_power_dbm", bs.nominal_power_dbm},
                   {"down_tilt_deg", bs.down_tilt_deg},
                   {"sectors", sectors}});
  }
  doc["base_stations"] = bss;
  json blds = json::array();
  for (const auto& b : s.buildings) {
    json ring = json::array();
    for (const auto& v : b.footprint) ring.push_back({v.x, v.y});
    blds.push_back({{"height_m", b.height_m}, {"footprint", ring}});
  }
  doc["buildings"] = blds;
  doc["fss"] = {{"position", point_json(s.fss.position)},
                {"boresight_azimuth_deg", s.fss.boresight_azimuth_deg},
                {"elevation_deg", s.fss.elevation_deg},
                {"max_gain_dbi", s.fss.max_gain_dbi},
                {"noise_power_dbm", s.fss.noise_power_dbm}};
  doc["weather_ref"] = s.weather_ref;
  return doc.dump(1) + "\n";
}

Scenario scenario_from_json(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document.begin(), document.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("scenario file: ") + e.what(), e.byte);
  } catch (const json::exception& e) {
    throw ParseError(std::string("scenario file: ") + e.what(), 0);
  }
  Scenario s;
  const json& g = field(doc, "scenario", "<root>");
  const std::string gp = "scenario";
  s.carrier_ghz = number(g, "carrier_ghz", gp);
  s.bandwidth_mhz = number(g, "bandwidth_mhz", gp);
  s.coverage_radius_m = number(g, "coverage_radius_m", gp);
  if (g.contains("power_range")) {
    const json& pr = g["power_range"];
    s.power_range = {number(pr, "min_offset_db", gp + ".power_range"),
                     number(pr, "max_offset_db", gp + ".power_range"),
                     number(pr, "step_db", gp + ".power_range")};
  }
  if (g.contains("array")) {
    const json& a = g["array"];
    s.array = make_array_config(integer(a, "rows", gp + ".array"), integer(a, "cols", gp + ".array"),
                                s.carrier_ghz);
    s.array.dx = number_or(a, "dx", gp + ".array", 0.5);
    s.array.dy = number_or(a, "dy", gp + ".array", 0.5);
  } else {
    s.array = make_array_config(4, 4, s.carrier_ghz);
  }
  if (g.contains("codebook_size")) s.codebook_size = integer(g, "codebook_size", gp);
  s.rate_qos_bps_hz = number_or(g, "rate_qos_bps_hz", gp, s.rate_qos_bps_hz);
  s.weight = number_or(g, "weight", gp, s.weight);
  s.ue_noise_power_dbm = number_or(g, "ue_noise_power_dbm", gp, s.ue_noise_power_dbm);
  if (g.contains("shadow")) {
    const json& sh = g["shadow"];
    s.shadow.sigma_los_db = number_or(sh, "sigma_los_db", gp + ".shadow", s.shadow.sigma_los_db);
    s.shadow.sigma_nlos_db = number_or(sh, "sigma_nlos_db", gp + ".shadow", s.shadow.sigma_nlos_db);
    if (sh.contains("seed")) {
      if (!sh["seed"].is_number_unsigned() && !sh["seed"].is_number_integer()) {
        throw ValidationError(gp + ".shadow.seed", "expected an integer");
      }
      s.shadow.seed = sh["seed"].get<std::uint64_t>();
    }
  }
  if (g.contains("rain_model_enabled")) {
    if (!g["rain_model_enabled"].is_boolean()) {
      throw ValidationError(gp + ".rain_model_enabled", "expected a boolean");
    }
    s.rain_model_enabled = g["rain_model_enabled"].get<bool>();
  }

  const json& bss = array_field(doc, "base_stations", "<root>");
  for (std::size_t k = 0; k < bss.size(); ++k) {
    const std::string bp = "base_stations[" + std::to_string(k) + "]";
    const json& jb = bss[k];
    BaseStation bs;
    bs.id = integer(jb, "id", bp);
    bs.position = parse_point(field(jb, "position", bp), bp + ".position");
    bs.height_m = number(jb, "height_m", bp);
    bs.nominal_power_dbm = number(jb, "nominal_power_dbm", bp);
    bs.down_tilt_deg = number_or(jb, "down_tilt_deg", bp, 10.0);
    const json& secs = array_field(jb, "sectors", bp);
    for (std::size_t j = 0; j < secs.size(); ++j) {
      const std::string sp = bp + ".sectors[" + std::to_string(j) + "]";
      const json& js = secs[j];
      Sector sec;
      sec.azimuth_center_deg = number(js, "azimuth_center_deg", sp);
      if (js.contains("cochannel")) {
        if (!js["cochannel"].is_boolean()) throw ValidationError(sp + ".cochannel", "expected a boolean");
        sec.cochannel = js["cochannel"].get<bool>();
      }
      for (const auto& off : array_field(js, "subarray_offsets_deg", sp)) {
        if (!off.is_number()) throw ValidationError(sp + ".subarray_offsets_deg", "expected numbers");
        sec.subarrays.push_back({off.get<double>()});
      }
      if (js.contains("ues")) {
        const json& ues = array_field(js, "ues", sp);
        for (std::size_t u = 0; u < ues.size(); ++u) {
          const std::string up = sp + ".ues[" + std::to_string(u) + "]";
          sec.ues.push_back({integer(ues[u], "id", up),
                             parse_point(field(ues[u], "position", up), up + ".position")});
        }
      }
      bs.sectors.push_back(std::move(sec));
    }
    s.base_stations.push_back(std::move(bs));
  }

  if (doc.contains("buildings")) {
    const json& blds = array_field(doc, "buildings", "<root>");
    for (std::size_t b = 0; b < blds.size(); ++b) {
      const std::string p = "buildings[" + std::to_string(b) + "]";
      Building bld;
      bld.height_m = number(blds[b], "height_m", p);
      for (const auto& v : array_field(blds[b], "footprint", p)) {
        if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
          throw ValidationError(p + ".footprint", "expected [x, y] vertices");
        }
        bld.footprint.push_back({v[0].get<double>(), v[1].get<double>()});
      }
      s.buildings.push_back(std::move(bld));
    }
  }

  const json& f = field(doc, "fss", "<root>");
  s.fss.position = parse_point(field(f, "position", "fss"), "fss.position");
  s.fss.boresight_azimuth_deg = number(f, "boresight_azimuth_deg", "fss");
  s.fss.elevation_deg = number(f, "elevation_deg", "fss");
  s.fss.max_gain_dbi = number(f, "max_gain_dbi", "fss");
  s.fss.noise_power_dbm = number(f, "noise_power_dbm", "fss");

  if (doc.contains("weather_ref")) {
    if (!doc["weather_ref"].is_string()) throw ValidationError("weather_ref", "expected a string");
    s.weather_ref = doc["weather_ref"].get<std::string>();
  }
  return s;
}

Scenario load_scenario_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open scenario file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return scenario_from_json(ss.str());
}

void save_scenario_file(const Scenario& s, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write scenario file " + path);
  out << scenario_to_json(s);
}

}  // namespace coexsim

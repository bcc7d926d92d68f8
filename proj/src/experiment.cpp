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

#include "coexsim/experiment.hpp"

#include <atomic>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

#include "coexsim/error.hpp"
#include "coexsim/link_metrics.hpp"

namespace coexsim {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

std::string resolve(const std::string& base_dir, const std::string& p) {
  const fs::path path(p);
  return path.is_absolute() ? p : (fs::path(base_dir) / path).lexically_normal().string();
}

double num(const json& j, const char* key, const std::string& ctx) {
  const auto it = j.find(key);
  if (it == j.end() || !it->is_number()) throw ValidationError(ctx + "." + key, "expected a number");
  return it->get<double>();
}

int integer(const json& j, const char* key, const std::string& ctx) {
  const auto it = j.find(key);
  if (it == j.end() || !it->is_number_integer()) {
    throw ValidationError(ctx + "." + key, "expected an integer");
  }
  return it->get<int>();
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

// Minimal CSV quoting for free-text cells.
std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c == '\n' ? ' ' : c;
  }
  return out + "\"";
}

constexpr const char* kCsvColumns =
    "point,policy,pointing_angle_deg,array,weather,rain_rate_mm_h,i_th_db,aggregate_in_db,"
    "active_bs_count,total_capacity_bps_hz,served_ues,objective,error";

}  // namespace

std::string_view policy_name(Policy p) {
  switch (p) {
    case Policy::kCat3s: return "cat3s";
    case Policy::kBaseline1: return "baseline1";
    case Policy::kBaseline2: return "baseline2";
    case Policy::kBrute: return "brute";
  }
  return "?";
}

Policy parse_policy(std::string_view name) {
  for (Policy p : {Policy::kCat3s, Policy::kBaseline1, Policy::kBaseline2, Policy::kBrute}) {
    if (policy_name(p) == name) return p;
  }
  throw ValidationError("policies", "unknown policy '" + std::string(name) + "'");
}

std::string to_string(const ArrayShape& a) {
  return std::to_string(a.rows) + "x" + std::to_string(a.cols);
}

ArrayShape parse_array_shape(std::string_view text) {
  const auto x = text.find('x');
  ArrayShape a;
  try {
    if (x == std::string_view::npos) throw std::invalid_argument("no x");
    std::size_t used = 0;
    const std::string rows(text.substr(0, x)), cols(text.substr(x + 1));
    a.rows = std::stoi(rows, &used);
    if (used != rows.size()) throw std::invalid_argument("rows");
    a.cols = std::stoi(cols, &used);
    if (used != cols.size()) throw std::invalid_argument("cols");
  } catch (const std::exception&) {
    throw ValidationError("arrays", "expected ROWSxCOLS, got '" + std::string(text) + "'");
  }
  if (a.rows < 1 || a.cols < 1) throw ValidationError("arrays", "dimensions must be >= 1");
  return a;
}

GeneratorParams generator_params_from_json(const json& j) {
  GeneratorParams p;
  if (!j.is_object()) throw ValidationError("generator", "expected an object");
  auto opt_num = [&](const char* key, double& dst) {
    if (j.contains(key)) dst = num(j, key, "generator");
  };
  auto opt_int = [&](const char* key, int& dst) {
    if (j.contains(key)) dst = integer(j, key, "generator");
  };
  opt_int("num_bs", p.num_bs);
  opt_num("deployment_radius_m", p.deployment_radius_m);
  opt_num("min_bs_distance_m", p.min_bs_distance_m);
  opt_num("bs_height_m", p.bs_height_m);
  opt_num("coverage_radius_m", p.coverage_radius_m);
  opt_num("min_ue_distance_m", p.min_ue_distance_m);
  opt_int("ues_per_sector", p.ues_per_sector);
  opt_num("ue_height_m", p.ue_height_m);
  opt_int("subarrays_per_sector", p.subarrays_per_sector);
  opt_int("num_buildings", p.num_buildings);
  opt_num("building_height_min_m", p.building_height_min_m);
  opt_num("building_height_max_m", p.building_height_max_m);
  opt_num("building_side_min_m", p.building_side_min_m);
  opt_num("building_side_max_m", p.building_side_max_m);
  opt_num("fss_height_m", p.fss_height_m);
  opt_num("fss_max_gain_dbi", p.fss_max_gain_dbi);
  opt_num("fss_azimuth_deg", p.fss_azimuth_deg);
  opt_num("fss_elevation_deg", p.fss_elevation_deg);
  opt_num("carrier_ghz", p.carrier_ghz);
  opt_num("bandwidth_mhz", p.bandwidth_mhz);
  opt_num("noise_figure_db", p.noise_figure_db);
  opt_num("nominal_psd_dbm_per_hz", p.nominal_psd_dbm_per_hz);
  opt_num("down_tilt_deg", p.down_tilt_deg);
  opt_int("array_rows", p.array_rows);
  opt_int("array_cols", p.array_cols);
  opt_int("codebook_size", p.codebook_size);
  opt_num("sigma_los_db", p.sigma_los_db);
  opt_num("sigma_nlos_db", p.sigma_nlos_db);
  return p;
}

json generator_params_to_json(const GeneratorParams& p) {
  return {{"num_bs", p.num_bs},
          {"deployment_radius_m", p.deployment_radius_m},
          {"min_bs_distance_m", p.min_bs_distance_m},
          {"bs_height_m", p.bs_height_m},
          {"coverage_radius_m", p.coverage_radius_m},
          {"min_ue_distance_m", p.min_ue_distance_m},
          {"ues_per_sector", p.ues_per_sector},
          {"ue_height_m", p.ue_height_m},
          {"subarrays_per_sector", p.subarrays_per_sector},
          {"num_buildings", p.num_buildings},
          {"building_height_min_m", p.building_height_min_m},
          {"building_height_max_m", p.building_height_max_m},
          {"building_side_min_m", p.building_side_min_m},
          {"building_side_max_m", p.building_side_max_m},
          {"fss_height_m", p.fss_height_m},
          {"fss_max_gain_dbi", p.fss_max_gain_dbi},
          {"fss_azimuth_deg", p.fss_azimuth_deg},
          {"fss_elevation_deg", p.fss_elevation_deg},
          {"carrier_ghz", p.carrier_ghz},
          {"bandwidth_mhz", p.bandwidth_mhz},
          {"noise_figure_db", p.noise_figure_db},
          {"nominal_psd_dbm_per_hz", p.nominal_psd_dbm_per_hz},
          {"down_tilt_deg", p.down_tilt_deg},
          {"array_rows", p.array_rows},
          {"array_cols", p.array_cols},
          {"codebook_size", p.codebook_size},
          {"sigma_los_db", p.sigma_los_db},
          {"sigma_nlos_db", p.sigma_nlos_db}};
}

ExperimentConfig experiment_config_from_json(std::string_view document,
                                             const std::string& base_dir) {
  json doc;
  try {
    doc = json::parse(document.begin(), document.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("experiment config: ") + e.what(), e.byte);
  } catch (const json::exception& e) {
    throw ParseError(std::string("experiment config: ") + e.what(), 0);
  }
  if (!doc.is_object()) throw ValidationError("<root>", "expected an object");

  ExperimentConfig cfg;
  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_integer()) throw ValidationError("seed", "expected an integer");
    cfg.seed = doc["seed"].get<std::uint64_t>();
  }

  const json src = doc.value("scenario", json::object());
  if (!src.is_object()) throw ValidationError("scenario", "expected an object");
  int sources = 0;
  if (src.contains("file")) {
    if (!src["file"].is_string()) throw ValidationError("scenario.file", "expected a path");
    cfg.scenario_file = resolve(base_dir, src["file"].get<std::string>());
    ++sources;
  }
  if (src.contains("generator")) {
    cfg.generator = generator_params_from_json(src["generator"]);
    ++sources;
  }
  if (src.contains("datasets")) {
    const json& d = src["datasets"];
    if (!d.is_object()) throw ValidationError("scenario.datasets", "expected an object");
    DatasetSource ds;
    auto path = [&](const char* key) {
      if (!d.contains(key) || !d[key].is_string()) {
        throw ValidationError(std::string("scenario.datasets.") + key, "expected a path");
      }
      return resolve(base_dir, d[key].get<std::string>());
    };
    ds.buildings_geojson = path("buildings");
    ds.cell_sites_csv = path("cell_sites");
    if (!d.contains("origin") || !d["origin"].is_object()) {
      throw ValidationError("scenario.datasets.origin", "expected {lat, lon}");
    }
    ds.origin = {num(d["origin"], "lat", "scenario.datasets.origin"),
                 num(d["origin"], "lon", "scenario.datasets.origin")};
    if (d.contains("nominal_power_dbm")) {
      ds.sites.nominal_power_dbm = num(d, "nominal_power_dbm", "scenario.datasets");
    }
    if (d.contains("ues_per_sector")) {
      ds.ues_per_sector = integer(d, "ues_per_sector", "scenario.datasets");
    }
    cfg.datasets = ds;
    ++sources;
  }
  if (sources == 0) cfg.generator = GeneratorParams{};
  if (sources > 1) {
    throw ValidationError("scenario", "give exactly one of file, generator, datasets");
  }

  if (doc.contains("policies")) {
    const json& p = doc["policies"];
    if (!p.is_array() || p.empty()) throw ValidationError("policies", "expected a non-empty list");
    cfg.policies.clear();
    for (const auto& name : p) {
      if (!name.is_string()) throw ValidationError("policies", "expected policy names");
      cfg.policies.push_back(parse_policy(name.get<std::string>()));
    }
  }

  const json sweep = doc.value("sweep", json::object());
  if (!sweep.is_object()) throw ValidationError("sweep", "expected an object");
  if (sweep.contains("pointing_angles_deg")) {
    const json& a = sweep["pointing_angles_deg"];
    if (!a.is_array() || a.empty()) {
      throw ValidationError("sweep.pointing_angles_deg", "expected a non-empty list");
    }
    cfg.pointing_angles_deg.clear();
    for (const auto& v : a) {
      if (!v.is_number() || v.get<double>() < 0.0 || v.get<double>() > 90.0) {
        throw ValidationError("sweep.pointing_angles_deg", "angles must be numbers in [0, 90]");
      }
      cfg.pointing_angles_deg.push_back(v.get<double>());
    }
  }
  if (sweep.contains("arrays")) {
    const json& a = sweep["arrays"];
    if (!a.is_array() || a.empty()) throw ValidationError("sweep.arrays", "expected a non-empty list");
    cfg.arrays.clear();
    for (const auto& v : a) {
      if (!v.is_string()) throw ValidationError("sweep.arrays", "expected \"ROWSxCOLS\" strings");
      cfg.arrays.push_back(parse_array_shape(v.get<std::string>()));
    }
  }

  if (doc.contains("thresholds")) {
    const json& t = doc["thresholds"];
    if (!t.is_object()) throw ValidationError("thresholds", "expected an object");
    if (t.contains("sunny_db")) cfg.thresholds.sunny_db = num(t, "sunny_db", "thresholds");
    if (t.contains("rainy_db")) cfg.thresholds.rainy_db = num(t, "rainy_db", "thresholds");
    if (t.contains("override_db")) cfg.thresholds.override_db = num(t, "override_db", "thresholds");
  }

  // Weather entries: a snapshot path, or {"label", "file" | "snapshot"}.
  if (sweep.contains("weather")) {
    const json& w = sweep["weather"];
    if (!w.is_array() || w.empty()) throw ValidationError("sweep.weather", "expected a non-empty list");
    for (std::size_t i = 0; i < w.size(); ++i) {
      const std::string ctx = "sweep.weather[" + std::to_string(i) + "]";
      WeatherCase wc;
      if (w[i].is_string()) {
        const std::string p = resolve(base_dir, w[i].get<std::string>());
        wc.context = load_weather_file(p, cfg.thresholds);
        wc.label = fs::path(p).stem().string();
      } else if (w[i].is_object()) {
        if (w[i].contains("file")) {
          if (!w[i]["file"].is_string()) throw ValidationError(ctx + ".file", "expected a path");
          wc.context = load_weather_file(resolve(base_dir, w[i]["file"].get<std::string>()),
                                         cfg.thresholds);
        } else if (w[i].contains("snapshot")) {
          wc.context = load_weather_snapshot(w[i]["snapshot"].dump(), cfg.thresholds);
        } else {
          throw ValidationError(ctx, "expected file or snapshot");
        }
        wc.label = w[i].contains("label") && w[i]["label"].is_string()
                       ? w[i]["label"].get<std::string>()
                       : std::string(to_string(wc.context.condition));
      } else {
        throw ValidationError(ctx, "expected a path or an object");
      }
      cfg.weather.push_back(std::move(wc));
    }
  } else {
    cfg.weather = {{"sunny", make_weather(0.0, 0, cfg.thresholds)},
                   {"rainy", make_weather(25.0, 0, cfg.thresholds)}};
  }

  if (doc.contains("exclusion_radius_m")) {
    cfg.exclusion_radius_m = num(doc, "exclusion_radius_m", "<root>");
    if (!(cfg.exclusion_radius_m > 0.0)) {
      throw ValidationError("exclusion_radius_m", "must be positive");
    }
  }
  if (doc.contains("baseline2_threshold_db")) {
    cfg.baseline2_threshold_db = num(doc, "baseline2_threshold_db", "<root>");
  }
  if (doc.contains("brute_force_cap")) cfg.brute_force_cap = num(doc, "brute_force_cap", "<root>");
  if (doc.contains("output_dir")) {
    if (!doc["output_dir"].is_string()) throw ValidationError("output_dir", "expected a path");
    cfg.output_dir = resolve(base_dir, doc["output_dir"].get<std::string>());
  }
  if (doc.contains("workers")) {
    cfg.workers = integer(doc, "workers", "<root>");
    if (cfg.workers < 1) throw ValidationError("workers", "must be >= 1");
  }
  return cfg;
}

ExperimentConfig load_experiment_config(const std::string& path) {
  const std::string base = fs::path(path).parent_path().string();
  return experiment_config_from_json(read_text(path), base.empty() ? "." : base);
}

Scenario resolve_scenario(const ExperimentConfig& cfg) {
  if (cfg.scenario_file) return load_scenario_file(*cfg.scenario_file);
  if (cfg.datasets) {
    const DatasetSource& d = *cfg.datasets;
    Scenario s;
    const auto sites = parse_cell_sites_csv(read_text(d.cell_sites_csv), d.origin, d.sites);
    const auto blds = parse_buildings_geojson(read_text(d.buildings_geojson), d.origin);
    s.base_stations = sites.stations;
    s.buildings = blds.buildings;
    populate_ues(s, d.ues_per_sector, d.ue_height_m, d.min_ue_distance_m, cfg.seed);
    return s;
  }
  return generate_synthetic_scenario(cfg.generator.value_or(GeneratorParams{}), cfg.seed);
}

std::vector<SweepPoint> sweep_points(const ExperimentConfig& cfg) {
  std::vector<SweepPoint> out;
  for (const ArrayShape& a : cfg.arrays) {
    for (std::size_t w = 0; w < cfg.weather.size(); ++w) {
      for (double angle : cfg.pointing_angles_deg) {
        out.push_back({out.size(), a, w, angle});
      }
    }
  }
  return out;
}

std::size_t ExperimentResult::total_points() const {
  std::size_t n = 0;
  for (const auto& r : rows) n = std::max(n, r.point + 1);
  return n;
}

std::size_t ExperimentResult::failed_points() const {
  std::vector<bool> failed(total_points(), true);
  for (const auto& r : rows) {
    if (r.ok()) failed[r.point] = false;
  }
  return static_cast<std::size_t>(std::count(failed.begin(), failed.end(), true));
}

namespace {

ControlDecision run_policy(Policy p, const LinkEnvironment& env, const ExperimentConfig& cfg) {
  const double i_th = env.weather().i_th_db;
  switch (p) {
    case Policy::kCat3s: return cat3s_control(env, i_th);
    case Policy::kBaseline1: return baseline_exclusion_zone(env, i_th, cfg.exclusion_radius_m);
    case Policy::kBaseline2: return baseline_in_threshold(env, i_th, cfg.baseline2_threshold_db);
    case Policy::kBrute: return brute_force_control(env, i_th, {cfg.brute_force_cap});
  }
  throw std::logic_error("unknown policy");
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& cfg, const Scenario& scenario) {
  const std::vector<SweepPoint> points = sweep_points(cfg);
  const std::size_t np = cfg.policies.size();
  ExperimentResult result;
  result.rows.resize(points.size() * np);
  result.decisions.resize(points.size() * np);

  auto evaluate = [&](const SweepPoint& pt) {
    const WeatherCase& wc = cfg.weather[pt.weather_index];
    for (std::size_t i = 0; i < np; ++i) {
      ResultRow& row = result.rows[pt.index * np + i];
      row.point = pt.index;
      row.policy = std::string(policy_name(cfg.policies[i]));
      row.pointing_angle_deg = pt.pointing_angle_deg;
      row.array = to_string(pt.array);
      row.weather = wc.label;
      row.rain_rate_mm_h = wc.context.rain_rate_mm_h;
      row.i_th_db = wc.context.i_th_db;
    }
    try {
      Scenario s = scenario;
      s.array = make_array_config(pt.array.rows, pt.array.cols, s.carrier_ghz, scenario.array.dx);
      s.array.dy = scenario.array.dy;
      s.fss.elevation_deg = pt.pointing_angle_deg;
      const LinkEnvironment env(s, wc.context);
      for (std::size_t i = 0; i < np; ++i) {
        ResultRow& row = result.rows[pt.index * np + i];
        const auto t0 = std::chrono::steady_clock::now();
        try {
          ControlDecision d = run_policy(cfg.policies[i], env, cfg);
          row.aggregate_in_db = d.achieved_in_db;
          row.active_bs_count = d.state.active_count();
          row.total_capacity = d.total_capacity;
          row.served_ues = d.served_ues;
          row.objective = d.objective;
          result.decisions[pt.index * np + i] = std::move(d);
        } catch (const CapExceeded& e) {
          row.error = std::string("cap exceeded: ") + e.what();
        } catch (const std::exception& e) {
          row.error = e.what();
        }
        row.runtime_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();
      }
    } catch (const std::exception& e) {
      for (std::size_t i = 0; i < np; ++i) result.rows[pt.index * np + i].error = e.what();
    }
  };

  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(cfg.workers, points.size()));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++) evaluate(points[i]);
  };
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  return result;
}

std::string results_csv(const ExperimentResult& r) {
  std::string out = "# coexsim results v" + std::to_string(kResultsFormatVersion) + "\n";
  out += kCsvColumns;
  out += '\n';
  for (const ResultRow& row : r.rows) {
    out += std::to_string(row.point) + ',' + row.policy + ',' + fmt(row.pointing_angle_deg) + ',' +
           row.array + ',' + csv_cell(row.weather) + ',' + fmt(row.rain_rate_mm_h) + ',' +
           fmt(row.i_th_db) + ',';
    if (row.ok()) {
      out += fmt(row.aggregate_in_db) + ',' + std::to_string(row.active_bs_count) + ',' +
             fmt(row.total_capacity) + ',' + std::to_string(row.served_ues) + ',' +
             fmt(row.objective) + ',';
    } else {
      out += ",,,,," + csv_cell(row.error);
    }
    out += '\n';
  }
  return out;
}

std::string results_json(const ExperimentResult& r) {
  json rows = json::array();
  for (const ResultRow& row : r.rows) {
    json j = {{"point", row.point},
              {"policy", row.policy},
              {"pointing_angle_deg", row.pointing_angle_deg},
              {"array", row.array},
              {"weather", row.weather},
              {"rain_rate_mm_h", row.rain_rate_mm_h},
              {"i_th_db", row.i_th_db}};
    if (row.ok()) {
      j["aggregate_in_db"] = row.aggregate_in_db;
      j["active_bs_count"] = row.active_bs_count;
      j["total_capacity_bps_hz"] = row.total_capacity;
      j["served_ues"] = row.served_ues;
      j["objective"] = row.objective;
    } else {
      j["error"] = row.error;
    }
    rows.push_back(std::move(j));
  }
  return json{{"version", kResultsFormatVersion}, {"rows", rows}}.dump(1) + "\n";
}

std::string decision_json(const ControlDecision& d, const Scenario& s) {
  json bss = json::array();
  for (std::size_t k = 0; k < d.state.bs.size(); ++k) {
    const BsState& b = d.state.bs[k];
    json sectors = json::array();
    for (const auto& beams : b.sectors) {
      json list = json::array();
      for (const BeamIndex& bi : beams) list.push_back({{"subarray", bi.subarray}, {"beam", bi.beam}});
      sectors.push_back(list);
    }
    json jb = {{"id", k < s.base_stations.size() ? s.base_stations[k].id : static_cast<int>(k)},
               {"active", b.active},
               {"sectors", sectors}};
    jb["power_dbm"] = b.active ? json(b.power_dbm) : json(nullptr);
    bss.push_back(std::move(jb));
  }
  json trace = json::array();
  for (const SelectionRecord& t : d.trace) {
    trace.push_back({{"outer", t.outer_iteration},
                     {"bs", t.bs},
                     {"sector", t.sector},
                     {"subarray", t.beam.subarray},
                     {"beam", t.beam.beam},
                     {"rho", t.rho},
                     {"power_dbm", t.power_dbm}});
  }
  json doc = {{"policy", d.policy},
              {"objective", d.objective},
              {"aggregate_in_db", d.achieved_in_db},
              {"i_th_db", d.i_th_db},
              {"total_capacity_bps_hz", d.total_capacity},
              {"served_ues", d.served_ues},
              {"active_bs_count", d.state.active_count()},
              {"outer_iterations", d.outer_iterations},
              {"inner_selections", d.inner_selections},
              {"base_stations", bss},
              {"trace", trace}};
  return doc.dump(1) + "\n";
}

std::string timing_csv(const ExperimentResult& r) {
  std::string out = "point,policy,runtime_ms\n";
  for (const ResultRow& row : r.rows) {
    out += std::to_string(row.point) + ',' + row.policy + ',' + fmt(row.runtime_ms) + '\n';
  }
  return out;
}

void write_reports(const ExperimentResult& r, const Scenario& s, const std::string& out_dir) {
  const fs::path dir(out_dir);
  fs::create_directories(dir / "decisions");
  write_text(dir / "results.csv", results_csv(r));
  write_text(dir / "results.json", results_json(r));
  write_text(dir / "timing.csv", timing_csv(r));
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    if (!r.rows[i].ok()) continue;
    const std::string name = "point" + std::to_string(r.rows[i].point) + "_" + r.rows[i].policy;
    write_text(dir / "decisions" / (name + ".json"), decision_json(r.decisions[i], s));
  }
}

std::vector<ResultRow> parse_results_csv(std::string_view document) {
  std::vector<ResultRow> rows;
  std::istringstream in{std::string(document)};
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  std::map<std::string, std::size_t> col;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto f = split_csv_record(line);
    if (!header_seen) {
      for (std::size_t i = 0; i < f.size(); ++i) col[f[i]] = i;
      for (const char* need : {"point", "policy", "pointing_angle_deg", "i_th_db",
                               "aggregate_in_db", "active_bs_count", "total_capacity_bps_hz"}) {
        if (!col.count(need)) {
          throw ParseError(std::string("results: missing column ") + need, 0, line_no);
        }
      }
      header_seen = true;
      continue;
    }
    if (f.size() != col.size()) {
      throw ParseError("results: expected " + std::to_string(col.size()) + " fields, got " +
                           std::to_string(f.size()),
                       0, line_no);
    }
    auto cell = [&](const char* name) -> const std::string& {
      static const std::string empty;
      const auto it = col.find(name);
      return it == col.end() ? empty : f[it->second];
    };
    auto number = [&](const char* name) {
      const std::string& c = cell(name);
      try {
        std::size_t used = 0;
        const double v = std::stod(c, &used);
        if (used != c.size()) throw std::invalid_argument(c);
        return v;
      } catch (const std::exception&) {
        throw ParseError(std::string("results: bad number in column ") + name, 0, line_no);
      }
    };
    ResultRow r;
    r.point = static_cast<std::size_t>(number("point"));
    r.policy = cell("policy");
    r.pointing_angle_deg = number("pointing_angle_deg");
    r.array = cell("array");
    r.weather = cell("weather");
    r.i_th_db = number("i_th_db");
    r.error = cell("error");
    if (col.count("rain_rate_mm_h")) r.rain_rate_mm_h = number("rain_rate_mm_h");
    if (r.ok()) {
      r.aggregate_in_db = number("aggregate_in_db");
      r.active_bs_count = static_cast<std::size_t>(number("active_bs_count"));
      r.total_capacity = number("total_capacity_bps_hz");
      if (col.count("served_ues")) r.served_ues = static_cast<std::size_t>(number("served_ues"));
      if (col.count("objective")) r.objective = number("objective");
    }
    rows.push_back(std::move(r));
  }
  if (!header_seen) throw ParseError("results: missing header row", 0, line_no);
  return rows;
}

PolicyComparison compare_policies(const std::vector<ResultRow>& rows) {
  PolicyComparison c;
  std::map<std::size_t, const ResultRow*> cat3s;
  for (const ResultRow& r : rows) {
    if (r.policy == "cat3s" && r.ok()) {
      cat3s[r.point] = &r;
      if (r.aggregate_in_db > r.i_th_db) c.violations.push_back({r.point, r.aggregate_in_db, r.i_th_db});
    }
  }
  for (const ResultRow& r : rows) {
    if (r.policy == "cat3s" || !r.ok()) continue;
    const auto it = cat3s.find(r.point);
    if (it == cat3s.end()) continue;
    const ResultRow& ref = *it->second;
    c.deltas.push_back({r.point, r.policy, r.aggregate_in_db - ref.aggregate_in_db,
                        static_cast<double>(r.active_bs_count) -
                            static_cast<double>(ref.active_bs_count),
                        r.total_capacity - ref.total_capacity});
  }
  return c;
}

std::string format_comparison(const PolicyComparison& c) {
  std::string out = "point,policy,delta_in_db,delta_active_bs,delta_capacity_bps_hz\n";
  for (const PolicyDelta& d : c.deltas) {
    out += std::to_string(d.point) + ',' + d.policy + ',' + fmt(d.delta_in_db) + ',' +
           fmt(d.delta_active_bs) + ',' + fmt(d.delta_capacity) + '\n';
  }
  if (c.violations.empty()) {
    out += "# cat3s threshold violations: none\n";
  } else {
    for (const ThresholdViolation& v : c.violations) {
      out += "# VIOLATION point " + std::to_string(v.point) + ": cat3s I/N " +
             fmt(v.aggregate_in_db) + " dB > I_th " + fmt(v.i_th_db) + " dB\n";
    }
  }
  return out;
}

}  // namespace coexsim

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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "coexsim/context.hpp"
#include "coexsim/control.hpp"
#include "coexsim/ingest.hpp"
#include "coexsim/scenario.hpp"

namespace coexsim {

inline constexpr int kResultsFormatVersion = 1;

enum class Policy { kCat3s, kBaseline1, kBaseline2, kBrute };

std::string_view policy_name(Policy p);
/// Throws ValidationError for unknown names.
Policy parse_policy(std::string_view name);

struct ArrayShape {
  int rows = 4;
  int cols = 4;
  bool operator==(const ArrayShape&) const = default;
};

std::string to_string(const ArrayShape& a);
/// "4x16" → {4, 16}. Throws ValidationError.
ArrayShape parse_array_shape(std::string_view text);

struct WeatherCase {
  std::string label;
  WeatherContext context;
};

struct DatasetSource {
  std::string buildings_geojson;  // path
  std::string cell_sites_csv;     // path
  GeoOrigin origin;
  CellSiteOptions sites;
  int ues_per_sector = 10;
  double ue_height_m = 1.5;
  double min_ue_distance_m = 35.0;
};

struct ExperimentConfig {
  // Exactly one source: a scenario file, the generator, or raw datasets.
  std::optional<std::string> scenario_file;
  std::optional<GeneratorParams> generator;
  std::optional<DatasetSource> datasets;
  std::uint64_t seed = 1;

  std::vector<Policy> policies{Policy::kCat3s, Policy::kBaseline1, Policy::kBaseline2};
  std::vector<double> pointing_angles_deg{20.0, 30.0, 40.0, 50.0};
  std::vector<ArrayShape> arrays{{4, 4}};
  std::vector<WeatherCase> weather;

  ThresholdPolicy thresholds;
  double exclusion_radius_m = 3000.0;
  double baseline2_threshold_db = -15.0;
  double brute_force_cap = 1e7;
  std::string output_dir = "results";
  int workers = 1;
};

/// Reads an experiment config. Relative paths resolve against `base_dir`.
/// Throws ParseError / ValidationError.
ExperimentConfig experiment_config_from_json(std::string_view document,
                                             const std::string& base_dir = ".");
ExperimentConfig load_experiment_config(const std::string& path);

GeneratorParams generator_params_from_json(const nlohmann::json& j);
nlohmann::json generator_params_to_json(const GeneratorParams& p);

/// Resolves the config's scenario source.
Scenario resolve_scenario(const ExperimentConfig& cfg);

struct SweepPoint {
  std::size_t index = 0;
  ArrayShape array;
  std::size_t weather_index = 0;
  double pointing_angle_deg = 0.0;
};

/// Cartesian product ordered by array, then weather, then pointing angle.
std::vector<SweepPoint> sweep_points(const ExperimentConfig& cfg);

struct ResultRow {
  std::size_t point = 0;
  std::string policy;
  double pointing_angle_deg = 0.0;
  std::string array;
  std::string weather;
  double rain_rate_mm_h = 0.0;
  double i_th_db = 0.0;
  double aggregate_in_db = 0.0;
  std::size_t active_bs_count = 0;
  double total_capacity = 0.0;
  std::size_t served_ues = 0;
  double objective = 0.0;
  double runtime_ms = 0.0;
  std::string error;  // empty on success

  bool ok() const { return error.empty(); }
};

struct ExperimentResult {
  std::vector<ResultRow> rows;  // point-major, policies in config order
  std::vector<ControlDecision> decisions;  // parallel to rows; empty state on error

  std::size_t failed_points() const;
  std::size_t total_points() const;
};

/// Runs every policy at every sweep point on `workers` threads. Output order
/// and content do not depend on the worker count.
ExperimentResult run_experiment(const ExperimentConfig& cfg, const Scenario& scenario);

/// Header comment naming the format version, then the column header.
std::string results_csv(const ExperimentResult& r);
std::string results_json(const ExperimentResult& r);
std::string decision_json(const ControlDecision& d, const Scenario& s);
std::string timing_csv(const ExperimentResult& r);

/// Writes results.csv, results.json, timing.csv and decisions/*.json.
void write_reports(const ExperimentResult& r, const Scenario& s, const std::string& out_dir);

/// Parses results.csv back into rows. Throws ParseError with a line number.
std::vector<ResultRow> parse_results_csv(std::string_view document);

struct PolicyDelta {
  std::size_t point = 0;
  std::string policy;
  double delta_in_db = 0.0;        // policy - cat3s
  double delta_active_bs = 0.0;
  double delta_capacity = 0.0;
};

struct ThresholdViolation {
  std::size_t point = 0;
  double aggregate_in_db = 0.0;
  double i_th_db = 0.0;
};

struct PolicyComparison {
  std::vector<PolicyDelta> deltas;
  std::vector<ThresholdViolation> violations;  // cat3s rows above their I_th
};

PolicyComparison compare_policies(const std::vector<ResultRow>& rows);
std::string format_comparison(const PolicyComparison& c);

}  // namespace coexsim

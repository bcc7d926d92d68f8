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
#include <string>
#include <string_view>
#include <vector>

#include "coexsim/antenna.hpp"
#include "coexsim/geometry.hpp"
#include "coexsim/propagation.hpp"

namespace coexsim {

/// Panel inside a sector; its boresight is the sector center plus the offset.
struct SubArray {
  double azimuth_offset_deg = 0.0;

  bool operator==(const SubArray&) const = default;
};

struct UserEquipment {
  int id = 0;
  GeoPoint position;  // z is the UE antenna height

  bool operator==(const UserEquipment&) const = default;
};

/// 120° sector centered on `azimuth_center_deg` (compass degrees).
struct Sector {
  double azimuth_center_deg = 0.0;
  std::vector<SubArray> subarrays;
  bool cochannel = true;  // shares the incumbent's channel
  std::vector<UserEquipment> ues;

  bool operator==(const Sector&) const = default;
};

struct BaseStation {
  int id = 0;
  GeoPoint position;  // ground location; z is the terrain reference
  double height_m = 25.0;
  std::vector<Sector> sectors;
  double nominal_power_dbm = 42.0;
  double down_tilt_deg = 10.0;

  GeoPoint antenna_point() const { return {position.x, position.y, position.z + height_m}; }

  bool operator==(const BaseStation&) const = default;
};

struct FssReceiver {
  GeoPoint position;  // z is the dish height
  double boresight_azimuth_deg = 180.0;
  double elevation_deg = 30.0;
  double max_gain_dbi = 40.0;
  double noise_power_dbm = -87.0;

  Vec3 boresight() const { return direction_from_az_el(boresight_azimuth_deg, elevation_deg); }

  bool operator==(const FssReceiver&) const = default;
};

inline double fss_gain_dbi(const FssReceiver& fss, double off_axis_deg) {
  return fss_gain_dbi(fss.max_gain_dbi, off_axis_deg);
}

/// Transmit power grid as offsets (dB) around each BS's nominal power.
struct PowerRange {
  double min_offset_db = -2.0;
  double max_offset_db = 2.0;
  double step_db = 0.5;

  /// min, min+step, ... up to max (inclusive, with a 1e-9 dB slack).
  std::vector<double> offsets() const;

  bool operator==(const PowerRange&) const = default;
};

struct Scenario {
  std::vector<BaseStation> base_stations;
  std::vector<Building> buildings;
  FssReceiver fss;
  double carrier_ghz = 12.45;
  double bandwidth_mhz = 100.0;
  double coverage_radius_m = 1000.0;
  PowerRange power_range;
  ArrayConfig array = make_array_config(4, 4, 12.45);
  int codebook_size = 64;
  double rate_qos_bps_hz = 0.5;
  double weight = 0.5;
  double ue_noise_power_dbm = -87.0;
  ShadowFadingParams shadow;
  bool rain_model_enabled = true;
  std::string weather_ref;

  std::size_t ue_count() const;

  bool operator==(const Scenario&) const = default;
};

struct ValidationIssue {
  std::string path;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;

  bool ok() const { return issues.empty(); }
  std::string to_string() const;
};

ValidationReport validate_scenario(const Scenario& s);

/// Thermal noise over the bandwidth plus a receiver noise figure.
double thermal_noise_dbm(double bandwidth_mhz, double noise_figure_db);

/// Statistics of the synthetic deployment: BSs uniform in a disc around the
/// incumbent, UEs uniform (by area) inside each sector's wedge of the
/// coverage disc, rectangular buildings of uniform height and size.
struct GeneratorParams {
  int num_bs = 33;
  double deployment_radius_m = 5000.0;
  double min_bs_distance_m = 100.0;
  double bs_height_m = 25.0;
  double coverage_radius_m = 1000.0;
  double min_ue_distance_m = 35.0;
  int ues_per_sector = 10;
  double ue_height_m = 1.5;
  int subarrays_per_sector = 4;
  int num_buildings = 1000;
  double building_height_min_m = 10.0;
  double building_height_max_m = 40.0;
  double building_side_min_m = 15.0;
  double building_side_max_m = 40.0;
  double fss_height_m = 5.0;
  double fss_max_gain_dbi = 40.0;
  double fss_azimuth_deg = 180.0;
  double fss_elevation_deg = 30.0;
  double carrier_ghz = 12.45;
  double bandwidth_mhz = 100.0;
  double noise_figure_db = 7.0;
  // Nominal BS power as a spectral density; the absolute power is
  // psd + 10·log10(bandwidth in Hz).
  double nominal_psd_dbm_per_hz = -38.0;
  double down_tilt_deg = 10.0;
  int array_rows = 4;
  int array_cols = 4;
  int codebook_size = 64;
  double sigma_los_db = 4.0;
  double sigma_nlos_db = 6.0;
};

/// Throws std::invalid_argument when placement is infeasible.
Scenario generate_synthetic_scenario(const GeneratorParams& params, std::uint64_t seed);

/// Panel azimuth offsets spreading S sub-arrays evenly across a 120° sector.
std::vector<SubArray> default_subarrays(int count);

/// Three sectors at center, center+120, center+240 with S sub-arrays each.
std::vector<Sector> default_sectors(double first_center_deg, int subarrays_per_sector);

/// Places `ues_per_sector` UEs in every sector of every BS (replacing any
/// existing UEs), avoiding building footprints when possible.
void populate_ues(Scenario& s, int ues_per_sector, double ue_height_m,
                  double min_distance_m, std::uint64_t seed);

// Scenario files: a JSON document with top-level keys
// scenario / base_stations / buildings / fss / weather_ref.
std::string scenario_to_json(const Scenario& s);
/// Throws ParseError for malformed JSON and ValidationError for missing or
/// mistyped fields.
Scenario scenario_from_json(std::string_view document);

Scenario load_scenario_file(const std::string& path);
void save_scenario_file(const Scenario& s, const std::string& path);

}  // namespace coexsim

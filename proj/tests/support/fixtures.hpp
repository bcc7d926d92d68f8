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

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "coexsim/scenario.hpp"

namespace coexsim::fixtures {

/// Incumbent at the origin, dish 5 m up, looking south at 30 degrees.
inline Scenario empty_scenario() {
  Scenario s;
  s.fss.position = {0.0, 0.0, 5.0};
  s.shadow.sigma_los_db = 0.0;
  s.shadow.sigma_nlos_db = 0.0;
  return s;
}

/// One BS at (x, y) with three sectors and `subarrays` panels per sector.
inline BaseStation base_station(int id, double x, double y, int subarrays = 1) {
  BaseStation bs;
  bs.id = id;
  bs.position = {x, y, 0.0};
  bs.sectors = default_sectors(0.0, subarrays);
  return bs;
}

/// UE at a compass bearing and ground distance from the BS.
inline UserEquipment ue_at(const BaseStation& bs, int id, double bearing_deg, double dist_m) {
  const double r = bearing_deg * 3.14159265358979323846 / 180.0;
  return {id, {bs.position.x + dist_m * std::sin(r), bs.position.y + dist_m * std::cos(r), 1.5}};
}

/// Small generated instance: K BSs within `radius_m`, few UEs, light clutter.
inline GeneratorParams tiny_params(int k, int subarrays, int codebook) {
  GeneratorParams p;
  p.num_bs = k;
  p.deployment_radius_m = 2500.0;
  p.coverage_radius_m = 400.0;
  p.ues_per_sector = 2;
  p.subarrays_per_sector = subarrays;
  p.codebook_size = codebook;
  p.num_buildings = 40;
  return p;
}

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void spit(const std::filesystem::path& p, const std::string& text) {
  std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  out << text;
}

/// Fresh scratch directory under the build tree's temp area.
inline std::filesystem::path scratch_dir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("coexsim_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace coexsim::fixtures

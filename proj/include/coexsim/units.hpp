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
#include <numbers>

namespace coexsim {

// Linear power values at or below this map to kDbFloor.
inline constexpr double kLinearFloor = 1e-20;
inline constexpr double kDbFloor = -200.0;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kSpeedOfLight = 299792458.0;
inline constexpr double kThermalNoiseDbmPerHz = -174.0;

/// 10·log10(x) with the -200 dB floor applied to non-positive and tiny inputs.
inline double to_db(double linear) {
  if (!(linear > kLinearFloor)) return kDbFloor;
  return 10.0 * std::log10(linear);
}

inline double from_db(double db) { return std::pow(10.0, db / 10.0); }

inline double deg_to_rad(double deg) { return deg * kPi / 180.0; }
inline double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

/// Wraps an angle in degrees into [0, 360).
inline double wrap_degrees(double deg) {
  double w = std::fmod(deg, 360.0);
  if (w < 0.0) w += 360.0;
  if (w >= 360.0) w -= 360.0;
  return w;
}

/// Shannon capacity in bps/Hz for an SNR given in dB.
inline double capacity_bps_hz(double snr_db) {
  return std::log2(1.0 + from_db(snr_db));
}

// 10·log10(3): per-sector share of the BS transmit power.
inline const double kSectorSplitDb = 10.0 * std::log10(3.0);

}  // namespace coexsim

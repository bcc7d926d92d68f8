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
#include <span>

#include "coexsim/context.hpp"
#include "coexsim/geometry.hpp"

namespace coexsim {

enum class LosClass { kNlos = 0, kLos = 1 };

/// Log-normal shadowing. Each link's draw is keyed by (seed, link id) and is
/// therefore frozen for the whole run.
struct ShadowFadingParams {
  double sigma_los_db = 4.0;
  double sigma_nlos_db = 6.0;
  std::uint64_t seed = 0;

  bool operator==(const ShadowFadingParams&) const = default;
};

/// Rain-rate dependent coefficients of the cubic specific-attenuation fit
/// (vertical polarization, 10-100 GHz).
struct RainModel {
  double rain_rate_mm_h = 0.0;
  double a = 0.0, b = 0.0, c = 0.0, d = 0.0;

  static RainModel for_rate(double rain_rate_mm_h);

  /// a f³ + b f² + c f + d before the non-negativity clamp.
  double raw_attenuation_db_per_km(double freq_ghz) const;
};

inline constexpr double kRainModelMinGhz = 10.0;
inline constexpr double kRainModelMaxGhz = 100.0;

/// NLOS iff the segment tx->rx passes through a building volume: it crosses a
/// footprint edge below the roof, or an endpoint sits inside a footprint
/// below the roof.
LosClass classify_los(const GeoPoint& tx, const GeoPoint& rx,
                      std::span<const Building> buildings);

// 3GPP TR 38.901 UMa, h_UT = 1.5 m. LOS uses the pre-breakpoint expression
// at every distance; NLOS is max(LOS, NLOS') as in the standard.
double uma_los_db(double d3d_m, double freq_ghz);
double uma_nlos_db(double d3d_m, double freq_ghz);

/// Frozen zero-mean Gaussian shadowing term in dB for one link.
double shadow_fading_db(LosClass los, const ShadowFadingParams& sf,
                        std::uint64_t link_id);

/// Deterministic path loss plus frozen shadowing. Throws
/// std::invalid_argument unless d3d_m > 0.
double path_loss_db(double d3d_m, double freq_ghz, LosClass los,
                    const ShadowFadingParams& sf, std::uint64_t link_id);

/// Specific rain attenuation max(0, a f³ + b f² + c f + d) in dB/km.
/// Throws std::invalid_argument for f outside (10, 100) GHz or x < 0.
double rain_attenuation_db_per_km(double rain_rate_mm_h, double freq_ghz);

/// Sunny: base_pl. Rainy: base_pl + A_rain(x, f)·d_km.
double path_loss_weather_db(double d_km, double base_pl_db,
                            const WeatherContext& weather, double freq_ghz);

}  // namespace coexsim

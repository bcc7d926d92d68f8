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

#include "coexsim/propagation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "coexsim/rng.hpp"

namespace coexsim {

RainModel RainModel::for_rate(double x) {
  RainModel m;
  m.rain_rate_mm_h = x;
  const double x2 = x * x;
  const double x3 = x2 * x;
  m.a = -5.520e-12 * x3 + 3.26e-9 * x2 - 1.21e-7 * x - 6e-6;
  m.b = 8e-10 * x3 - 4.522e-7 * x2 - 3.03e-5 * x + 0.001;
  m.c = -5.71e-9 * x3 + 6e-7 * x2 + 8.707e-3 * x - 0.018;
  m.d = -1.073e-7 * x3 + 1.068e-4 * x2 - 0.0598e-3 * x + 0.0442;
  return m;
}

double RainModel::raw_attenuation_db_per_km(double f) const {
  return ((a * f + b) * f + c) * f + d;
}

double rain_attenuation_db_per_km(double rain_rate_mm_h, double freq_ghz) {
  if (!(freq_ghz > kRainModelMinGhz && freq_ghz < kRainModelMaxGhz)) {
    throw std::invalid_argument("rain attenuation model is valid for 10-100 GHz only");
  }
  if (!(rain_rate_mm_h >= 0.0)) {
    throw std::invalid_argument("rain rate must be >= 0");
  }
  return std::max(0.0, RainModel::for_rate(rain_rate_mm_h).raw_attenuation_db_per_km(freq_ghz));
}

double path_loss_weather_db(double d_km, double base_pl_db, const WeatherContext& weather,
                            double freq_ghz) {
  if (weather.condition == WeatherCondition::kSunny) return base_pl_db;
  return base_pl_db + rain_attenuation_db_per_km(weather.rain_rate_mm_h, freq_ghz) * d_km;
}

LosClass classify_los(const GeoPoint& tx, const GeoPoint& rx,
                      std::span<const Building> buildings) {
  const Point2 p0{tx.x, tx.y};
  const Point2 p1{rx.x, rx.y};
  const double seg_min_x = std::min(tx.x, rx.x), seg_max_x = std::max(tx.x, rx.x);
  const double seg_min_y = std::min(tx.y, rx.y), seg_max_y = std::max(tx.y, rx.y);

  for (const Building& b : buildings) {
    const BoundingBox box = bounding_box(b.footprint);
    if (box.max_x < seg_min_x || box.min_x > seg_max_x || box.max_y < seg_min_y ||
        box.min_y > seg_max_y) {
      continue;
    }
    if ((tx.z < b.height_m && point_in_polygon(p0, b.footprint)) ||
        (rx.z < b.height_m && point_in_polygon(p1, b.footprint))) {
      return LosClass::kNlos;
    }
    const std::size_t n = b.footprint.size();
    for (std::size_t i = 0; i < n; ++i) {
      const double t = segment_crossing(p0, p1, b.footprint[i], b.footprint[(i + 1) % n]);
      if (t < 0.0) continue;
      const double z = tx.z + t * (rx.z - tx.z);
      if (z < b.height_m) return LosClass::kNlos;
    }
  }
  return LosClass::kLos;
}

double uma_los_db(double d3d_m, double freq_ghz) {
  return 28.0 + 22.0 * std::log10(d3d_m) + 20.0 * std::log10(freq_ghz);
}

double uma_nlos_db(double d3d_m, double freq_ghz) {
  const double nlos = 13.54 + 39.08 * std::log10(d3d_m) + 20.0 * std::log10(freq_ghz);
  return std::max(uma_los_db(d3d_m, freq_ghz), nlos);
}

double shadow_fading_db(LosClass los, const ShadowFadingParams& sf, std::uint64_t link_id) {
  const double sigma = los == LosClass::kLos ? sf.sigma_los_db : sf.sigma_nlos_db;
  if (sigma == 0.0) return 0.0;
  return sigma * keyed_standard_normal(hash_combine(sf.seed, link_id));
}

double path_loss_db(double d3d_m, double freq_ghz, LosClass los, const ShadowFadingParams& sf,
                    std::uint64_t link_id) {
  if (!(d3d_m > 0.0)) throw std::invalid_argument("path_loss_db: distance must be > 0");
  const double base = los == LosClass::kLos ? uma_los_db(d3d_m, freq_ghz)
                                            : uma_nlos_db(d3d_m, freq_ghz);
  return base + shadow_fading_db(los, sf, link_id);
}

}  // namespace coexsim

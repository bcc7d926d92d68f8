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

// Reference evaluations written directly from the model formulas. They share
// no code with the library so a mismatch points at one side or the other.

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "coexsim/geometry.hpp"

namespace coexsim::oracle {

/// Planar array power gain as an explicit element sum,
/// |Σ_m Σ_l exp(j(m ψx + l ψy))|² / (M·L).
inline double array_factor_sum(int rows, int cols, double dx, double dy, double theta,
                               double phi, double beta_x, double beta_y) {
  const double two_pi = 2.0 * std::acos(-1.0);
  const double psi_x = two_pi * dx * std::sin(theta) * std::cos(phi) + beta_x;
  const double psi_y = two_pi * dy * std::sin(theta) * std::sin(phi) + beta_y;
  std::complex<double> acc{0.0, 0.0};
  for (int m = 0; m < rows; ++m) {
    for (int l = 0; l < cols; ++l) {
      acc += std::polar(1.0, m * psi_x + l * psi_y);
    }
  }
  return std::norm(acc) / (rows * cols);
}

/// Specific rain attenuation with each coefficient spelled out term by term.
inline double rain_raw_db_per_km(double x, double f) {
  const double a = -5.520e-12 * std::pow(x, 3) + 3.26e-9 * std::pow(x, 2) - 1.21 * x * 1e-7 - 6e-6;
  const double b = 8e-10 * std::pow(x, 3) - 4.522e-7 * std::pow(x, 2) - 3.03 * x * 1e-5 + 0.001;
  const double c = -5.71e-9 * std::pow(x, 3) + 6e-7 * std::pow(x, 2) + 8.707 * x * 1e-3 - 0.018;
  const double d = -1.073e-7 * std::pow(x, 3) + 1.068e-4 * std::pow(x, 2) - 0.0598 * x * 1e-3 + 0.0442;
  return a * std::pow(f, 3) + b * std::pow(f, 2) + c * f + d;
}

inline double rain_db_per_km(double x, double f) {
  const double raw = rain_raw_db_per_km(x, f);
  return raw > 0.0 ? raw : 0.0;
}

/// Ray-casting containment test, independent of the library's geometry code.
inline bool inside(const std::vector<Point2>& ring, double px, double py) {
  bool in = false;
  const std::size_t n = ring.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point2& a = ring[i];
    const Point2& b = ring[j];
    if ((a.y > py) != (b.y > py)) {
      const double x_cross = a.x + (py - a.y) * (b.x - a.x) / (b.y - a.y);
      if (px < x_cross) in = !in;
    }
  }
  return in;
}

/// True when any of `samples` evenly spaced interior points of tx→rx lies
/// inside a footprint below that building's roof.
inline bool blocked_by_sampling(const GeoPoint& tx, const GeoPoint& rx,
                                const std::vector<Building>& buildings,
                                int samples = 1000) {
  for (int i = 0; i < samples; ++i) {
    const double t = (i + 0.5) / samples;
    const double x = tx.x + t * (rx.x - tx.x);
    const double y = tx.y + t * (rx.y - tx.y);
    const double z = tx.z + t * (rx.z - tx.z);
    for (const Building& b : buildings) {
      if (z < b.height_m && inside(b.footprint, x, y)) return true;
    }
  }
  return false;
}

/// Axis-aligned rectangular footprint.
inline Building box(double x0, double y0, double x1, double y1, double height) {
  return Building{{{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}}, height};
}

}  // namespace coexsim::oracle

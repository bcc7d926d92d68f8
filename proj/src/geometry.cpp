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

#include "coexsim/geometry.hpp"

#include <algorithm>

#include "coexsim/units.hpp"

namespace coexsim {

Vec3 direction_from_az_el(double azimuth_deg, double elevation_deg) {
  const double az = deg_to_rad(azimuth_deg);
  const double el = deg_to_rad(elevation_deg);
  return {std::cos(el) * std::sin(az), std::cos(el) * std::cos(az),
          std::sin(el)};
}

double azimuth_deg(const GeoPoint& from, const GeoPoint& to) {
  return wrap_degrees(rad_to_deg(std::atan2(to.x - from.x, to.y - from.y)));
}

double angle_between_deg(const Vec3& a, const Vec3& b) {
  const double c = a.dot(b) / (a.norm() * b.norm());
  return rad_to_deg(std::acos(std::clamp(c, -1.0, 1.0)));
}

namespace {

double cross2(Point2 o, Point2 a, Point2 b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool on_segment(Point2 p, Point2 a, Point2 b) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

double param_along(Point2 p0, Point2 p1, Point2 q) {
  const double dx = p1.x - p0.x;
  const double dy = p1.y - p0.y;
  const double len2 = dx * dx + dy * dy;
  if (len2 == 0.0) return 0.0;
  return std::clamp(((q.x - p0.x) * dx + (q.y - p0.y) * dy) / len2, 0.0, 1.0);
}

}  // namespace

double segment_crossing(Point2 p0, Point2 p1, Point2 q0, Point2 q1) {
  const double d1 = cross2(q0, q1, p0);
  const double d2 = cross2(q0, q1, p1);
  const double d3 = cross2(p0, p1, q0);
  const double d4 = cross2(p0, p1, q1);

  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
      ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) {
    return d1 / (d1 - d2);
  }
  if (d1 == 0 && d2 == 0) {
    // Collinear: report the earliest shared point along p.
    double best = -1.0;
    for (Point2 q : {q0, q1}) {
      if (on_segment(q, p0, p1)) {
        const double t = param_along(p0, p1, q);
        if (best < 0 || t < best) best = t;
      }
    }
    if (on_segment(p0, q0, q1)) best = 0.0;
    return best;
  }
  if (d1 == 0 && on_segment(p0, q0, q1)) return 0.0;
  if (d2 == 0 && on_segment(p1, q0, q1)) return 1.0;
  if (d3 == 0 && on_segment(q0, p0, p1)) return param_along(p0, p1, q0);
  if (d4 == 0 && on_segment(q1, p0, p1)) return param_along(p0, p1, q1);
  return -1.0;
}

bool point_in_polygon(Point2 p, std::span<const Point2> ring) {
  bool inside = false;
  const std::size_t n = ring.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point2 a = ring[i];
    const Point2 b = ring[j];
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x_at = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < x_at) inside = !inside;
    }
  }
  return inside;
}

bool is_simple_polygon(std::span<const Point2> ring) {
  const std::size_t n = ring.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (ring[i].x == ring[j].x && ring[i].y == ring[j].y) return false;
    }
  }
  // Zero-area rings (all vertices collinear) are degenerate.
  double area2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 a = ring[i];
    const Point2 b = ring[(i + 1) % n];
    area2 += a.x * b.y - b.x * a.y;
  }
  if (area2 == 0.0) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 a0 = ring[i];
    const Point2 a1 = ring[(i + 1) % n];
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (adjacent) continue;
      const Point2 b0 = ring[j];
      const Point2 b1 = ring[(j + 1) % n];
      if (segment_crossing(a0, a1, b0, b1) >= 0.0) return false;
    }
  }
  return true;
}

BoundingBox bounding_box(std::span<const Point2> ring) {
  BoundingBox b;
  if (ring.empty()) return b;
  b.min_x = b.max_x = ring[0].x;
  b.min_y = b.max_y = ring[0].y;
  for (const Point2& p : ring) {
    b.min_x = std::min(b.min_x, p.x);
    b.max_x = std::max(b.max_x, p.x);
    b.min_y = std::min(b.min_y, p.y);
    b.max_y = std::max(b.max_y, p.y);
  }
  return b;
}

}  // namespace coexsim

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
#include <span>
#include <vector>

namespace coexsim {

/// Point in the local planar frame: x east, y north, z height above ground (m).
struct GeoPoint {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  bool operator==(const GeoPoint&) const = default;
};

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  Vec3 cross(const Vec3& o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }
  double norm() const { return std::sqrt(dot(*this)); }
  Vec3 normalized() const {
    const double n = norm();
    return n > 0.0 ? *this * (1.0 / n) : Vec3{};
  }
};

inline Vec3 to_vec(const GeoPoint& p) { return {p.x, p.y, p.z}; }

inline double distance_2d(const GeoPoint& a, const GeoPoint& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

inline double distance_3d(const GeoPoint& a, const GeoPoint& b) {
  return (to_vec(a) - to_vec(b)).norm();
}

/// Unit vector for an azimuth (degrees clockwise from north) and elevation
/// (degrees above the horizon).
Vec3 direction_from_az_el(double azimuth_deg, double elevation_deg);

/// Compass azimuth in degrees [0, 360) of the horizontal vector from a to b.
double azimuth_deg(const GeoPoint& from, const GeoPoint& to);

/// Angle in degrees between two non-zero vectors.
double angle_between_deg(const Vec3& a, const Vec3& b);

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  bool operator==(const Point2&) const = default;
};

/// Parameter t in [0, 1] along p0->p1 where it crosses segment q0->q1, or a
/// negative value when the two closed segments do not intersect. Collinear
/// overlaps report the first overlapping point along p0->p1.
double segment_crossing(Point2 p0, Point2 p1, Point2 q0, Point2 q1);

/// Even-odd point-in-polygon test; points on the boundary may go either way.
bool point_in_polygon(Point2 p, std::span<const Point2> ring);

/// True when the ring has at least 3 distinct vertices and no pair of
/// non-adjacent edges touches. The ring is implicitly closed.
bool is_simple_polygon(std::span<const Point2> ring);

/// Extruded building footprint. The ring is implicitly closed.
struct Building {
  std::vector<Point2> footprint;
  double height_m = 0.0;

  bool operator==(const Building&) const = default;
};

struct BoundingBox {
  double min_x = 0.0, min_y = 0.0, max_x = 0.0, max_y = 0.0;
};

BoundingBox bounding_box(std::span<const Point2> ring);

}  // namespace coexsim

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

#include <doctest.h>

#include <vector>

#include "coexsim/geometry.hpp"
#include "coexsim/units.hpp"

using namespace coexsim;

TEST_CASE("to_db applies the floor to zero, negative and tiny inputs") {
  CHECK(to_db(0.0) == kDbFloor);
  CHECK(to_db(-3.0) == kDbFloor);
  CHECK(to_db(1e-25) == kDbFloor);
  CHECK(to_db(100.0) == doctest::Approx(20.0));
  CHECK(from_db(to_db(42.0)) == doctest::Approx(42.0));
}

TEST_CASE("wrap_degrees maps into [0, 360)") {
  CHECK(wrap_degrees(360.0) == 0.0);
  CHECK(wrap_degrees(-90.0) == doctest::Approx(270.0));
  CHECK(wrap_degrees(725.0) == doctest::Approx(5.0));
  CHECK(wrap_degrees(-1e-14) < 360.0);
}

TEST_CASE("azimuth is measured clockwise from north") {
  const GeoPoint o{0, 0, 0};
  CHECK(azimuth_deg(o, {0, 10, 0}) == doctest::Approx(0.0));
  CHECK(azimuth_deg(o, {10, 0, 0}) == doctest::Approx(90.0));
  CHECK(azimuth_deg(o, {0, -10, 0}) == doctest::Approx(180.0));
  CHECK(azimuth_deg(o, {-10, 0, 0}) == doctest::Approx(270.0));
}

TEST_CASE("direction_from_az_el is a unit vector with the requested angles") {
  const Vec3 v = direction_from_az_el(90.0, 30.0);
  CHECK(v.norm() == doctest::Approx(1.0));
  CHECK(v.z == doctest::Approx(0.5));
  CHECK(v.x == doctest::Approx(std::sqrt(3.0) / 2.0));
  CHECK(angle_between_deg(direction_from_az_el(0, 0), direction_from_az_el(90, 0)) ==
        doctest::Approx(90.0));
}

TEST_CASE("segment_crossing reports the parameter along the first segment") {
  CHECK(segment_crossing({0, 0}, {10, 0}, {5, -1}, {5, 1}) == doctest::Approx(0.5));
  CHECK(segment_crossing({0, 0}, {10, 0}, {5, 1}, {5, 2}) < 0.0);
  CHECK(segment_crossing({0, 0}, {10, 0}, {12, -1}, {12, 1}) < 0.0);
  // Touching at an endpoint counts.
  CHECK(segment_crossing({0, 0}, {10, 0}, {10, 0}, {10, 5}) == doctest::Approx(1.0));
  // Collinear overlap starts at the first shared point.
  CHECK(segment_crossing({0, 0}, {10, 0}, {4, 0}, {20, 0}) == doctest::Approx(0.4));
}

TEST_CASE("point_in_polygon on a concave ring") {
  const std::vector<Point2> l_shape{{0, 0}, {10, 0}, {10, 4}, {4, 4}, {4, 10}, {0, 10}};
  CHECK(point_in_polygon({2, 2}, l_shape));
  CHECK(point_in_polygon({2, 8}, l_shape));
  CHECK_FALSE(point_in_polygon({8, 8}, l_shape));
  CHECK_FALSE(point_in_polygon({-1, 2}, l_shape));
}

TEST_CASE("is_simple_polygon rejects degenerate and self-intersecting rings") {
  CHECK(is_simple_polygon(std::vector<Point2>{{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
  CHECK_FALSE(is_simple_polygon(std::vector<Point2>{{0, 0}, {1, 0}}));
  CHECK_FALSE(is_simple_polygon(std::vector<Point2>{{0, 0}, {1, 0}, {0, 0}}));
  CHECK_FALSE(is_simple_polygon(std::vector<Point2>{{0, 0}, {1, 1}, {1, 0}, {0, 1}}));
  CHECK_FALSE(is_simple_polygon(std::vector<Point2>{{0, 0}, {1, 0}, {2, 0}}));
}

TEST_CASE("bounding_box spans all vertices") {
  const std::vector<Point2> ring{{3, -1}, {5, 2}, {-2, 4}};
  const BoundingBox b = bounding_box(ring);
  CHECK(b.min_x == -2.0);
  CHECK(b.max_x == 5.0);
  CHECK(b.min_y == -1.0);
  CHECK(b.max_y == 4.0);
}

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

#include <span>
#include <vector>

#include "coexsim/geometry.hpp"

namespace coexsim {

/// Planar M×L array. Spacings are in wavelengths.
struct ArrayConfig {
  int rows = 4;
  int cols = 4;
  double dx = 0.5;
  double dy = 0.5;
  double wavelength_m = 0.0;  // informational; phases only need dx, dy

  bool operator==(const ArrayConfig&) const = default;
};

ArrayConfig make_array_config(int rows, int cols, double carrier_ghz,
                              double spacing_wavelengths = 0.5);

/// Progressive phase shifts of one codebook entry (radians).
struct BeamPhase {
  double beta_x = 0.0;
  double beta_y = 0.0;

  bool operator==(const BeamPhase&) const = default;
};

/// Row-major grid of phase pairs. Kept as two parallel arrays so the SIMD
/// kernels can stream them directly.
class BeamCodebook {
 public:
  BeamCodebook() = default;
  BeamCodebook(int grid_x, int grid_y, std::vector<double> beta_x,
               std::vector<double> beta_y);

  std::size_t size() const { return beta_x_.size(); }
  BeamPhase entry(std::size_t i) const { return {beta_x_[i], beta_y_[i]}; }
  std::span<const double> beta_x() const { return beta_x_; }
  std::span<const double> beta_y() const { return beta_y_; }
  int grid_x() const { return grid_x_; }
  int grid_y() const { return grid_y_; }

 private:
  int grid_x_ = 0;
  int grid_y_ = 0;
  std::vector<double> beta_x_;
  std::vector<double> beta_y_;
};

/// Builds a uniform phase grid over [-π, π)² with n_beams entries. The grid
/// is gx × gy where gx is the largest divisor of n_beams not above its square
/// root. An axis with a single grid point uses phase 0 (broadside).
/// Throws std::invalid_argument for n_beams <= 0.
BeamCodebook build_codebook(const ArrayConfig& cfg, int n_beams);

/// Angles in the array's own frame: theta from the array normal, phi in the
/// array plane measured from the row axis.
struct Direction {
  double theta = 0.0;
  double phi = 0.0;
};

/// Linear power gain of one beam, in [0, M·L].
double array_factor(const ArrayConfig& cfg, const BeamPhase& beam,
                    const Direction& dir);

/// 10·log10(array_factor) with the -200 dB floor.
double beam_gain_dbi(const ArrayConfig& cfg, const BeamPhase& beam,
                     const Direction& dir);

/// Orientation of one sub-array panel. The normal points along the panel's
/// boresight (compass azimuth, tilted down by `down_tilt_deg`); the row axis
/// is horizontal and the column axis completes a right-handed frame.
struct PanelFrame {
  Vec3 normal;
  Vec3 row_axis;
  Vec3 col_axis;

  static PanelFrame from_pointing(double azimuth_deg, double down_tilt_deg);

  /// Direction of a global unit vector in panel coordinates.
  Direction to_local(const Vec3& unit) const;
};

/// Gain of every codebook entry toward one global direction, in dBi.
/// Runs on the active SIMD kernel.
void beam_sweep_gain_dbi(const ArrayConfig& cfg, const BeamCodebook& codebook,
                         const PanelFrame& frame, const Vec3& unit_direction,
                         std::span<double> out_dbi);

/// Sidelobe envelope 32 - 25·log10(φ) of the incumbent earth-station pattern
/// (no floor applied). φ in degrees, > 0.
double fss_sidelobe_envelope_dbi(double off_axis_deg);

/// Incumbent receive gain at an off-axis angle (degrees, [0, 180]):
/// the parabolic mainlobe G - 2.5e-3·(D/λ·φ)², with 20·log10(D/λ) = G - 7.7,
/// out to where it first meets the sidelobe envelope, then the envelope,
/// never above G and never below the -10 dBi far-sidelobe floor.
double fss_gain_dbi(double max_gain_dbi, double off_axis_deg);

}  // namespace coexsim

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

#include "coexsim/antenna.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "coexsim/kernels.hpp"
#include "coexsim/units.hpp"

namespace coexsim {

ArrayConfig make_array_config(int rows, int cols, double carrier_ghz,
                              double spacing_wavelengths) {
  ArrayConfig cfg;
  cfg.rows = rows;
  cfg.cols = cols;
  cfg.dx = spacing_wavelengths;
  cfg.dy = spacing_wavelengths;
  cfg.wavelength_m = carrier_ghz > 0.0 ? kSpeedOfLight / (carrier_ghz * 1e9) : 0.0;
  return cfg;
}

BeamCodebook::BeamCodebook(int grid_x, int grid_y, std::vector<double> beta_x,
                           std::vector<double> beta_y)
    : grid_x_(grid_x),
      grid_y_(grid_y),
      beta_x_(std::move(beta_x)),
      beta_y_(std::move(beta_y)) {}

namespace {

std::vector<double> phase_axis(int points) {
  if (points == 1) return {0.0};
  std::vector<double> axis(points);
  for (int i = 0; i < points; ++i) axis[i] = -kPi + 2.0 * kPi * i / points;
  return axis;
}

}  // namespace

BeamCodebook build_codebook(const ArrayConfig& /*cfg*/, int n_beams) {
  if (n_beams <= 0) throw std::invalid_argument("build_codebook: n_beams must be positive");
  int gx = 1;
  for (int d = 1; d * d <= n_beams; ++d) {
    if (n_beams % d == 0) gx = d;
  }
  const int gy = n_beams / gx;
  const auto ax = phase_axis(gx);
  const auto ay = phase_axis(gy);
  std::vector<double> bx, by;
  bx.reserve(n_beams);
  by.reserve(n_beams);
  for (int i = 0; i < gx; ++i) {
    for (int j = 0; j < gy; ++j) {
      bx.push_back(ax[i]);
      by.push_back(ay[j]);
    }
  }
  return BeamCodebook(gx, gy, std::move(bx), std::move(by));
}

double array_factor(const ArrayConfig& cfg, const BeamPhase& beam, const Direction& dir) {
  const double st = std::sin(dir.theta);
  const double psi_x = 2.0 * kPi * cfg.dx * st * std::cos(dir.phi) + beam.beta_x;
  const double psi_y = 2.0 * kPi * cfg.dy * st * std::sin(dir.phi) + beam.beta_y;
  return kernels::axis_factor(cfg.rows, psi_x) * kernels::axis_factor(cfg.cols, psi_y);
}

double beam_gain_dbi(const ArrayConfig& cfg, const BeamPhase& beam, const Direction& dir) {
  return to_db(array_factor(cfg, beam, dir));
}

PanelFrame PanelFrame::from_pointing(double azimuth_deg, double down_tilt_deg) {
  PanelFrame f;
  f.normal = direction_from_az_el(azimuth_deg, -down_tilt_deg);
  f.row_axis = direction_from_az_el(azimuth_deg + 90.0, 0.0);
  f.col_axis = f.row_axis.cross(f.normal).normalized();
  return f;
}

Direction PanelFrame::to_local(const Vec3& unit) const {
  const double c = std::clamp(unit.dot(normal), -1.0, 1.0);
  return {std::acos(c), std::atan2(unit.dot(col_axis), unit.dot(row_axis))};
}

void beam_sweep_gain_dbi(const ArrayConfig& cfg, const BeamCodebook& codebook,
                         const PanelFrame& frame, const Vec3& unit_direction,
                         std::span<double> out_dbi) {
  kernels::ArrayFactorArgs args;
  args.rows = cfg.rows;
  args.cols = cfg.cols;
  args.geo_x = 2.0 * kPi * cfg.dx * unit_direction.dot(frame.row_axis);
  args.geo_y = 2.0 * kPi * cfg.dy * unit_direction.dot(frame.col_axis);
  args.beta_x = codebook.beta_x();
  args.beta_y = codebook.beta_y();
  kernels::array_factor(args, out_dbi.first(codebook.size()));
  for (std::size_t i = 0; i < codebook.size(); ++i) out_dbi[i] = to_db(out_dbi[i]);
}

double fss_sidelobe_envelope_dbi(double off_axis_deg) {
  return 32.0 - 25.0 * std::log10(off_axis_deg);
}

namespace {

double fss_mainlobe_dbi(double max_gain_dbi, double d_over_lambda, double phi) {
  const double t = d_over_lambda * phi;
  return max_gain_dbi - 2.5e-3 * t * t;
}

// First angle where the parabolic mainlobe meets the sidelobe envelope;
// 0 when they never meet (the envelope then applies everywhere).
double fss_mainlobe_edge_deg(double max_gain_dbi, double d_over_lambda) {
  auto gap = [&](double phi) {
    return fss_mainlobe_dbi(max_gain_dbi, d_over_lambda, phi) - fss_sidelobe_envelope_dbi(phi);
  };
  constexpr double kStep = 0.01;
  double lo = 0.0;
  for (double hi = kStep; hi <= 180.0; hi += kStep) {
    if (gap(hi) >= 0.0) {
      for (int i = 0; i < 60; ++i) {
        const double mid = 0.5 * (lo + hi);
        (gap(mid) >= 0.0 ? hi : lo) = mid;
      }
      return hi;
    }
    lo = hi;
  }
  return 0.0;
}

}  // namespace

double fss_gain_dbi(double max_gain_dbi, double off_axis_deg) {
  const double phi = std::fabs(off_axis_deg);
  if (phi == 0.0) return max_gain_dbi;
  const double d_over_lambda = std::pow(10.0, (max_gain_dbi - 7.7) / 20.0);
  thread_local double cached_gain = std::numeric_limits<double>::quiet_NaN();
  thread_local double cached_edge = 0.0;
  if (max_gain_dbi != cached_gain) {
    cached_edge = fss_mainlobe_edge_deg(max_gain_dbi, d_over_lambda);
    cached_gain = max_gain_dbi;
  }
  const double g = phi < cached_edge ? fss_mainlobe_dbi(max_gain_dbi, d_over_lambda, phi)
                                     : fss_sidelobe_envelope_dbi(phi);
  return std::max(std::min(g, max_gain_dbi), -10.0);
}

}  // namespace coexsim

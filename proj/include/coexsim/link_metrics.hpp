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

#include <compare>
#include <cstddef>
#include <limits>
#include <vector>

#include "coexsim/antenna.hpp"
#include "coexsim/context.hpp"
#include "coexsim/propagation.hpp"
#include "coexsim/scenario.hpp"

namespace coexsim {

/// (sub-array, codebook entry) pair loaded into one sector.
struct BeamIndex {
  int subarray = 0;
  int beam = 0;

  auto operator<=>(const BeamIndex&) const = default;
};

struct BsState {
  bool active = false;
  double power_dbm = std::numeric_limits<double>::quiet_NaN();
  // Selected beams per sector. More than one entry violates C4; the type
  // allows it so constraint checks can report it.
  std::vector<std::vector<BeamIndex>> sectors;

  bool operator==(const BsState&) const = default;
};

/// Activation, beam selection and power of every BS.
struct NetworkState {
  std::vector<BsState> bs;

  static NetworkState all_off(const Scenario& s);
  std::size_t active_count() const;
};

/// One dB link budget; resulting_level is the sum of the terms.
struct LinkBudget {
  double tx_power_dbm = 0.0;
  double tx_gain_dbi = 0.0;
  double rx_gain_dbi = 0.0;
  double path_loss_db = 0.0;
  double sector_split_loss_db = 0.0;
  double resulting_level_dbm = 0.0;
};

LinkBudget make_link_budget(double tx_power_dbm, double tx_gain_dbi, double rx_gain_dbi,
                            double path_loss_db, double sector_split_loss_db);

/// BS→incumbent interference link of one base station.
struct FssLink {
  double distance_m = 0.0;
  LosClass los = LosClass::kLos;
  double path_loss_db = 0.0;  // weather adjusted
  double off_axis_deg = 0.0;
  double rx_gain_dbi = 0.0;
};

/// BS→UE access link.
struct UeLink {
  int ue_id = 0;
  double distance_m = 0.0;
  LosClass los = LosClass::kLos;
  double path_loss_db = 0.0;  // weather adjusted
  BeamIndex serving;          // max-gain beam within the sector
  double serving_gain_dbi = 0.0;
};

/// Everything the control layer needs about one scenario under one weather
/// context, computed once. Immutable after construction.
class LinkEnvironment {
 public:
  /// Keeps a reference to `scenario`, which must outlive the environment.
  LinkEnvironment(const Scenario& scenario, const WeatherContext& weather);
  LinkEnvironment(Scenario&&, const WeatherContext&) = delete;

  const Scenario& scenario() const { return *scenario_; }
  const WeatherContext& weather() const { return weather_; }
  const BeamCodebook& codebook() const { return codebook_; }

  std::size_t bs_count() const { return fss_links_.size(); }
  std::size_t sector_count(std::size_t k) const { return ues_[k].size(); }
  int subarray_count(std::size_t k, std::size_t j) const;
  int beams_per_subarray() const { return static_cast<int>(codebook_.size()); }

  const FssLink& fss_link(std::size_t k) const { return fss_links_[k]; }
  const std::vector<UeLink>& ue_links(std::size_t k, std::size_t j) const { return ues_[k][j]; }

  /// Transmit gain of a beam toward the incumbent.
  double gain_to_fss_dbi(std::size_t k, std::size_t j, BeamIndex b) const;

  /// UE indices (into ue_links(k, j)) served by beam b.
  const std::vector<int>& served_ues(std::size_t k, std::size_t j, BeamIndex b) const;

  /// I - P: the power-independent part of a sector's interference level.
  double interference_offset_db(std::size_t k, std::size_t j, BeamIndex b) const;

  /// SNR - P for one UE on its serving beam.
  double snr_offset_db(std::size_t k, std::size_t j, std::size_t ue) const;

  /// Per-sector power grid in dBm for BS k.
  std::vector<double> power_grid_dbm(std::size_t k) const;
  double max_power_dbm(std::size_t k) const;

  double fss_noise_dbm() const { return scenario_->fss.noise_power_dbm; }
  double ue_noise_dbm() const { return scenario_->ue_noise_power_dbm; }

 private:
  std::size_t flat(std::size_t k, std::size_t j, BeamIndex b) const;

  const Scenario* scenario_;
  WeatherContext weather_;
  BeamCodebook codebook_;
  std::vector<FssLink> fss_links_;
  std::vector<std::vector<std::vector<UeLink>>> ues_;
  // Per (k, j): offset into the flat beam tables below.
  std::vector<std::vector<std::size_t>> sector_base_;
  std::vector<double> fss_gain_;              // flat over (k, j, m, n)
  std::vector<std::vector<int>> served_;      // flat over (k, j, m, n)
};

/// Stable per-link identifiers for the shadow-fading draw.
std::uint64_t fss_link_id(int bs_id);
std::uint64_t ue_link_id(int bs_id, int ue_id);

/// I^{(j)}_{k,m,n} in dBm and its budget.
LinkBudget sector_interference_budget(const LinkEnvironment& env, std::size_t k,
                                      std::size_t j, BeamIndex b, double power_dbm);
double sector_interference_db(const LinkEnvironment& env, std::size_t k, std::size_t j,
                              BeamIndex b, double power_dbm);

/// Σ_j σ_kj 10^{I/10} over the selected beams of BS k, in mW; 0 if inactive.
double bs_interference_linear(const LinkEnvironment& env, const NetworkState& state,
                              std::size_t k);
double bs_interference_linear(const LinkEnvironment& env, const BsState& bs, std::size_t k);

/// Σ_k of bs_interference_linear, summed in BS order.
double aggregate_interference_mw(const LinkEnvironment& env, const NetworkState& state);

/// Interference-to-noise ratio for a linear interference total, with the
/// -200 dB floor.
double in_ratio_db(const LinkEnvironment& env, double interference_mw);

/// Aggregate I/N at the incumbent in dB (-200 dB floor when nothing radiates).
double aggregate_in_db(const LinkEnvironment& env, const NetworkState& state);

/// SNR of UE `ue` of sector (k, j) under beam b at the given BS power.
double ue_snr_db(const LinkEnvironment& env, std::size_t k, std::size_t j, BeamIndex b,
                 std::size_t ue, double power_dbm);

/// Σ log2(1 + SNR) over the UEs served by beam b.
double beam_capacity(const LinkEnvironment& env, std::size_t k, std::size_t j, BeamIndex b,
                     double power_dbm);

/// Minimum rate over the UEs served by beam b (+inf when it serves none).
double beam_min_rate(const LinkEnvironment& env, std::size_t k, std::size_t j, BeamIndex b,
                     double power_dbm);

/// Downlink capacity of BS k over its selected beams; 0 if inactive.
double bs_capacity(const LinkEnvironment& env, const NetworkState& state, std::size_t k);
double bs_capacity(const LinkEnvironment& env, const BsState& bs, std::size_t k);

/// Number of UEs served by the selected beams of BS k; 0 if inactive.
std::size_t bs_served_ues(const LinkEnvironment& env, const NetworkState& state,
                          std::size_t k);
std::size_t bs_served_ues(const LinkEnvironment& env, const BsState& bs, std::size_t k);

}  // namespace coexsim

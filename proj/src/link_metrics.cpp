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

#include "coexsim/link_metrics.hpp"

#include <cmath>
#include <stdexcept>

#include "coexsim/kernels.hpp"
#include "coexsim/rng.hpp"
#include "coexsim/units.hpp"

namespace coexsim {

NetworkState NetworkState::all_off(const Scenario& s) {
  NetworkState st;
  st.bs.resize(s.base_stations.size());
  for (std::size_t k = 0; k < s.base_stations.size(); ++k) {
    st.bs[k].sectors.resize(s.base_stations[k].sectors.size());
  }
  return st;
}

std::size_t NetworkState::active_count() const {
  std::size_t n = 0;
  for (const auto& b : bs) n += b.active ? 1 : 0;
  return n;
}

LinkBudget make_link_budget(double tx_power_dbm, double tx_gain_dbi, double rx_gain_dbi,
                            double path_loss_db, double sector_split_loss_db) {
  return {tx_power_dbm, tx_gain_dbi, rx_gain_dbi, path_loss_db, sector_split_loss_db,
          tx_power_dbm + tx_gain_dbi + rx_gain_dbi - path_loss_db - sector_split_loss_db};
}

std::uint64_t fss_link_id(int bs_id) {
  return hash_combine(0xF55F55ULL, static_cast<std::uint64_t>(bs_id));
}

std::uint64_t ue_link_id(int bs_id, int ue_id) {
  return hash_combine(hash_combine(0x0E0E0EULL, static_cast<std::uint64_t>(bs_id)),
                      static_cast<std::uint64_t>(ue_id));
}

namespace {

PanelFrame panel(const BaseStation& bs, const Sector& sec, const SubArray& sa) {
  return PanelFrame::from_pointing(sec.azimuth_center_deg + sa.azimuth_offset_deg, bs.down_tilt_deg);
}

double weather_pl(const Scenario& s, const WeatherContext& w, double d3d, double base) {
  if (!s.rain_model_enabled) return base;
  return path_loss_weather_db(d3d / 1000.0, base, w, s.carrier_ghz);
}

}  // namespace

LinkEnvironment::LinkEnvironment(const Scenario& scenario, const WeatherContext& weather)
    : scenario_(&scenario),
      weather_(weather),
      codebook_(build_codebook(scenario.array, scenario.codebook_size)) {
  const Scenario& s = scenario;
  const std::size_t nb = codebook_.size();
  const GeoPoint fss_pt = s.fss.position;
  const Vec3 boresight = s.fss.boresight();
  std::vector<double> sweep(nb);

  fss_links_.resize(s.base_stations.size());
  ues_.resize(s.base_stations.size());
  sector_base_.resize(s.base_stations.size());
  std::size_t total = 0;
  for (std::size_t k = 0; k < s.base_stations.size(); ++k) {
    const BaseStation& bs = s.base_stations[k];
    for (const Sector& sec : bs.sectors) {
      sector_base_[k].push_back(total);
      total += sec.subarrays.size() * nb;
    }
  }
  fss_gain_.resize(total);
  served_.resize(total);

  for (std::size_t k = 0; k < s.base_stations.size(); ++k) {
    const BaseStation& bs = s.base_stations[k];
    const GeoPoint tx = bs.antenna_point();

    FssLink& fl = fss_links_[k];
    fl.distance_m = distance_3d(tx, fss_pt);
    fl.los = classify_los(tx, fss_pt, s.buildings);
    fl.path_loss_db = weather_pl(s, weather, fl.distance_m,
                                 path_loss_db(fl.distance_m, s.carrier_ghz, fl.los, s.shadow,
                                              fss_link_id(bs.id)));
    fl.off_axis_deg = angle_between_deg(boresight, to_vec(tx) - to_vec(fss_pt));
    fl.rx_gain_dbi = fss_gain_dbi(s.fss, fl.off_axis_deg);
    const Vec3 to_fss = (to_vec(fss_pt) - to_vec(tx)).normalized();

    ues_[k].resize(bs.sectors.size());
    for (std::size_t j = 0; j < bs.sectors.size(); ++j) {
      const Sector& sec = bs.sectors[j];
      const std::size_t base = sector_base_[k][j];
      std::vector<PanelFrame> frames;
      for (const SubArray& sa : sec.subarrays) frames.push_back(panel(bs, sec, sa));

      for (std::size_t m = 0; m < frames.size(); ++m) {
        beam_sweep_gain_dbi(s.array, codebook_, frames[m], to_fss,
                            std::span<double>(fss_gain_).subspan(base + m * nb, nb));
      }

      auto& links = ues_[k][j];
      for (std::size_t u = 0; u < sec.ues.size(); ++u) {
        const UserEquipment& ue = sec.ues[u];
        UeLink ul;
        ul.ue_id = ue.id;
        ul.distance_m = distance_3d(tx, ue.position);
        ul.los = classify_los(tx, ue.position, s.buildings);
        ul.path_loss_db = weather_pl(s, weather, ul.distance_m,
                                     path_loss_db(ul.distance_m, s.carrier_ghz, ul.los, s.shadow,
                                                  ue_link_id(bs.id, ue.id)));
        const Vec3 dir = (to_vec(ue.position) - to_vec(tx)).normalized();
        double best = -std::numeric_limits<double>::infinity();
        for (std::size_t m = 0; m < frames.size(); ++m) {
          beam_sweep_gain_dbi(s.array, codebook_, frames[m], dir, sweep);
          for (std::size_t n = 0; n < nb; ++n) {
            if (sweep[n] > best) {
              best = sweep[n];
              ul.serving = {static_cast<int>(m), static_cast<int>(n)};
            }
          }
        }
        ul.serving_gain_dbi = best;
        served_[base + ul.serving.subarray * nb + ul.serving.beam].push_back(static_cast<int>(u));
        links.push_back(ul);
      }
    }
  }
}

int LinkEnvironment::subarray_count(std::size_t k, std::size_t j) const {
  return static_cast<int>(scenario_->base_stations[k].sectors[j].subarrays.size());
}

std::size_t LinkEnvironment::flat(std::size_t k, std::size_t j, BeamIndex b) const {
  if (b.subarray < 0 || b.subarray >= subarray_count(k, j) || b.beam < 0 ||
      b.beam >= beams_per_subarray()) {
    throw std::out_of_range("beam index outside the sector's codebook");
  }
  return sector_base_[k][j] + static_cast<std::size_t>(b.subarray) * codebook_.size() +
         static_cast<std::size_t>(b.beam);
}

double LinkEnvironment::gain_to_fss_dbi(std::size_t k, std::size_t j, BeamIndex b) const {
  return fss_gain_[flat(k, j, b)];
}

const std::vector<int>& LinkEnvironment::served_ues(std::size_t k, std::size_t j,
                                                    BeamIndex b) const {
  return served_[flat(k, j, b)];
}

double LinkEnvironment::interference_offset_db(std::size_t k, std::size_t j, BeamIndex b) const {
  const FssLink& fl = fss_links_[k];
  return gain_to_fss_dbi(k, j, b) + fl.rx_gain_dbi - fl.path_loss_db - kSectorSplitDb;
}

double LinkEnvironment::snr_offset_db(std::size_t k, std::size_t j, std::size_t ue) const {
  const UeLink& ul = ues_[k][j][ue];
  return ul.serving_gain_dbi - ul.path_loss_db - ue_noise_dbm() - kSectorSplitDb;
}

std::vector<double> LinkEnvironment::power_grid_dbm(std::size_t k) const {
  std::vector<double> grid;
  const double nominal = scenario_->base_stations[k].nominal_power_dbm;
  for (double off : scenario_->power_range.offsets()) grid.push_back(nominal + off);
  return grid;
}

double LinkEnvironment::max_power_dbm(std::size_t k) const {
  return scenario_->base_stations[k].nominal_power_dbm + scenario_->power_range.max_offset_db;
}

LinkBudget sector_interference_budget(const LinkEnvironment& env, std::size_t k, std::size_t j,
                                      BeamIndex b, double power_dbm) {
  const FssLink& fl = env.fss_link(k);
  return make_link_budget(power_dbm, env.gain_to_fss_dbi(k, j, b), fl.rx_gain_dbi,
                          fl.path_loss_db, kSectorSplitDb);
}

double sector_interference_db(const LinkEnvironment& env, std::size_t k, std::size_t j,
                              BeamIndex b, double power_dbm) {
  return power_dbm + env.interference_offset_db(k, j, b);
}

double bs_interference_linear(const LinkEnvironment& env, const NetworkState& state,
                              std::size_t k) {
  return bs_interference_linear(env, state.bs[k], k);
}

double bs_interference_linear(const LinkEnvironment& env, const BsState& bs, std::size_t k) {
  if (!bs.active) return 0.0;
  const auto& sectors = env.scenario().base_stations[k].sectors;
  double total = 0.0;
  for (std::size_t j = 0; j < bs.sectors.size(); ++j) {
    if (!sectors[j].cochannel) continue;
    for (const BeamIndex& b : bs.sectors[j]) {
      total += from_db(sector_interference_db(env, k, j, b, bs.power_dbm));
    }
  }
  return total;
}

double aggregate_interference_mw(const LinkEnvironment& env, const NetworkState& state) {
  double total = 0.0;
  for (std::size_t k = 0; k < state.bs.size(); ++k) total += bs_interference_linear(env, state, k);
  return total;
}

double in_ratio_db(const LinkEnvironment& env, double interference_mw) {
  return to_db(interference_mw / from_db(env.fss_noise_dbm()));
}

double aggregate_in_db(const LinkEnvironment& env, const NetworkState& state) {
  return in_ratio_db(env, aggregate_interference_mw(env, state));
}

double ue_snr_db(const LinkEnvironment& env, std::size_t k, std::size_t j, BeamIndex b,
                 std::size_t ue, double power_dbm) {
  const UeLink& ul = env.ue_links(k, j).at(ue);
  double gain = ul.serving_gain_dbi;
  if (b != ul.serving) {
    const Scenario& s = env.scenario();
    const BaseStation& bs = s.base_stations[k];
    const Sector& sec = bs.sectors[j];
    const PanelFrame frame = panel(bs, sec, sec.subarrays.at(b.subarray));
    const Vec3 dir = (to_vec(sec.ues[ue].position) - to_vec(bs.antenna_point())).normalized();
    std::vector<double> sweep(env.codebook().size());
    beam_sweep_gain_dbi(s.array, env.codebook(), frame, dir, sweep);
    gain = sweep.at(b.beam);
  }
  return power_dbm + gain - ul.path_loss_db - env.ue_noise_dbm() - kSectorSplitDb;
}

double beam_capacity(const LinkEnvironment& env, std::size_t k, std::size_t j, BeamIndex b,
                     double power_dbm) {
  double total = 0.0;
  for (int u : env.served_ues(k, j, b)) {
    total += capacity_bps_hz(power_dbm + env.snr_offset_db(k, j, u));
  }
  return total;
}

double beam_min_rate(const LinkEnvironment& env, std::size_t k, std::size_t j, BeamIndex b,
                     double power_dbm) {
  double worst = std::numeric_limits<double>::infinity();
  for (int u : env.served_ues(k, j, b)) {
    worst = std::min(worst, capacity_bps_hz(power_dbm + env.snr_offset_db(k, j, u)));
  }
  return worst;
}

double bs_capacity(const LinkEnvironment& env, const NetworkState& state, std::size_t k) {
  return bs_capacity(env, state.bs[k], k);
}

double bs_capacity(const LinkEnvironment& env, const BsState& bs, std::size_t k) {
  if (!bs.active) return 0.0;
  double total = 0.0;
  for (std::size_t j = 0; j < bs.sectors.size(); ++j) {
    for (const BeamIndex& b : bs.sectors[j]) total += beam_capacity(env, k, j, b, bs.power_dbm);
  }
  return total;
}

std::size_t bs_served_ues(const LinkEnvironment& env, const NetworkState& state, std::size_t k) {
  return bs_served_ues(env, state.bs[k], k);
}

std::size_t bs_served_ues(const LinkEnvironment& env, const BsState& bs, std::size_t k) {
  if (!bs.active) return 0;
  std::size_t n = 0;
  for (std::size_t j = 0; j < bs.sectors.size(); ++j) {
    for (const BeamIndex& b : bs.sectors[j]) n += env.served_ues(k, j, b).size();
  }
  return n;
}

}  // namespace coexsim

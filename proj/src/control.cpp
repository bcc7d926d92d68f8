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

#include "coexsim/control.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "coexsim/error.hpp"
#include "coexsim/units.hpp"

namespace coexsim {

namespace {

double weight_of(const LinkEnvironment& env) { return env.scenario().weight; }

// Every (k, j, m, n) of the listed BSs.
template <typename Fn>
void for_each_beam(const LinkEnvironment& env, std::size_t k, Fn&& fn) {
  for (std::size_t j = 0; j < env.sector_count(k); ++j) {
    for (int m = 0; m < env.subarray_count(k, j); ++m) {
      for (int n = 0; n < env.beams_per_subarray(); ++n) fn(j, BeamIndex{m, n});
    }
  }
}

bool beam_meets_qos(const LinkEnvironment& env, std::size_t k, std::size_t j, BeamIndex b,
                    double power_dbm) {
  return beam_min_rate(env, k, j, b, power_dbm) >= env.scenario().rate_qos_bps_hz;
}

}  // namespace

double evaluate_objective(const LinkEnvironment& env, const NetworkState& state, double w) {
  double capacity = 0.0;
  double served = 0.0;
  for (std::size_t k = 0; k < state.bs.size(); ++k) {
    capacity += bs_capacity(env, state, k);
    served += static_cast<double>(bs_served_ues(env, state, k));
  }
  return (1.0 - w) * capacity + w * served;
}

ConstraintReport check_constraints(const LinkEnvironment& env, const NetworkState& state,
                                   double i_th_db) {
  ConstraintReport r;
  r.i_th_db = i_th_db;
  r.achieved_in_db = aggregate_in_db(env, state);
  if (r.achieved_in_db > i_th_db) {
    r.c1_interference = false;
    r.excess_db = r.achieved_in_db - i_th_db;
    r.violations.push_back("C1: aggregate I/N " + std::to_string(r.achieved_in_db) +
                           " dB exceeds I_th " + std::to_string(i_th_db) + " dB");
  }
  for (std::size_t k = 0; k < state.bs.size(); ++k) {
    const BsState& bs = state.bs[k];
    const std::string tag = "BS " + std::to_string(k);
    for (std::size_t j = 0; j < bs.sectors.size(); ++j) {
      const auto& beams = bs.sectors[j];
      if (beams.size() > 1 || (!bs.active && !beams.empty())) {
        r.c4_one_beam = false;
        r.violations.push_back("C4: " + tag + " sector " + std::to_string(j) + " has " +
                               std::to_string(beams.size()) + " beams" +
                               (bs.active ? "" : " while inactive"));
      }
    }
    if (!bs.active) continue;
    if (!(bs.power_dbm <= env.max_power_dbm(k) + 1e-9)) {
      r.c3_max_power = false;
      r.violations.push_back("C3: " + tag + " power " + std::to_string(bs.power_dbm) +
                             " dBm exceeds P_max");
    }
    for (std::size_t j = 0; j < bs.sectors.size(); ++j) {
      for (const BeamIndex& b : bs.sectors[j]) {
        const double rate = beam_min_rate(env, k, j, b, bs.power_dbm);
        if (rate < env.scenario().rate_qos_bps_hz) {
          r.c2_rate_qos = false;
          r.violations.push_back("C2: " + tag + " sector " + std::to_string(j) +
                                 " min rate " + std::to_string(rate) + " bps/Hz below R_th");
        }
      }
    }
  }
  return r;
}

std::optional<double> min_power_for_qos(const LinkEnvironment& env, std::size_t k) {
  const double p_max = env.max_power_dbm(k);
  for (double p : env.power_grid_dbm(k)) {
    if (p > p_max + 1e-9) break;
    bool ok = true;
    for (std::size_t j = 0; j < env.sector_count(k) && ok; ++j) {
      if (env.ue_links(k, j).empty()) continue;
      bool sector_ok = false;
      for (int m = 0; m < env.subarray_count(k, j) && !sector_ok; ++m) {
        for (int n = 0; n < env.beams_per_subarray() && !sector_ok; ++n) {
          const BeamIndex b{m, n};
          sector_ok = !env.served_ues(k, j, b).empty() && beam_meets_qos(env, k, j, b, p);
        }
      }
      ok = sector_ok;
    }
    if (ok) return p;
  }
  return std::nullopt;
}

double priority_ratio(double capacity_sum, std::size_t served, double interference_mw, double w) {
  const double numerator = (1.0 - w) * capacity_sum + w * static_cast<double>(served);
  return numerator / std::max(interference_mw, kLinearFloor);
}

CandidateScore priority_score(const LinkEnvironment& env, std::size_t k, std::size_t j,
                              BeamIndex b, double power_dbm, double w) {
  CandidateScore c;
  c.bs = k;
  c.sector = j;
  c.beam = b;
  c.interference_db = sector_interference_db(env, k, j, b, power_dbm);
  c.capacity = beam_capacity(env, k, j, b, power_dbm);
  c.served = env.served_ues(k, j, b).size();
  c.rho = priority_ratio(c.capacity, c.served, from_db(c.interference_db), w);
  return c;
}

ControlDecision summarize(const LinkEnvironment& env, NetworkState state, std::string policy,
                          double i_th_db) {
  ControlDecision d;
  d.policy = std::move(policy);
  d.i_th_db = i_th_db;
  d.achieved_in_db = aggregate_in_db(env, state);
  d.objective = evaluate_objective(env, state, weight_of(env));
  for (std::size_t k = 0; k < state.bs.size(); ++k) {
    d.total_capacity += bs_capacity(env, state, k);
    d.served_ues += bs_served_ues(env, state, k);
  }
  d.state = std::move(state);
  return d;
}

// ---------------------------------------------------------------------------
// Greedy control

ControlDecision cat3s_control(const LinkEnvironment& env, double i_th_db) {
  const std::size_t K = env.bs_count();
  const double w = weight_of(env);
  const std::vector<double> offsets = env.scenario().power_range.offsets();
  NetworkState state = NetworkState::all_off(env.scenario());

  // Power levels are grid indices so BSs with different nominal powers share
  // one outer loop.
  std::vector<std::size_t> operational;
  std::size_t start = 0;
  for (std::size_t k = 0; k < K; ++k) {
    const auto p_min = min_power_for_qos(env, k);
    if (!p_min) continue;
    operational.push_back(k);
    const double nominal = env.scenario().base_stations[k].nominal_power_dbm;
    for (std::size_t i = 0; i < offsets.size(); ++i) {
      if (nominal + offsets[i] >= *p_min - 1e-9) {
        start = std::max(start, i);
        break;
      }
    }
  }

  // Cached per-BS linear interference of the committed state; the aggregate
  // is always re-summed in BS order so it matches aggregate_in_db bit for bit.
  std::vector<double> bs_mw(K, 0.0);
  auto aggregate_with = [&](std::size_t k, double candidate_mw) {
    double total = 0.0;
    for (std::size_t i = 0; i < K; ++i) total += (i == k) ? candidate_mw : bs_mw[i];
    return total;
  };

  std::vector<SelectionRecord> trace;
  int outer = 0;
  int inner = 0;
  for (std::size_t level = start; level < offsets.size() && !operational.empty(); ++level) {
    ++outer;
    const bool first = (outer == 1);
    auto power_of = [&](std::size_t k) {
      return env.scenario().base_stations[k].nominal_power_dbm + offsets[level];
    };

    std::vector<CandidateScore> candidates;
    for (std::size_t k : operational) {
      const double p = power_of(k);
      for_each_beam(env, k, [&](std::size_t j, BeamIndex b) {
        if (env.served_ues(k, j, b).empty()) return;  // ρ = 0: nothing to gain
        if (!beam_meets_qos(env, k, j, b, p)) return;
        candidates.push_back(priority_score(env, k, j, b, p, w));
      });
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const CandidateScore& a, const CandidateScore& b) {
                       if (a.rho != b.rho) return a.rho > b.rho;
                       if (a.bs != b.bs) return a.bs < b.bs;
                       if (a.sector != b.sector) return a.sector < b.sector;
                       return a.beam < b.beam;
                     });

    std::vector<std::vector<bool>> sector_open(K);
    std::size_t open_bs = operational.size();
    for (std::size_t k : operational) sector_open[k].assign(env.sector_count(k), true);
    std::vector<std::size_t> open_sectors(K, 0);
    for (std::size_t k : operational) open_sectors[k] = env.sector_count(k);

    int changes = 0;
    for (const CandidateScore& c : candidates) {
      if (open_bs == 0) break;
      if (!sector_open[c.bs][c.sector]) continue;

      BsState trial = state.bs[c.bs];
      trial.active = true;
      trial.power_dbm = power_of(c.bs);
      trial.sectors[c.sector] = {c.beam};
      const double trial_mw = bs_interference_linear(env, trial, c.bs);
      if (in_ratio_db(env, aggregate_with(c.bs, trial_mw)) > i_th_db) break;

      state.bs[c.bs] = std::move(trial);
      bs_mw[c.bs] = trial_mw;
      sector_open[c.bs][c.sector] = false;
      if (--open_sectors[c.bs] == 0) --open_bs;
      ++changes;
      ++inner;
      trace.push_back({outer, c.bs, c.sector, c.beam, c.rho, power_of(c.bs)});
    }

    if (first) {
      std::erase_if(operational, [&](std::size_t k) { return !state.bs[k].active; });
    }
    if (changes == 0) break;
  }

  ControlDecision d = summarize(env, std::move(state), "cat3s", i_th_db);
  d.outer_iterations = outer;
  d.inner_selections = inner;
  d.trace = std::move(trace);
  return d;
}

// ---------------------------------------------------------------------------
// Exhaustive oracle

namespace {

struct BsOption {
  BsState state;
  double capacity = 0.0;
  double served = 0.0;
  double interference_mw = 0.0;
};

// Calls fn for every assignment of {no beam, beam 0..B-1} to each sector, in
// lexicographic order with "no beam" first.
template <typename Fn>
void for_each_sector_choice(const std::vector<std::size_t>& choices_per_sector, Fn&& fn) {
  std::vector<std::size_t> pick(choices_per_sector.size(), 0);
  while (true) {
    fn(pick);
    std::size_t pos = pick.size();
    while (pos > 0) {
      --pos;
      if (++pick[pos] < choices_per_sector[pos]) break;
      pick[pos] = 0;
      if (pos == 0) return;
    }
    if (pick.empty()) return;
  }
}

std::vector<BsOption> bs_options(const LinkEnvironment& env, std::size_t k) {
  std::vector<BsOption> options;
  BsOption off;
  off.state.sectors.resize(env.sector_count(k));
  options.push_back(off);

  std::vector<std::size_t> choices;
  for (std::size_t j = 0; j < env.sector_count(k); ++j) {
    choices.push_back(1 + static_cast<std::size_t>(env.subarray_count(k, j)) *
                              env.beams_per_subarray());
  }
  const std::size_t nb = env.beams_per_subarray();
  for (double p : env.power_grid_dbm(k)) {
    if (p > env.max_power_dbm(k) + 1e-9) continue;
    for_each_sector_choice(choices, [&](const std::vector<std::size_t>& pick) {
      BsState st;
      st.active = true;
      st.power_dbm = p;
      st.sectors.resize(pick.size());
      bool any = false;
      for (std::size_t j = 0; j < pick.size(); ++j) {
        if (pick[j] == 0) continue;
        const std::size_t flat = pick[j] - 1;
        const BeamIndex b{static_cast<int>(flat / nb), static_cast<int>(flat % nb)};
        if (!beam_meets_qos(env, k, j, b, p)) return;  // C2 fails
        st.sectors[j].push_back(b);
        any = true;
      }
      if (!any) return;  // equivalent to "off"
      BsOption o;
      o.capacity = bs_capacity(env, st, k);
      o.served = static_cast<double>(bs_served_ues(env, st, k));
      o.interference_mw = bs_interference_linear(env, st, k);
      o.state = std::move(st);
      options.push_back(std::move(o));
    });
  }
  return options;
}

}  // namespace

double brute_force_state_count(const LinkEnvironment& env) {
  double total = 1.0;
  const double levels = static_cast<double>(env.scenario().power_range.offsets().size());
  for (std::size_t k = 0; k < env.bs_count(); ++k) {
    double combos = 1.0;
    for (std::size_t j = 0; j < env.sector_count(k); ++j) {
      combos *= 1.0 + static_cast<double>(env.subarray_count(k, j)) * env.beams_per_subarray();
    }
    total *= 1.0 + levels * (combos - 1.0);
  }
  return total;
}

ControlDecision brute_force_control(const LinkEnvironment& env, double i_th_db,
                                    const BruteForceOptions& options) {
  const double count = brute_force_state_count(env);
  if (count > options.max_states) {
    char msg[128];
    std::snprintf(msg, sizeof msg, "brute force: %.3g states exceed cap of %.3g", count,
                  options.max_states);
    throw CapExceeded(msg);
  }
  const std::size_t K = env.bs_count();
  const double w = weight_of(env);
  std::vector<std::vector<BsOption>> opts(K);
  for (std::size_t k = 0; k < K; ++k) opts[k] = bs_options(env, k);

  std::vector<std::size_t> pick(K, 0), best_pick(K, 0);
  double best = -1.0;
  std::vector<double> mw(K + 1, 0.0), cap(K + 1, 0.0), served(K + 1, 0.0);

  // Depth-first over BSs in order; prefix sums accumulate exactly as the
  // whole-state evaluators do, and a prefix already over I_th stays over.
  auto dfs = [&](auto&& self, std::size_t k) -> void {
    if (k == K) {
      const double value = (1.0 - w) * cap[K] + w * served[K];
      if (value > best) {
        best = value;
        best_pick = pick;
      }
      return;
    }
    for (std::size_t i = 0; i < opts[k].size(); ++i) {
      const BsOption& o = opts[k][i];
      mw[k + 1] = mw[k] + o.interference_mw;
      if (in_ratio_db(env, mw[k + 1]) > i_th_db) continue;
      cap[k + 1] = cap[k] + o.capacity;
      served[k + 1] = served[k] + o.served;
      pick[k] = i;
      self(self, k + 1);
    }
  };
  dfs(dfs, 0);

  NetworkState state = NetworkState::all_off(env.scenario());
  for (std::size_t k = 0; k < K; ++k) state.bs[k] = opts[k][best_pick[k]].state;
  return summarize(env, std::move(state), "brute", i_th_db);
}

// ---------------------------------------------------------------------------
// Baselines

BsState conventional_bs_state(const LinkEnvironment& env, std::size_t k, double power_dbm) {
  BsState st;
  st.active = true;
  st.power_dbm = power_dbm;
  st.sectors.resize(env.sector_count(k));
  for (std::size_t j = 0; j < env.sector_count(k); ++j) {
    double best = -1.0;
    std::optional<BeamIndex> pick;
    for (int m = 0; m < env.subarray_count(k, j); ++m) {
      for (int n = 0; n < env.beams_per_subarray(); ++n) {
        const BeamIndex b{m, n};
        if (env.served_ues(k, j, b).empty()) continue;
        const double c = beam_capacity(env, k, j, b, power_dbm);
        if (c > best) {
          best = c;
          pick = b;
        }
      }
    }
    if (pick) st.sectors[j].push_back(*pick);
  }
  return st;
}

double individual_in_db(const LinkEnvironment& env, std::size_t k) {
  const double nominal = env.scenario().base_stations[k].nominal_power_dbm;
  return in_ratio_db(env, bs_interference_linear(env, conventional_bs_state(env, k, nominal), k));
}

namespace {

template <typename Keep>
ControlDecision threshold_baseline(const LinkEnvironment& env, double i_th_db, std::string name,
                                   Keep&& keep) {
  NetworkState state = NetworkState::all_off(env.scenario());
  for (std::size_t k = 0; k < env.bs_count(); ++k) {
    if (!keep(k)) continue;
    state.bs[k] = conventional_bs_state(env, k, env.scenario().base_stations[k].nominal_power_dbm);
  }
  return summarize(env, std::move(state), std::move(name), i_th_db);
}

}  // namespace

ControlDecision baseline_exclusion_zone(const LinkEnvironment& env, double i_th_db,
                                        double radius_m) {
  const GeoPoint fss = env.scenario().fss.position;
  return threshold_baseline(env, i_th_db, "baseline1", [&](std::size_t k) {
    const GeoPoint p = env.scenario().base_stations[k].position;
    return distance_2d(p, fss) > radius_m && individual_in_db(env, k) <= i_th_db;
  });
}

ControlDecision baseline_in_threshold(const LinkEnvironment& env, double i_th_db,
                                      double per_bs_threshold_db) {
  return threshold_baseline(env, i_th_db, "baseline2", [&](std::size_t k) {
    return individual_in_db(env, k) < per_bs_threshold_db;
  });
}

}  // namespace coexsim

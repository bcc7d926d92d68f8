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

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "coexsim/link_metrics.hpp"

namespace coexsim {

/// One greedy activation, recorded in selection order.
struct SelectionRecord {
  int outer_iteration = 0;
  std::size_t bs = 0;
  std::size_t sector = 0;
  BeamIndex beam;
  double rho = 0.0;
  double power_dbm = 0.0;
};

struct ControlDecision {
  std::string policy;
  NetworkState state;
  double objective = 0.0;
  double achieved_in_db = -200.0;
  double i_th_db = 0.0;
  double total_capacity = 0.0;
  std::size_t served_ues = 0;
  int outer_iterations = 0;
  int inner_selections = 0;
  std::vector<SelectionRecord> trace;
};

struct CandidateScore {
  std::size_t bs = 0;
  std::size_t sector = 0;
  BeamIndex beam;
  double rho = 0.0;
  double interference_db = 0.0;
  double capacity = 0.0;
  std::size_t served = 0;
};

/// (1-w)·Σ_k C_k + w·Σ_k F_k over active BSs, each sum taken in BS order.
double evaluate_objective(const LinkEnvironment& env, const NetworkState& state, double w);

struct ConstraintReport {
  bool c1_interference = true;
  bool c2_rate_qos = true;
  bool c3_max_power = true;
  bool c4_one_beam = true;
  double achieved_in_db = -200.0;
  double i_th_db = 0.0;
  double excess_db = 0.0;  // achieved - threshold when C1 fails
  std::vector<std::string> violations;

  bool feasible() const { return c1_interference && c2_rate_qos && c3_max_power && c4_one_beam; }
};

/// C1: aggregate I/N <= I_th. C2: every UE served by a selected beam of an
/// active BS reaches R_th. C3: P_k <= P_max. C4: at most one beam per
/// sector, none on inactive BSs.
ConstraintReport check_constraints(const LinkEnvironment& env, const NetworkState& state,
                                   double i_th_db);

/// Lowest grid power at which every sector with UEs has a beam whose served
/// UEs all reach R_th; nullopt when no grid power up to P_max works.
std::optional<double> min_power_for_qos(const LinkEnvironment& env, std::size_t k);

/// ρ = [(1-w)·capacity + w·served] / max(10^{I/10}, 1e-20).
double priority_ratio(double capacity_sum, std::size_t served, double interference_mw, double w);

CandidateScore priority_score(const LinkEnvironment& env, std::size_t k, std::size_t j,
                              BeamIndex b, double power_dbm, double w);

/// Context-aware BS control: power-domain outer loop over the grid from the
/// common minimum QoS power upward, greedy beam-domain inner loop ordered by
/// ρ. The first outer iteration fixes the active set; later iterations raise
/// powers and swap beams only while the aggregate I/N stays within I_th.
ControlDecision cat3s_control(const LinkEnvironment& env, double i_th_db);
inline ControlDecision cat3s_control(const LinkEnvironment& env) {
  return cat3s_control(env, env.weather().i_th_db);
}

struct BruteForceOptions {
  double max_states = 1e7;
};

/// Size of the brute-force state space before any filtering.
double brute_force_state_count(const LinkEnvironment& env);

/// Exact optimum over every C4-respecting state on the power grid, filtered
/// by C1-C3. Ties keep the first state in enumeration order (BS 0 first;
/// per BS: off, then power ascending, then sector choices lexicographic with
/// "no beam" first). Throws CapExceeded above `max_states`.
ControlDecision brute_force_control(const LinkEnvironment& env, double i_th_db,
                                    const BruteForceOptions& options = {});
inline ControlDecision brute_force_control(const LinkEnvironment& env) {
  return brute_force_control(env, env.weather().i_th_db);
}

/// Sector beams a conventional (interference-unaware) scheduler would load:
/// the beam with the highest served capacity at `power_dbm`, lowest index on
/// ties. Sectors without UEs get no beam.
BsState conventional_bs_state(const LinkEnvironment& env, std::size_t k, double power_dbm);

/// I/N at the incumbent from BS k alone with conventional beams at nominal power.
double individual_in_db(const LinkEnvironment& env, std::size_t k);

/// Exclusion zone: BSs within `radius_m` (ground distance) of the incumbent
/// are off; the rest stay on iff their individual I/N <= I_th.
ControlDecision baseline_exclusion_zone(const LinkEnvironment& env, double i_th_db,
                                        double radius_m = 3000.0);

/// Per-BS threshold: on iff individual I/N < `per_bs_threshold_db`.
ControlDecision baseline_in_threshold(const LinkEnvironment& env, double i_th_db,
                                      double per_bs_threshold_db = -15.0);

/// Fills the metric fields of a decision from its state.
ControlDecision summarize(const LinkEnvironment& env, NetworkState state, std::string policy,
                          double i_th_db);

}  // namespace coexsim

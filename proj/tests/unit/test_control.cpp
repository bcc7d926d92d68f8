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

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "../support/fixtures.hpp"
#include "coexsim/control.hpp"
#include "coexsim/error.hpp"
#include "coexsim/units.hpp"

using namespace coexsim;

namespace {

Scenario one_bs_one_ue(double bs_x) {
  Scenario s = fixtures::empty_scenario();
  BaseStation bs = fixtures::base_station(0, bs_x, 0, 2);
  bs.sectors[0].ues.push_back(fixtures::ue_at(bs, 0, 15.0, 180.0));
  s.base_stations.push_back(bs);
  s.codebook_size = 16;
  return s;
}

Scenario tiny(int k, int subarrays, int codebook, std::uint64_t seed, int levels) {
  Scenario s = generate_synthetic_scenario(fixtures::tiny_params(k, subarrays, codebook), seed);
  s.power_range = {-2.0, -2.0 + (levels - 1), 1.0};
  return s;
}

std::size_t grid_size(const Scenario& s) { return s.power_range.offsets().size(); }

}  // namespace

TEST_CASE("objective weight collapse") {
  const Scenario s = tiny(3, 1, 4, 9, 2);
  const LinkEnvironment env(s, make_weather(0.0));
  CHECK(evaluate_objective(env, NetworkState::all_off(s), 0.5) == 0.0);
  const ControlDecision d = cat3s_control(env, 30.0);
  double cap = 0.0;
  std::size_t served = 0;
  for (std::size_t k = 0; k < env.bs_count(); ++k) {
    cap += bs_capacity(env, d.state, k);
    served += bs_served_ues(env, d.state, k);
  }
  CHECK(evaluate_objective(env, d.state, 0.0) == cap);
  CHECK(evaluate_objective(env, d.state, 1.0) == static_cast<double>(served));
  CHECK(d.total_capacity == cap);
  CHECK(d.served_ues == served);
}

TEST_CASE("constraint checks") {
  const Scenario s = one_bs_one_ue(1500.0);
  const LinkEnvironment env(s, make_weather(0.0));
  const ConstraintReport off = check_constraints(env, NetworkState::all_off(s), -8.5);
  CHECK(off.feasible());
  CHECK(off.violations.empty());

  NetworkState st = NetworkState::all_off(s);
  st.bs[0].active = true;
  st.bs[0].power_dbm = env.max_power_dbm(0);
  st.bs[0].sectors[0] = {env.ue_links(0, 0)[0].serving};
  const double achieved = aggregate_in_db(env, st);

  const ConstraintReport over = check_constraints(env, st, achieved - 1.0);
  CHECK_FALSE(over.c1_interference);
  CHECK(over.excess_db == doctest::Approx(1.0));
  CHECK(over.achieved_in_db == doctest::Approx(achieved));
  CHECK_FALSE(over.violations.empty());

  NetworkState two = st;
  two.bs[0].sectors[0].push_back({1, 3});
  CHECK_FALSE(check_constraints(env, two, 100.0).c4_one_beam);

  NetworkState loud = st;
  loud.bs[0].power_dbm = env.max_power_dbm(0) + 1.0;
  CHECK_FALSE(check_constraints(env, loud, 100.0).c3_max_power);

  NetworkState ghost = NetworkState::all_off(s);
  ghost.bs[0].sectors[1] = {{0, 0}};
  CHECK_FALSE(check_constraints(env, ghost, 100.0).c4_one_beam);
}

TEST_CASE("minimum QoS power") {
  Scenario s = one_bs_one_ue(1500.0);
  s.rate_qos_bps_hz = 0.0;
  const LinkEnvironment env(s, make_weather(0.0));
  CHECK(min_power_for_qos(env, 0) == doctest::Approx(env.power_grid_dbm(0).front()));

  Scenario far = fixtures::empty_scenario();
  BaseStation bs = fixtures::base_station(0, 1500, 0);
  bs.sectors[0].ues.push_back(fixtures::ue_at(bs, 0, 0.0, 80000.0));
  far.base_stations.push_back(bs);
  far.rate_qos_bps_hz = 6.0;
  const LinkEnvironment fenv(far, make_weather(0.0));
  CHECK_FALSE(min_power_for_qos(fenv, 0).has_value());
}

TEST_CASE("minimum QoS power never decreases as the target rises") {
  Scenario s = tiny(3, 2, 16, 21, 9);
  double prev[3] = {-1e9, -1e9, -1e9};
  for (double r = 0.0; r <= 8.0; r += 0.5) {
    s.rate_qos_bps_hz = r;
    const LinkEnvironment env(s, make_weather(0.0));
    for (std::size_t k = 0; k < 3; ++k) {
      const auto p = min_power_for_qos(env, k);
      const double v = p ? *p : 1e9;
      CHECK(v >= prev[k]);
      prev[k] = v;
    }
  }
}

TEST_CASE("priority ratio arithmetic") {
  CHECK(priority_ratio(10.0, 2, 1e-6, 0.5) == doctest::Approx(6e6));
  CHECK(priority_ratio(0.0, 0, 1e-6, 0.5) == 0.0);
  CHECK(priority_ratio(1.0, 1, 0.0, 0.5) == doctest::Approx(1e20));
}

TEST_CASE("greedy on an empty scenario") {
  const Scenario s = fixtures::empty_scenario();
  const LinkEnvironment env(s, make_weather(0.0));
  const ControlDecision d = cat3s_control(env);
  CHECK(d.state.active_count() == 0);
  CHECK(d.objective == 0.0);
  CHECK(d.policy == "cat3s");
  CHECK(d.i_th_db == -8.5);
}

TEST_CASE("greedy with a generous threshold serves the UE at full power") {
  const Scenario s = one_bs_one_ue(1500.0);
  const LinkEnvironment env(s, make_weather(0.0));
  const ControlDecision d = cat3s_control(env, 100.0);
  REQUIRE(d.state.bs[0].active);
  CHECK(d.state.bs[0].power_dbm == doctest::Approx(env.max_power_dbm(0)));
  REQUIRE(d.state.bs[0].sectors[0].size() == 1);
  const BeamIndex chosen = d.state.bs[0].sectors[0][0];
  CHECK(env.served_ues(0, 0, chosen).size() == 1);
  // The best-gain beam is the serving beam.
  CHECK(chosen == env.ue_links(0, 0)[0].serving);
  CHECK(d.state.bs[0].sectors[1].empty());
  CHECK(d.state.bs[0].sectors[2].empty());
  CHECK(d.served_ues == 1);
}

TEST_CASE("greedy decisions satisfy every constraint") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    GeneratorParams p;
    p.num_bs = 5 + static_cast<int>(seed % 7) * 4;
    p.num_buildings = 400;
    Scenario s = generate_synthetic_scenario(p, seed);
    for (double rain : {0.0, 25.0}) {
      const LinkEnvironment env(s, make_weather(rain));
      const ControlDecision d = cat3s_control(env);
      const ConstraintReport r = check_constraints(env, d.state, env.weather().i_th_db);
      INFO("seed " << seed << " rain " << rain);
      CHECK(r.feasible());
      CHECK(d.achieved_in_db <= env.weather().i_th_db);
    }
  }
}

TEST_CASE("greedy trace is ordered by priority within each power level") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    GeneratorParams p;
    p.num_bs = 20;
    p.num_buildings = 300;
    const Scenario s = generate_synthetic_scenario(p, seed);
    const LinkEnvironment env(s, make_weather(seed % 2 ? 0.0 : 10.0));
    const ControlDecision d = cat3s_control(env);
    for (std::size_t i = 1; i < d.trace.size(); ++i) {
      if (d.trace[i].outer_iteration == d.trace[i - 1].outer_iteration) {
        REQUIRE(d.trace[i].rho <= d.trace[i - 1].rho);
      } else {
        REQUIRE(d.trace[i].outer_iteration > d.trace[i - 1].outer_iteration);
      }
    }
  }
}

TEST_CASE("greedy termination bounds") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const Scenario s = tiny(3 + static_cast<int>(seed), 2, 16, seed, 5);
    const LinkEnvironment env(s, make_weather(0.0));
    const ControlDecision d = cat3s_control(env, 0.0);
    std::size_t slots = 0;
    for (std::size_t k = 0; k < env.bs_count(); ++k) slots += env.sector_count(k);
    CHECK(d.outer_iterations <= static_cast<int>(grid_size(s)));
    CHECK(static_cast<std::size_t>(d.inner_selections) <= grid_size(s) * slots);
    CHECK(d.trace.size() == static_cast<std::size_t>(d.inner_selections));
  }
}

TEST_CASE("first power level fixes the active set") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    GeneratorParams p;
    p.num_bs = 25;
    p.num_buildings = 300;
    const Scenario s = generate_synthetic_scenario(p, seed);
    const LinkEnvironment env(s, make_weather(0.0));
    const ControlDecision d = cat3s_control(env);
    std::set<std::size_t> first;
    for (const auto& r : d.trace) {
      if (r.outer_iteration == 1) first.insert(r.bs);
      else REQUIRE(first.count(r.bs) == 1);
    }
  }
}

TEST_CASE("exhaustive search dominates the greedy on tiny instances") {
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const int k = 1 + static_cast<int>(seed % 3);
    const int n = 1 + static_cast<int>(seed % 4);
    const int levels = 1 + static_cast<int>((seed / 3) % 3);
    const Scenario s = tiny(k, 1, n, seed, levels);
    const LinkEnvironment env(s, make_weather(seed % 2 ? 0.0 : 25.0));
    if (brute_force_state_count(env) > 2e6) continue;
    for (double i_th : {env.weather().i_th_db, -30.0}) {
      const ControlDecision g = cat3s_control(env, i_th);
      const ControlDecision b = brute_force_control(env, i_th);
      CHECK(check_constraints(env, b.state, i_th).feasible());
      CHECK(b.objective >= g.objective - 1e-9);
      CHECK(b.policy == "brute");
      ++checked;
    }
  }
  CHECK(checked >= 30);
}

TEST_CASE("exhaustive search on degenerate inputs") {
  const Scenario empty = fixtures::empty_scenario();
  const LinkEnvironment eenv(empty, make_weather(0.0));
  const ControlDecision e = brute_force_control(eenv);
  CHECK(e.state.active_count() == 0);
  CHECK(e.objective == 0.0);

  // Threshold below every single-beam contribution: nothing may transmit.
  // Single-element panels have no pattern nulls toward the incumbent.
  Scenario s = one_bs_one_ue(1500.0);
  s.array = make_array_config(1, 1, s.carrier_ghz);
  const LinkEnvironment env(s, make_weather(0.0));
  double quietest = 1e9;
  for (std::size_t j = 0; j < 3; ++j) {
    for (int m = 0; m < env.subarray_count(0, j); ++m) {
      for (int n = 0; n < env.beams_per_subarray(); ++n) {
        const double mw = from_db(sector_interference_db(env, 0, j, {m, n}, env.power_grid_dbm(0).front()));
        quietest = std::min(quietest, in_ratio_db(env, mw));
      }
    }
  }
  REQUIRE(quietest > -190.0);
  const ControlDecision d = brute_force_control(env, quietest - 1.0);
  CHECK(d.state.active_count() == 0);
  CHECK(d.objective == 0.0);
}

TEST_CASE("exhaustive search refuses oversized instances") {
  GeneratorParams p;
  p.num_buildings = 100;
  const Scenario s = generate_synthetic_scenario(p, 1);
  const LinkEnvironment env(s, make_weather(0.0));
  CHECK(brute_force_state_count(env) > 1e7);
  CHECK_THROWS_AS(brute_force_control(env), CapExceeded);
  CHECK_THROWS_WITH_AS(brute_force_control(env), doctest::Contains("cap"), CapExceeded);
}

TEST_CASE("state count formula") {
  const Scenario s = tiny(2, 1, 3, 5, 2);
  const LinkEnvironment env(s, make_weather(0.0));
  // Per BS: off, or one of 2 powers with each of 3 sectors on none or one of 3 beams.
  const double per_bs = 1.0 + 2.0 * (std::pow(4.0, 3) - 1.0);
  CHECK(brute_force_state_count(env) == doctest::Approx(per_bs * per_bs));
}

TEST_CASE("exclusion-zone baseline") {
  Scenario s = fixtures::empty_scenario();
  for (auto [id, x] : {std::pair{0, 2000.0}, {1, 4000.0}}) {
    BaseStation bs = fixtures::base_station(id, x, 0);
    for (int j = 0; j < 3; ++j) bs.sectors[j].ues.push_back(fixtures::ue_at(bs, 10 * id + j, 120.0 * j, 200));
    s.base_stations.push_back(bs);
  }
  const LinkEnvironment env(s, make_weather(0.0));
  REQUIRE(individual_in_db(env, 1) < -8.5);
  const ControlDecision d = baseline_exclusion_zone(env, -8.5);
  CHECK_FALSE(d.state.bs[0].active);
  CHECK(d.state.bs[1].active);
  CHECK(d.state.bs[1].power_dbm == s.base_stations[1].nominal_power_dbm);
  CHECK(d.policy == "baseline1");

  CHECK(baseline_exclusion_zone(env, -8.5, 1e6).state.active_count() == 0);
  // An individual I/N above the threshold also switches the BS off.
  CHECK_FALSE(baseline_exclusion_zone(env, individual_in_db(env, 1) - 0.1).state.bs[1].active);
}

TEST_CASE("per-BS threshold baseline is a strict comparison") {
  GeneratorParams p;
  p.num_buildings = 300;
  const Scenario s = generate_synthetic_scenario(p, 3);
  const LinkEnvironment env(s, make_weather(0.0));
  const ControlDecision d = baseline_in_threshold(env, -8.5);
  CHECK(d.policy == "baseline2");
  for (std::size_t k = 0; k < env.bs_count(); ++k) {
    CHECK(d.state.bs[k].active == (individual_in_db(env, k) < -15.0));
  }
  CHECK_FALSE(baseline_in_threshold(env, -8.5, individual_in_db(env, 0)).state.bs[0].active);
  CHECK(baseline_in_threshold(env, -8.5, 1e9).state.active_count() == env.bs_count());
}

TEST_CASE("conventional beams serve the most capacity in each sector") {
  const Scenario s = tiny(3, 2, 16, 8, 3);
  const LinkEnvironment env(s, make_weather(0.0));
  for (std::size_t k = 0; k < env.bs_count(); ++k) {
    const double p = s.base_stations[k].nominal_power_dbm;
    const BsState st = conventional_bs_state(env, k, p);
    for (std::size_t j = 0; j < env.sector_count(k); ++j) {
      if (env.ue_links(k, j).empty()) {
        CHECK(st.sectors[j].empty());
        continue;
      }
      REQUIRE(st.sectors[j].size() == 1);
      const double chosen = beam_capacity(env, k, j, st.sectors[j][0], p);
      for (int m = 0; m < env.subarray_count(k, j); ++m) {
        for (int n = 0; n < env.beams_per_subarray(); ++n) {
          CHECK(beam_capacity(env, k, j, {m, n}, p) <= chosen);
        }
      }
    }
  }
}

TEST_CASE("baselines do not depend on base-station order") {
  GeneratorParams p;
  p.num_buildings = 300;
  const Scenario s = generate_synthetic_scenario(p, 6);
  Scenario r = s;
  std::reverse(r.base_stations.begin(), r.base_stations.end());
  const LinkEnvironment a(s, make_weather(0.0));
  const LinkEnvironment b(r, make_weather(0.0));
  for (auto run : {+[](const LinkEnvironment& e) { return baseline_exclusion_zone(e, -8.5); },
                   +[](const LinkEnvironment& e) { return baseline_in_threshold(e, -8.5); }}) {
    const ControlDecision da = run(a);
    const ControlDecision db = run(b);
    std::map<int, bool> on_a, on_b;
    for (std::size_t k = 0; k < s.base_stations.size(); ++k) {
      on_a[s.base_stations[k].id] = da.state.bs[k].active;
      on_b[r.base_stations[k].id] = db.state.bs[k].active;
    }
    CHECK(on_a == on_b);
    CHECK(da.total_capacity == doctest::Approx(db.total_capacity));
    CHECK(da.achieved_in_db == doctest::Approx(db.achieved_in_db));
  }
}

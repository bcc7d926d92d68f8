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

// coexsim command-line front end: generate, run, compare.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "coexsim/error.hpp"
#include "coexsim/experiment.hpp"
#include "coexsim/kernels.hpp"
#include "coexsim/scenario.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitAllFailed = 1;
constexpr int kExitConfig = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int cmd_generate(const std::string& config, std::optional<std::uint64_t> seed,
                 const std::string& out) {
  coexsim::GeneratorParams params;
  std::uint64_t s = 1;
  if (!config.empty()) {
    // Either a bare generator object or an experiment config.
    const auto doc = nlohmann::json::parse(read_file(config));
    if (doc.contains("scenario") && doc["scenario"].contains("generator")) {
      params = coexsim::generator_params_from_json(doc["scenario"]["generator"]);
    } else {
      params = coexsim::generator_params_from_json(doc.value("generator", doc));
    }
    if (doc.contains("seed") && doc["seed"].is_number_integer()) s = doc["seed"].get<std::uint64_t>();
  }
  if (seed) s = *seed;
  const coexsim::Scenario scenario = coexsim::generate_synthetic_scenario(params, s);
  if (out.empty() || out == "-") {
    std::cout << coexsim::scenario_to_json(scenario);
  } else {
    coexsim::save_scenario_file(scenario, out);
    std::cerr << "wrote " << out << ": " << scenario.base_stations.size() << " base stations, "
              << scenario.ue_count() << " UEs, " << scenario.buildings.size() << " buildings\n";
  }
  return kExitOk;
}

int cmd_run(const std::string& config, std::optional<std::uint64_t> seed, const std::string& out,
            std::optional<int> workers) {
  coexsim::ExperimentConfig cfg = config.empty()
                                      ? coexsim::experiment_config_from_json("{}")
                                      : coexsim::load_experiment_config(config);
  if (seed) cfg.seed = *seed;
  if (!out.empty()) cfg.output_dir = out;
  if (workers) {
    if (*workers < 1) throw coexsim::ValidationError("workers", "must be >= 1");
    cfg.workers = *workers;
  }
  const coexsim::Scenario scenario = coexsim::resolve_scenario(cfg);
  if (const auto report = coexsim::validate_scenario(scenario); !report.ok()) {
    throw coexsim::ValidationError("scenario", report.to_string());
  }

  const coexsim::ExperimentResult result = coexsim::run_experiment(cfg, scenario);
  coexsim::write_reports(result, scenario, cfg.output_dir);

  const std::size_t total = result.total_points();
  const std::size_t failed = result.failed_points();
  std::size_t errored_rows = 0;
  for (const auto& r : result.rows) errored_rows += !r.ok();
  std::cerr << "kernel " << coexsim::kernels::isa_name(coexsim::kernels::active_isa()) << ", "
            << cfg.workers << " worker(s): " << result.rows.size() << " rows over " << total << " sweep points ("
            << errored_rows << " errored rows, " << failed << " failed points) -> "
            << cfg.output_dir << "\n";
  return total > 0 && failed == total ? kExitAllFailed : kExitOk;
}

int cmd_compare(const std::string& path) {
  const auto rows = coexsim::parse_results_csv(read_file(path));
  std::cout << coexsim::format_comparison(coexsim::compare_policies(rows));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Terrestrial/satellite spectrum coexistence simulator"};
  app.require_subcommand(1);

  std::string config, out, results;
  std::optional<std::uint64_t> seed;
  std::optional<int> workers;

  auto* gen = app.add_subcommand("generate", "write a synthetic scenario file");
  gen->add_option("--config", config, "generator parameters (JSON)")->envname("COEXSIM_CONFIG");
  gen->add_option("--seed", seed, "generator seed")->envname("COEXSIM_SEED");
  gen->add_option("--out", out, "output scenario file ('-' for stdout)")->envname("COEXSIM_OUT");

  auto* run = app.add_subcommand("run", "run an experiment sweep");
  run->add_option("--config", config, "experiment config (JSON)")->envname("COEXSIM_CONFIG");
  run->add_option("--seed", seed, "scenario seed override")->envname("COEXSIM_SEED");
  run->add_option("--out", out, "output directory")->envname("COEXSIM_OUT");
  run->add_option("--workers", workers, "parallel sweep workers")->envname("COEXSIM_WORKERS");

  auto* cmp = app.add_subcommand("compare", "summarize a results.csv against cat3s");
  cmp->add_option("results", results, "results.csv path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*gen) return cmd_generate(config, seed, out);
    if (*run) return cmd_run(config, seed, out, workers);
    if (*cmp) return cmd_compare(results);
  } catch (const coexsim::ParseError& e) {
    std::cerr << "error: " << e.what();
    if (e.line() > 0) std::cerr << " (line " << e.line() << ")";
    std::cerr << "\n";
    return kExitConfig;
  } catch (const coexsim::ValidationError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitOk;
}

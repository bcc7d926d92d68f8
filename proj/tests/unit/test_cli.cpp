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

#include <cstdlib>
#include <string>
#include <sys/wait.h>

#include "../support/fixtures.hpp"
#include "coexsim/experiment.hpp"

using namespace coexsim;
namespace fs = std::filesystem;

namespace {

const fs::path kSource = COEXSIM_SOURCE_DIR;

int run(const std::string& args) {
  const std::string cmd = std::string("\"") + COEXSIM_CLI_PATH + "\" " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string quoted(const fs::path& p) { return "\"" + p.string() + "\""; }

}  // namespace

TEST_CASE("run output matches the checked-in golden file") {
  const fs::path out = fixtures::scratch_dir("cli_golden");
  REQUIRE(run("run --config " + quoted(kSource / "tests/golden/small.json") + " --out " + quoted(out)) == 0);
  const std::string got = fixtures::slurp(out / "results.csv");
  const std::string want = fixtures::slurp(kSource / "tests/golden/small_results.csv");
  CHECK(got == want);
}

TEST_CASE("run is byte-identical across reruns and worker counts") {
  const fs::path a = fixtures::scratch_dir("cli_a");
  const fs::path b = fixtures::scratch_dir("cli_b");
  const fs::path c = fixtures::scratch_dir("cli_c");
  const std::string cfg = quoted(kSource / "tests/golden/small.json");
  REQUIRE(run("run --config " + cfg + " --seed 99 --out " + quoted(a)) == 0);
  REQUIRE(run("run --config " + cfg + " --seed 99 --out " + quoted(b)) == 0);
  REQUIRE(run("run --config " + cfg + " --seed 99 --workers 4 --out " + quoted(c)) == 0);
  const std::string first = fixtures::slurp(a / "results.csv");
  CHECK(!first.empty());
  CHECK(first == fixtures::slurp(b / "results.csv"));
  CHECK(first == fixtures::slurp(c / "results.csv"));
  CHECK(fixtures::slurp(a / "results.json") == fixtures::slurp(c / "results.json"));
  // A different seed moves the deployment.
  const fs::path d = fixtures::scratch_dir("cli_d");
  REQUIRE(run("run --config " + cfg + " --seed 100 --out " + quoted(d)) == 0);
  CHECK(first != fixtures::slurp(d / "results.csv"));
}

TEST_CASE("environment variables stand in for flags") {
  const fs::path out = fixtures::scratch_dir("cli_env");
  const std::string cmd = "COEXSIM_CONFIG=" + quoted(kSource / "tests/golden/small.json") +
                          " COEXSIM_OUT=" + quoted(out) + " COEXSIM_WORKERS=2 ";
  const int status = std::system((cmd + "\"" + COEXSIM_CLI_PATH + "\" run >/dev/null 2>&1").c_str());
  REQUIRE(WIFEXITED(status));
  CHECK(WEXITSTATUS(status) == 0);
  CHECK(fixtures::slurp(out / "results.csv") ==
        fixtures::slurp(kSource / "tests/golden/small_results.csv"));
}

TEST_CASE("generate writes a loadable scenario") {
  const fs::path out = fixtures::scratch_dir("cli_gen");
  const fs::path gen = out / "gen.json";
  fixtures::spit(gen, R"({"num_bs": 4, "num_buildings": 10})");
  REQUIRE(run("generate --config " + quoted(gen) + " --seed 3 --out " + quoted(out / "s.json")) == 0);
  const Scenario s = load_scenario_file((out / "s.json").string());
  CHECK(s.base_stations.size() == 4);
  GeneratorParams p;
  p.num_bs = 4;
  p.num_buildings = 10;
  CHECK(s == generate_synthetic_scenario(p, 3));
}

TEST_CASE("compare summarizes a results file") {
  const fs::path out = fixtures::scratch_dir("cli_cmp");
  REQUIRE(run("run --config " + quoted(kSource / "tests/golden/small.json") + " --out " + quoted(out)) == 0);
  const std::string cmd = std::string("\"") + COEXSIM_CLI_PATH + "\" compare " +
                          quoted(out / "results.csv") + " > " + quoted(out / "cmp.txt");
  REQUIRE(std::system(cmd.c_str()) == 0);
  const std::string table = fixtures::slurp(out / "cmp.txt");
  CHECK(table.rfind("point,policy,delta_in_db", 0) == 0);
  CHECK(table.find("baseline1") != std::string::npos);
  CHECK(table.find("violations: none") != std::string::npos);
}

TEST_CASE("exit codes") {
  const fs::path out = fixtures::scratch_dir("cli_exit");
  CHECK(run("") == 2);
  CHECK(run("bogus") == 2);
  CHECK(run("run --config " + quoted(out / "missing.json")) == 2);
  fixtures::spit(out / "bad.json", "{\"policies\": [\"nope\"]}");
  CHECK(run("run --config " + quoted(out / "bad.json")) == 2);
  fixtures::spit(out / "broken.json", "{\"seed\": ");
  CHECK(run("run --config " + quoted(out / "broken.json")) == 2);
  fixtures::spit(out / "bad.csv", "point,policy\n1,cat3s\n");
  CHECK(run("compare " + quoted(out / "bad.csv")) == 2);

  // Every point fails when the only policy cannot run.
  fixtures::spit(out / "allfail.json",
                 R"({"policies": ["brute"], "scenario": {"generator": {"num_buildings": 50}},
                     "sweep": {"pointing_angles_deg": [30]}, "output_dir": "res"})");
  CHECK(run("run --config " + quoted(out / "allfail.json")) == 1);
  CHECK(fs::exists(out / "res" / "results.csv"));
}

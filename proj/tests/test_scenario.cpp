// Copyright (c) 2026 casimir-gain developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0.txt
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "casimir/constants.hpp"
#include "casimir/scenario.hpp"

using namespace casimir;

namespace {

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

std::vector<double> csv_row(const std::string& line) {
  std::vector<double> out;
  std::istringstream in(line);
  std::string cell;
  while (std::getline(in, cell, ',')) out.push_back(std::stod(cell));
  return out;
}

const char* kMaterialVacuum = R"({
  "task": "material",
  "materials": {"m": "vacuum"},
  "material": "m",
  "sweep": {"variable": "omega", "min": 1e15, "max": 1e16, "points": 5}
})";

const char* kCpScenario = R"({
  "task": "cp",
  "materials": {},
  "atoms": {"a": {"transitions": [{"omega_kn": -1e16, "d2": 7.188e-59}]}},
  "stacks": {"s": {"below": "mirror", "above": "vacuum"}},
  "atom": "a",
  "stack": "s",
  "sweep": {"variable": "z", "min": 1e-8, "max": 1e-7, "points": 4},
  "tolerances": {"rel_tol": 1e-7}
})";

const char* kCheckScenario = R"({
  "task": "check",
  "atoms": {"a": {"transitions": [{"omega_kn": -1e16, "d2": 7.188e-59}]}},
  "stacks": {"s": {"below": "mirror"}},
  "stack": "s",
  "slab": {"atom": "a", "eta": 1e25, "z_lo": 15e-9, "z_hi": 24e-9,
           "n_layers": 16}
})";

}  // namespace

TEST_CASE("material task on vacuum emits eps == 1 rows with unit tags") {
  const RunResult r = run(parse_scenario(kMaterialVacuum));
  const auto rows = lines_of(r.csv);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0] == "omega[rad/s],re_eps[1],im_eps[1]");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto v = csv_row(rows[i]);
    REQUIRE(v.size() == 3);
    CHECK(v[1] == 1.0);
    CHECK(v[2] == 0.0);
  }
}

TEST_CASE("every task header carries a unit tag on every column") {
  const RunResult r = run(parse_scenario(kCpScenario));
  const auto rows = lines_of(r.csv);
  std::istringstream in(rows[0]);
  std::string col;
  int ncols = 0;
  while (std::getline(in, col, ',')) {
    ++ncols;
    CHECK(col.find('[') != std::string::npos);
    CHECK(col.back() == ']');
  }
  CHECK(ncols == 7);
}

TEST_CASE("malformed JSON raises a schema error naming the path") {
  CHECK_THROWS_AS(parse_scenario("{not json"), SchemaError);
  try {
    parse_scenario(R"({"task": "cp"})");
    FAIL("expected SchemaError");
  } catch (const SchemaError& e) {
    CHECK(std::string(e.what()).find("/stack") != std::string::npos);
  }
  try {
    parse_scenario(R"({
      "task": "material",
      "materials": {"m": {"oscillators": [{"omega0": -1.0}]}},
      "material": "m",
      "sweep": {"variable": "omega", "min": 1, "max": 2, "points": 2}
    })");
    FAIL("expected SchemaError");
  } catch (const SchemaError& e) {
    CHECK(std::string(e.what()).find("/materials/m/oscillators/0") !=
          std::string::npos);
  }
}

TEST_CASE("sweep bounds must be positive on z and gap axes") {
  CHECK_THROWS_AS(parse_scenario(R"({
    "task": "cp",
    "atoms": {"a": {"transitions": [{"omega_kn": 1e16, "d2": 1e-59}]}},
    "stacks": {"s": {"below": "mirror"}},
    "atom": "a", "stack": "s",
    "sweep": {"variable": "z", "min": -1e-9, "max": 1e-8, "points": 3}
  })"),
                  SchemaError);
}

TEST_CASE("eV unit tags convert on input") {
  const Scenario sc = parse_scenario(R"({
    "task": "material",
    "materials": {"m": {"unit": "eV",
                        "oscillators": [{"omega0": 1.0, "omegap": 0.5,
                                         "gamma": 0.01}]}},
    "material": "m",
    "sweep": {"variable": "xi", "min": 1e14, "max": 1e16, "points": 3}
  })");
  const auto& mat = sc.materials.at("m");
  CHECK(mat->eps.oscillators()[0].omega0 ==
        doctest::Approx(constants::eV_to_rad_s).epsilon(1e-12));
}

TEST_CASE("run output is byte-identical across repeated runs") {
  const Scenario sc = parse_scenario(kCpScenario);
  const RunResult a = run(sc);
  const RunResult b = run(sc);
  CHECK(a.csv == b.csv);
  // u_total = u_nr + u_r per row, and the excited atom repels (u_nr > 0)
  const auto rows = lines_of(a.csv);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto v = csv_row(rows[i]);
    REQUIRE(v.size() == 7);
    // printed to 13 significant digits, so the sum survives only to ~1e-12
    CHECK(v[3] == doctest::Approx(v[1] + v[2]).epsilon(1e-9));
    CHECK(v[1] > 0.0);
  }
}

TEST_CASE("check task reports deviations below the gate") {
  const RunResult r = run(parse_scenario(kCheckScenario));
  const auto rows = lines_of(r.csv);
  REQUIRE(rows.size() == 2);
  const auto v = csv_row(rows[1]);
  REQUIRE(v.size() == 7);
  CHECK(v[0] < 1e-3);  // dev_nr
  CHECK(v[1] < 1e-3);  // dev_r
  CHECK(v[2] < 1e-3);  // dev_total
}

TEST_CASE("manifest records hash, tolerances and per-row errors") {
  const Scenario sc = parse_scenario(kCpScenario);
  const RunResult r = run(sc);
  CHECK(r.manifest_json.find("fnv1a64:") != std::string::npos);
  CHECK(r.manifest_json.find("rel_tol") != std::string::npos);
  CHECK(r.manifest_json.find("err_nr") != std::string::npos);
  CHECK(r.manifest_json.find(constants::version) != std::string::npos);
}

#ifdef CASIMIR_TOOL_PATH
namespace {

int run_tool(const std::string& args, const std::string& stdout_file) {
  const std::string cmd = std::string(CASIMIR_TOOL_PATH) + " " + args + " > " +
                          stdout_file + " 2>/dev/null";
  const int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("tool: success, schema failure and empty output on bad input") {
  const std::string dir = "./scenario_tool_test";
  std::system(("mkdir -p " + dir).c_str());
  {
    std::ofstream f(dir + "/ok.json");
    f << kMaterialVacuum;
  }
  {
    std::ofstream f(dir + "/bad.json");
    f << "{broken";
  }
  CHECK(run_tool("material --scenario " + dir + "/ok.json",
                 dir + "/ok.csv") == 0);
  CHECK(lines_of(slurp(dir + "/ok.csv")).size() == 6);

  CHECK(run_tool("material --scenario " + dir + "/bad.json",
                 dir + "/bad.csv") == 1);
  CHECK(slurp(dir + "/bad.csv").empty());  // no partial CSV

  // manifest emission
  CHECK(run_tool("material --scenario " + dir + "/ok.json --out " + dir +
                     "/manifest.json",
                 dir + "/ok2.csv") == 0);
  CHECK(slurp(dir + "/manifest.json").find("input_hash") !=
        std::string::npos);
}
#endif

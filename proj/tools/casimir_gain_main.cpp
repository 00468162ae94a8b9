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

// casimir-gain: batch front end. Each subcommand either loads a full
// scenario file (--scenario) or assembles one from per-object JSON files and
// flags, then prints CSV to stdout and optionally a run manifest to --out.
//
// Exit codes: 0 success, 1 schema/usage error, 2 numerical divergence.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "casimir/scenario.hpp"

namespace {

using nlohmann::json;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw casimir::SchemaError("/", "cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json_file(const std::string& path) {
  try {
    return json::parse(slurp(path));
  } catch (const json::parse_error& e) {
    throw casimir::SchemaError("/", "invalid JSON in '" + path +
                                        "': " + e.what());
  }
}

struct CommonOpts {
  std::string scenario_path;
  std::string out_manifest;
  std::optional<double> rel_tol;
  std::optional<double> abs_tol;
  std::optional<int> max_subdiv;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--scenario", o.scenario_path,
                  "Scenario JSON file (overrides other inputs)");
  cmd->add_option("--out", o.out_manifest, "Write a run manifest JSON here");
  cmd->add_option("--rel-tol", o.rel_tol, "Relative quadrature tolerance");
  cmd->add_option("--abs-tol", o.abs_tol, "Absolute quadrature tolerance");
  cmd->add_option("--max-subdiv", o.max_subdiv,
                  "Quadrature subdivision budget");
}

// Splits a stack file {materials?, below, layers?, above?} into scenario
// pieces under the given stack id.
void embed_stack(json& scenario, const std::string& stack_file,
                 const std::string& id) {
  json s = parse_json_file(stack_file);
  if (s.contains("materials")) {
    for (auto& [mid, m] : s["materials"].items())
      scenario["materials"][mid] = m;
    s.erase("materials");
  }
  scenario["stacks"][id] = s;
}

int run_and_emit(const std::string& scenario_text, const CommonOpts& o) {
  casimir::Scenario sc = casimir::parse_scenario(scenario_text);
  if (o.rel_tol) sc.tolerances.rel_tol = *o.rel_tol;
  if (o.abs_tol) sc.tolerances.abs_tol = *o.abs_tol;
  if (o.max_subdiv) sc.tolerances.max_subdivisions = *o.max_subdiv;
  const casimir::RunResult result = casimir::run(sc);
  std::cout << result.csv;
  if (!o.out_manifest.empty()) {
    std::ofstream out(o.out_manifest, std::ios::binary);
    if (!out)
      throw casimir::SchemaError("/", "cannot write manifest '" +
                                          o.out_manifest + "'");
    out << result.manifest_json;
  }
  return 0;
}

json sweep_json(const std::string& variable, double lo, double hi, int points,
                bool linear) {
  return json{{"variable", variable},
              {"min", lo},
              {"max", hi},
              {"points", points},
              {"scale", linear ? "linear" : "log"}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "casimir-gain: Casimir and Casimir-Polder forces for planar layered "
      "media, including amplifying (gain) materials"};
  app.require_subcommand(1);

  // material
  auto* cmd_material = app.add_subcommand(
      "material", "Tabulate a permittivity model over frequency");
  CommonOpts o_material;
  add_common(cmd_material, o_material);
  std::string material_file, material_axis = "real";
  double m_lo = 0.0, m_hi = 0.0;
  int m_points = 50;
  bool m_linear = false;
  cmd_material->add_option("--material", material_file, "Material JSON file");
  cmd_material->add_option("--axis", material_axis, "real | imag");
  cmd_material->add_option("--min", m_lo, "Sweep start [rad/s]");
  cmd_material->add_option("--max", m_hi, "Sweep end [rad/s]");
  cmd_material->add_option("--points", m_points, "Sweep points");
  cmd_material->add_flag("--linear", m_linear, "Linear instead of log sweep");

  // green
  auto* cmd_green = app.add_subcommand(
      "green", "Scattering Green-tensor trace above a stack");
  CommonOpts o_green;
  add_common(cmd_green, o_green);
  std::string green_stack;
  std::optional<double> g_xi, g_omega;
  double g_zmin = 0.0, g_zmax = 0.0;
  int g_points = 50;
  cmd_green->add_option("--stack", green_stack, "Stack JSON file");
  cmd_green->add_option("--xi", g_xi, "Imaginary frequency [rad/s]");
  cmd_green->add_option("--omega", g_omega, "Real frequency [rad/s]");
  cmd_green->add_option("--z-min", g_zmin, "Lowest height [m]");
  cmd_green->add_option("--z-max", g_zmax, "Highest height [m]");
  cmd_green->add_option("--points", g_points, "Sweep points");

  // cp
  auto* cmd_cp = app.add_subcommand(
      "cp", "Atom-surface potential and force over a height sweep");
  CommonOpts o_cp;
  add_common(cmd_cp, o_cp);
  std::string cp_atom, cp_stack;
  double cp_zmin = 0.0, cp_zmax = 0.0, cp_temp = 0.0;
  int cp_points = 50;
  cmd_cp->add_option("--atom", cp_atom, "Atom JSON file");
  cmd_cp->add_option("--stack", cp_stack, "Stack JSON file");
  cmd_cp->add_option("--z-min", cp_zmin, "Lowest height [m]");
  cmd_cp->add_option("--z-max", cp_zmax, "Highest height [m]");
  cmd_cp->add_option("--points", cp_points, "Sweep points");
  cmd_cp->add_option("--temp", cp_temp, "Temperature [K]");

  // force slab
  auto* cmd_slab = app.add_subcommand(
      "force-slab", "Force per area on a dilute atomic slab");
  CommonOpts o_slab;
  add_common(cmd_slab, o_slab);
  std::string fs_atom, fs_stack;
  double fs_eta = 0.0, fs_zlo = 0.0, fs_zhi = 0.0;
  int fs_layers = 64;
  std::optional<double> fs_zmin, fs_zmax;
  int fs_points = 20;
  cmd_slab->add_option("--atom", fs_atom, "Atom JSON file");
  cmd_slab->add_option("--stack", fs_stack, "Stack JSON file");
  cmd_slab->add_option("--eta", fs_eta, "Number density [1/m^3]");
  cmd_slab->add_option("--z-lo", fs_zlo, "Lower slab face [m]");
  cmd_slab->add_option("--z-hi", fs_zhi, "Upper slab face [m]");
  cmd_slab->add_option("--n-layers", fs_layers, "Volume panels");
  cmd_slab->add_option("--z-min", fs_zmin, "Sweep of slab centres: start");
  cmd_slab->add_option("--z-max", fs_zmax, "Sweep of slab centres: end");
  cmd_slab->add_option("--points", fs_points, "Sweep points");

  // force plates
  auto* cmd_plates = app.add_subcommand(
      "force-plates", "Pressure between two half-space plates");
  CommonOpts o_plates;
  add_common(cmd_plates, o_plates);
  std::string fp_a, fp_b;
  double fp_gmin = 0.0, fp_gmax = 0.0, fp_temp = 0.0;
  int fp_points = 20;
  cmd_plates->add_option("--mat-a", fp_a, "Plate A material JSON file");
  cmd_plates->add_option("--mat-b", fp_b, "Plate B material JSON file");
  cmd_plates->add_option("--gap-min", fp_gmin, "Smallest gap [m]");
  cmd_plates->add_option("--gap-max", fp_gmax, "Largest gap [m]");
  cmd_plates->add_option("--points", fp_points, "Sweep points");
  cmd_plates->add_option("--temp", fp_temp, "Temperature [K]");

  // check
  auto* cmd_check = app.add_subcommand(
      "check", "Additivity check: macroscopic vs atom-sum slab force");
  CommonOpts o_check;
  add_common(cmd_check, o_check);
  std::string ck_atom, ck_stack;
  double ck_eta = 0.0, ck_zlo = 0.0, ck_zhi = 0.0;
  int ck_layers = 64;
  cmd_check->add_option("--atom", ck_atom, "Atom JSON file");
  cmd_check->add_option("--stack", ck_stack, "Stack JSON file");
  cmd_check->add_option("--eta", ck_eta, "Number density [1/m^3]");
  cmd_check->add_option("--z-lo", ck_zlo, "Lower slab face [m]");
  cmd_check->add_option("--z-hi", ck_zhi, "Upper slab face [m]");
  cmd_check->add_option("--n-layers", ck_layers, "Volume panels");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_material->parsed()) {
      if (!o_material.scenario_path.empty())
        return run_and_emit(slurp(o_material.scenario_path), o_material);
      json sc{{"task", "material"}, {"material", "m"}};
      sc["materials"]["m"] = parse_json_file(material_file);
      sc["sweep"] = sweep_json(material_axis == "imag" ? "xi" : "omega",
                               m_lo, m_hi, m_points, m_linear);
      return run_and_emit(sc.dump(), o_material);
    }
    if (cmd_green->parsed()) {
      if (!o_green.scenario_path.empty())
        return run_and_emit(slurp(o_green.scenario_path), o_green);
      json sc{{"task", "green"}, {"stack", "s"}};
      embed_stack(sc, green_stack, "s");
      sc["sweep"] = sweep_json("z", g_zmin, g_zmax, g_points, false);
      if (g_xi)
        sc["xi"] = *g_xi;
      else if (g_omega)
        sc["omega"] = *g_omega;
      else
        throw casimir::SchemaError("/", "green needs --xi or --omega");
      return run_and_emit(sc.dump(), o_green);
    }
    if (cmd_cp->parsed()) {
      if (!o_cp.scenario_path.empty())
        return run_and_emit(slurp(o_cp.scenario_path), o_cp);
      json sc{{"task", "cp"}, {"atom", "a"}, {"stack", "s"}};
      sc["atoms"]["a"] = parse_json_file(cp_atom);
      embed_stack(sc, cp_stack, "s");
      sc["sweep"] = sweep_json("z", cp_zmin, cp_zmax, cp_points, false);
      if (cp_temp > 0.0) sc["temperature"] = cp_temp;
      return run_and_emit(sc.dump(), o_cp);
    }
    if (cmd_slab->parsed()) {
      if (!o_slab.scenario_path.empty())
        return run_and_emit(slurp(o_slab.scenario_path), o_slab);
      json sc{{"task", "force-slab"}, {"stack", "s"}};
      sc["atoms"]["a"] = parse_json_file(fs_atom);
      embed_stack(sc, fs_stack, "s");
      sc["slab"] = json{{"atom", "a"},
                        {"eta", fs_eta},
                        {"z_lo", fs_zlo},
                        {"z_hi", fs_zhi},
                        {"n_layers", fs_layers}};
      if (fs_zmin && fs_zmax)
        sc["sweep"] = sweep_json("z", *fs_zmin, *fs_zmax, fs_points, false);
      return run_and_emit(sc.dump(), o_slab);
    }
    if (cmd_plates->parsed()) {
      if (!o_plates.scenario_path.empty())
        return run_and_emit(slurp(o_plates.scenario_path), o_plates);
      json sc{{"task", "force-plates"}, {"mat_a", "a"}, {"mat_b", "b"}};
      sc["materials"]["a"] = parse_json_file(fp_a);
      sc["materials"]["b"] = parse_json_file(fp_b);
      sc["sweep"] = sweep_json("gap", fp_gmin, fp_gmax, fp_points, false);
      if (fp_temp > 0.0) sc["temperature"] = fp_temp;
      return run_and_emit(sc.dump(), o_plates);
    }
    if (cmd_check->parsed()) {
      if (!o_check.scenario_path.empty())
        return run_and_emit(slurp(o_check.scenario_path), o_check);
      json sc{{"task", "check"}, {"stack", "s"}};
      sc["atoms"]["a"] = parse_json_file(ck_atom);
      embed_stack(sc, ck_stack, "s");
      sc["slab"] = json{{"atom", "a"},
                        {"eta", ck_eta},
                        {"z_lo", ck_zlo},
                        {"z_hi", ck_zhi},
                        {"n_layers", ck_layers}};
      return run_and_emit(sc.dump(), o_check);
    }
  } catch (const casimir::SchemaError& e) {
    std::cerr << "casimir-gain: " << e.what() << "\n";
    return 1;
  } catch (const casimir::DivergenceError& e) {
    std::cerr << "casimir-gain: divergence: " << e.what() << "\n";
    return 2;
  } catch (const casimir::QuadratureError& e) {
    std::cerr << "casimir-gain: no numerical convergence: " << e.what()
              << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "casimir-gain: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

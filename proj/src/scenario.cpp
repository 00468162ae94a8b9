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

#include "casimir/scenario.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "casimir/constants.hpp"

namespace casimir {

namespace {

using nlohmann::json;

std::string fnv1a64(const std::string& text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw SchemaError(path, msg);
}

const json& member(const json& j, const std::string& key,
                   const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) fail(path + "/" + key, "missing required field");
  return *it;
}

double number(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  return j.get<double>();
}

double number_or(const json& j, const std::string& key, double fallback,
                 const std::string& path) {
  if (!j.is_object() || !j.contains(key)) return fallback;
  return number(j[key], path + "/" + key);
}

int integer(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<int>();
}

std::string text(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

double unit_factor(const json& j, const std::string& path) {
  if (!j.is_object() || !j.contains("unit")) return 1.0;
  const std::string u = text(j["unit"], path + "/unit");
  if (u == "rad_s") return 1.0;
  if (u == "eV") return constants::eV_to_rad_s;
  fail(path + "/unit", "unknown unit '" + u + "' (rad_s or eV)");
}

// Scalar frequency: plain number (rad/s) or {"value":..., "unit":...}.
double frequency(const json& j, const std::string& path) {
  if (j.is_number()) return j.get<double>();
  if (j.is_object())
    return number(member(j, "value", path), path + "/value") *
           unit_factor(j, path);
  fail(path, "expected a number or {value, unit}");
}

MaterialPtr parse_material(const json& j, const std::string& path) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "vacuum")
      return std::make_shared<const Material>(Material::vacuum());
    if (s == "mirror")
      return std::make_shared<const Material>(Material::perfect_mirror());
    fail(path, "unknown built-in material '" + s + "'");
  }
  if (!j.is_object()) fail(path, "expected a material object or name");
  if (j.value("mirror", false))
    return std::make_shared<const Material>(Material::perfect_mirror());
  const double unit = unit_factor(j, path);
  const double background = number_or(j, "background", 1.0, path);
  std::vector<LorentzOscillator> oscillators;
  if (j.contains("oscillators")) {
    const json& arr = j["oscillators"];
    if (!arr.is_array()) fail(path + "/oscillators", "expected an array");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string p = path + "/oscillators/" + std::to_string(i);
      const json& o = arr[i];
      LorentzOscillator osc;
      osc.omega0 = number(member(o, "omega0", p), p + "/omega0") * unit;
      osc.omegap = number(member(o, "omegap", p), p + "/omegap") * unit;
      osc.gamma = number(member(o, "gamma", p), p + "/gamma") * unit;
      osc.inverted = o.value("inverted", false);
      oscillators.push_back(osc);
    }
  }
  try {
    return std::make_shared<const Material>(
        Material::dielectric(PermittivityModel(std::move(oscillators),
                                               background)));
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
}

AtomModel parse_atom(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an atom object");
  const double unit = unit_factor(j, path);
  const json& arr = member(j, "transitions", path);
  if (!arr.is_array()) fail(path + "/transitions", "expected an array");
  std::vector<AtomTransition> transitions;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string p = path + "/transitions/" + std::to_string(i);
    const json& t = arr[i];
    AtomTransition tr;
    tr.omega_kn = number(member(t, "omega_kn", p), p + "/omega_kn") * unit;
    tr.d2 = number(member(t, "d2", p), p + "/d2");
    transitions.push_back(tr);
  }
  const double reg = number_or(j, "linewidth_epsilon", 0.0, path) * unit;
  try {
    return AtomModel(std::move(transitions), reg);
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
}

MaterialPtr resolve_material(const Scenario& sc, const std::string& id,
                             const std::string& path) {
  const auto it = sc.materials.find(id);
  if (it != sc.materials.end()) return it->second;
  if (id == "vacuum")
    return std::make_shared<const Material>(Material::vacuum());
  if (id == "mirror")
    return std::make_shared<const Material>(Material::perfect_mirror());
  fail(path, "unknown material id '" + id + "'");
}

LayerStack parse_stack(const Scenario& sc, const json& j,
                       const std::string& path) {
  if (!j.is_object()) fail(path, "expected a stack object");
  const MaterialPtr below = resolve_material(
      sc, text(member(j, "below", path), path + "/below"), path + "/below");
  const MaterialPtr above = resolve_material(
      sc, j.contains("above") ? text(j["above"], path + "/above") : "vacuum",
      path + "/above");
  std::vector<Layer> layers;
  if (j.contains("layers")) {
    const json& arr = j["layers"];
    if (!arr.is_array()) fail(path + "/layers", "expected an array");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string p = path + "/layers/" + std::to_string(i);
      const json& l = arr[i];
      Layer layer;
      layer.material = resolve_material(
          sc, text(member(l, "material", p), p + "/material"),
          p + "/material");
      layer.thickness = number(member(l, "thickness", p), p + "/thickness");
      layers.push_back(std::move(layer));
    }
  }
  try {
    return LayerStack(below, std::move(layers), above,
                      j.value("allow_gain", false));
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
}

Task parse_task(const std::string& s, const std::string& path) {
  if (s == "material") return Task::Material;
  if (s == "green") return Task::Green;
  if (s == "cp") return Task::Cp;
  if (s == "force-slab") return Task::ForceSlab;
  if (s == "force-plates") return Task::ForcePlates;
  if (s == "check") return Task::Check;
  fail(path, "unknown task '" + s + "'");
}

SweepSpec parse_sweep(const json& j, const std::string& path) {
  SweepSpec sw;
  sw.variable = text(member(j, "variable", path), path + "/variable");
  sw.min = number(member(j, "min", path), path + "/min");
  sw.max = number(member(j, "max", path), path + "/max");
  sw.points = integer(member(j, "points", path), path + "/points");
  const std::string scale =
      j.contains("scale") ? text(j["scale"], path + "/scale") : "log";
  if (scale == "log")
    sw.log_spacing = true;
  else if (scale == "linear")
    sw.log_spacing = false;
  else
    fail(path + "/scale", "expected 'log' or 'linear'");
  if (sw.points < 1) fail(path + "/points", "points must be >= 1");
  if (sw.max < sw.min) fail(path + "/max", "max must be >= min");
  if ((sw.variable == "z" || sw.variable == "gap") && !(sw.min > 0.0))
    fail(path + "/min", "sweep bounds must be positive for z/gap axes");
  if (sw.log_spacing && !(sw.min > 0.0))
    fail(path + "/min", "log spacing needs positive bounds");
  return sw;
}

QuadratureSpec parse_tolerances(const json& j, const std::string& path) {
  QuadratureSpec q;
  q.rel_tol = number_or(j, "rel_tol", q.rel_tol, path);
  q.abs_tol = number_or(j, "abs_tol", q.abs_tol, path);
  if (j.contains("max_subdivisions"))
    q.max_subdivisions =
        integer(j["max_subdivisions"], path + "/max_subdivisions");
  if (j.contains("tail_mapping")) {
    const std::string m = text(j["tail_mapping"], path + "/tail_mapping");
    if (m == "exp")
      q.tail_mapping = QuadratureSpec::TailMapping::Exp;
    else if (m == "algebraic")
      q.tail_mapping = QuadratureSpec::TailMapping::Algebraic;
    else
      fail(path + "/tail_mapping", "expected 'exp' or 'algebraic'");
  }
  if (!q.valid()) fail(path, "rel_tol or abs_tol must be positive");
  return q;
}

DiluteSlab parse_slab(const Scenario& sc, const json& j,
                      const std::string& path) {
  DiluteSlab slab;
  const std::string atom_id =
      text(member(j, "atom", path), path + "/atom");
  const auto it = sc.atoms.find(atom_id);
  if (it == sc.atoms.end()) fail(path + "/atom", "unknown atom id");
  slab.atom = it->second;
  slab.eta = number(member(j, "eta", path), path + "/eta");
  slab.z_lo = number(member(j, "z_lo", path), path + "/z_lo");
  slab.z_hi = number(member(j, "z_hi", path), path + "/z_hi");
  if (j.contains("n_layers"))
    slab.n_layers = integer(j["n_layers"], path + "/n_layers");
  if (!(slab.z_lo > 0.0) || !(slab.z_hi > slab.z_lo))
    fail(path, "need 0 < z_lo < z_hi");
  if (slab.n_layers < 1) fail(path + "/n_layers", "must be >= 1");
  if (!(slab.eta >= 0.0)) fail(path + "/eta", "must be >= 0");
  return slab;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12e", v);
  return buf;
}

std::vector<double> sweep_values(const SweepSpec& sw) {
  std::vector<double> v;
  v.reserve(static_cast<std::size_t>(sw.points));
  if (sw.points == 1) {
    v.push_back(sw.min);
    return v;
  }
  for (int i = 0; i < sw.points; ++i) {
    const double s = static_cast<double>(i) / (sw.points - 1);
    v.push_back(sw.log_spacing ? sw.min * std::pow(sw.max / sw.min, s)
                               : sw.min + (sw.max - sw.min) * s);
  }
  return v;
}

unsigned thread_count(std::size_t rows) {
  unsigned n = std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  if (const char* env = std::getenv("CASIMIR_GAIN_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) n = static_cast<unsigned>(v);
  }
  return std::min<unsigned>(n, std::max<std::size_t>(rows, 1));
}

struct Row {
  std::string csv;
  json errs;
};

// Evaluates `compute` over the sweep values on a small worker pool; rows keep
// sweep order regardless of completion order.
std::vector<Row> evaluate_rows(const std::vector<double>& xs,
                               const std::function<Row(double)>& compute) {
  std::vector<Row> rows(xs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  const unsigned nthreads = thread_count(xs.size());
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= xs.size()) return;
      try {
        rows[i] = compute(xs[i]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (first_error) std::rethrow_exception(first_error);
  return rows;
}

const LayerStack& bound_stack(const Scenario& sc) {
  const auto it = sc.stacks.find(sc.stack_id);
  if (it == sc.stacks.end()) fail("/stack", "unknown stack id");
  return it->second;
}

}  // namespace

const char* task_name(Task t) {
  switch (t) {
    case Task::Material: return "material";
    case Task::Green: return "green";
    case Task::Cp: return "cp";
    case Task::ForceSlab: return "force-slab";
    case Task::ForcePlates: return "force-plates";
    case Task::Check: return "check";
  }
  return "?";
}

Scenario parse_scenario(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail("/", std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) fail("/", "expected a JSON object");

  Scenario sc;
  sc.input_fingerprint = fnv1a64(json_text);

  if (j.contains("materials")) {
    if (!j["materials"].is_object()) fail("/materials", "expected an object");
    for (const auto& [id, m] : j["materials"].items())
      sc.materials.emplace(id, parse_material(m, "/materials/" + id));
  }
  if (j.contains("atoms")) {
    if (!j["atoms"].is_object()) fail("/atoms", "expected an object");
    for (const auto& [id, a] : j["atoms"].items())
      sc.atoms.emplace(id, parse_atom(a, "/atoms/" + id));
  }
  if (j.contains("stacks")) {
    if (!j["stacks"].is_object()) fail("/stacks", "expected an object");
    for (const auto& [id, s] : j["stacks"].items())
      sc.stacks.emplace(id, parse_stack(sc, s, "/stacks/" + id));
  }

  sc.task = parse_task(text(member(j, "task", "/"), "/task"), "/task");
  if (j.contains("sweep")) sc.sweep = parse_sweep(j["sweep"], "/sweep");
  if (j.contains("tolerances"))
    sc.tolerances = parse_tolerances(j["tolerances"], "/tolerances");
  if (j.contains("temperature")) {
    sc.temperature = number(j["temperature"], "/temperature");
    if (sc.temperature < 0.0) fail("/temperature", "must be >= 0");
  }

  const auto need_sweep = [&](std::initializer_list<const char*> allowed) {
    if (!sc.sweep) fail("/sweep", "task needs a sweep");
    for (const char* a : allowed)
      if (sc.sweep->variable == a) return;
    fail("/sweep/variable", "not valid for this task");
  };

  switch (sc.task) {
    case Task::Material: {
      sc.material_id = text(member(j, "material", "/"), "/material");
      resolve_material(sc, sc.material_id, "/material");
      need_sweep({"omega", "xi"});
      break;
    }
    case Task::Green: {
      sc.stack_id = text(member(j, "stack", "/"), "/stack");
      bound_stack(sc);
      need_sweep({"z", "omega", "xi"});
      if (sc.sweep->variable == "z") {
        if (j.contains("xi"))
          sc.fixed_xi = frequency(j["xi"], "/xi");
        else if (j.contains("omega"))
          sc.fixed_omega = frequency(j["omega"], "/omega");
        else
          fail("/", "green z-sweep needs 'xi' or 'omega'");
      } else {
        sc.fixed_z = number(member(j, "z", "/"), "/z");
        if (!(*sc.fixed_z > 0.0)) fail("/z", "must be > 0");
      }
      break;
    }
    case Task::Cp: {
      sc.stack_id = text(member(j, "stack", "/"), "/stack");
      bound_stack(sc);
      const std::string atom_id = text(member(j, "atom", "/"), "/atom");
      if (!sc.atoms.count(atom_id)) fail("/atom", "unknown atom id");
      sc.atom_id = atom_id;
      need_sweep({"z"});
      break;
    }
    case Task::ForceSlab: {
      sc.stack_id = text(member(j, "stack", "/"), "/stack");
      bound_stack(sc);
      sc.slab = parse_slab(sc, member(j, "slab", "/"), "/slab");
      if (sc.sweep) need_sweep({"z"});
      break;
    }
    case Task::ForcePlates: {
      sc.mat_a_id = text(member(j, "mat_a", "/"), "/mat_a");
      sc.mat_b_id = text(member(j, "mat_b", "/"), "/mat_b");
      resolve_material(sc, sc.mat_a_id, "/mat_a");
      resolve_material(sc, sc.mat_b_id, "/mat_b");
      need_sweep({"gap"});
      break;
    }
    case Task::Check: {
      sc.stack_id = text(member(j, "stack", "/"), "/stack");
      bound_stack(sc);
      sc.slab = parse_slab(sc, member(j, "slab", "/"), "/slab");
      break;
    }
  }
  return sc;
}

Scenario parse_scenario_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("/", "cannot open scenario file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_scenario(ss.str());
}

RunResult run(const Scenario& sc) {
  const QuadratureSpec& q = sc.tolerances;
  std::string header;
  std::vector<double> xs;
  std::function<Row(double)> compute;

  switch (sc.task) {
    case Task::Material: {
      const MaterialPtr mat =
          resolve_material(sc, sc.material_id, "/material");
      const bool imag = sc.sweep->variable == "xi";
      header = imag ? "xi[rad/s],re_eps[1],im_eps[1]"
                    : "omega[rad/s],re_eps[1],im_eps[1]";
      xs = sweep_values(*sc.sweep);
      compute = [mat, imag](double w) {
        std::complex<double> eps;
        if (mat->is_mirror()) {
          eps = {std::numeric_limits<double>::infinity(), 0.0};
        } else if (imag) {
          eps = {eval_permittivity_imag_axis(mat->eps, w), 0.0};
        } else {
          eps = eval_permittivity(mat->eps, {w, 0.0});
        }
        Row r;
        r.csv = fmt(w) + "," + fmt(eps.real()) + "," + fmt(eps.imag());
        r.errs = json::object();
        return r;
      };
      break;
    }
    case Task::Green: {
      const LayerStack& stack = bound_stack(sc);
      const bool zsweep = sc.sweep->variable == "z";
      const bool imag = zsweep ? sc.fixed_xi.has_value()
                               : sc.sweep->variable == "xi";
      header = std::string(imag ? "xi[rad/s]" : "omega[rad/s]") +
               ",z[m],re_tr_g1[1/m],im_tr_g1[1/m],err[1/m]";
      xs = sweep_values(*sc.sweep);
      compute = [&sc, &stack, zsweep, imag, q](double x) {
        const double z = zsweep ? x : *sc.fixed_z;
        const double w =
            zsweep ? (imag ? *sc.fixed_xi : *sc.fixed_omega) : x;
        std::complex<double> value;
        double err = 0.0;
        if (imag) {
          const GreenTraceReal g = green_trace_imag_axis(stack, z, w, q);
          value = {g.value, 0.0};
          err = g.err;
        } else {
          const GreenTrace g = green_trace(stack, z, {w, 0.0}, q);
          value = g.value;
          err = g.err;
        }
        Row r;
        r.csv = fmt(w) + "," + fmt(z) + "," + fmt(value.real()) + "," +
                fmt(value.imag()) + "," + fmt(err);
        r.errs = json{{"err", err}};
        return r;
      };
      break;
    }
    case Task::Cp: {
      const LayerStack& stack = bound_stack(sc);
      const AtomModel& atom = sc.atoms.at(sc.atom_id);
      header = "z[m],u_nr[J],u_r[J],u_total[J],f_z[N],err_nr[J],err_r[J]";
      xs = sweep_values(*sc.sweep);
      const double T = sc.temperature;
      compute = [&atom, &stack, q, T](double z) {
        ValueErr nr, nf;
        if (T > 0.0) {
          nr = cp_nonresonant_thermal(atom, stack, z, T, q);
          nf = cp_nonresonant_thermal_force(atom, stack, z, T, q);
        } else {
          nr = cp_nonresonant(atom, stack, z, q);
          nf = cp_nonresonant_force(atom, stack, z, q);
        }
        const ValueErr rr = cp_resonant(atom, stack, z, q);
        const ValueErr rf = cp_resonant_force(atom, stack, z, q);
        Row r;
        r.csv = fmt(z) + "," + fmt(nr.value) + "," + fmt(rr.value) + "," +
                fmt(nr.value + rr.value) + "," + fmt(nf.value + rf.value) +
                "," + fmt(nr.err) + "," + fmt(rr.err);
        r.errs = json{{"err_nr", nr.err}, {"err_r", rr.err}};
        return r;
      };
      break;
    }
    case Task::ForceSlab: {
      const LayerStack& stack = bound_stack(sc);
      const DiluteSlab base = *sc.slab;
      header =
          "z[m],f_nr[N/m^2],f_r[N/m^2],f_total[N/m^2],err_nr[N/m^2],"
          "err_r[N/m^2]";
      if (sc.sweep) {
        xs = sweep_values(*sc.sweep);
      } else {
        xs = {0.5 * (base.z_lo + base.z_hi)};
      }
      compute = [&stack, base, q](double center) {
        const double half = 0.5 * (base.z_hi - base.z_lo);
        DiluteSlab s = base;
        s.z_lo = center - half;
        s.z_hi = center + half;
        const ForceResult f = force_total_dilute(s, stack, q);
        Row r;
        r.csv = fmt(center) + "," + fmt(f.f_nr) + "," + fmt(f.f_r) + "," +
                fmt(f.f_total) + "," + fmt(f.err_nr) + "," + fmt(f.err_r);
        r.errs = json{{"err_nr", f.err_nr}, {"err_r", f.err_r}};
        return r;
      };
      break;
    }
    case Task::ForcePlates: {
      const MaterialPtr a = resolve_material(sc, sc.mat_a_id, "/mat_a");
      const MaterialPtr b = resolve_material(sc, sc.mat_b_id, "/mat_b");
      header = "gap[m],f_nr[N/m^2],f_r[N/m^2],f_total[N/m^2],err[N/m^2]";
      xs = sweep_values(*sc.sweep);
      const double T = sc.temperature;
      compute = [a, b, T, q](double gap) {
        const ValueErr p = lifshitz_two_plates(*a, *b, gap, T, q);
        Row r;
        r.csv = fmt(gap) + "," + fmt(p.value) + "," + fmt(0.0) + "," +
                fmt(p.value) + "," + fmt(p.err);
        r.errs = json{{"err", p.err}};
        return r;
      };
      break;
    }
    case Task::Check: {
      const LayerStack& stack = bound_stack(sc);
      const DiluteSlab slab = *sc.slab;
      header =
          "dev_nr[1],dev_r[1],dev_total[1],f_nr_macro[N/m^2],f_r_macro[N/m^2]"
          ",f_nr_micro[N/m^2],f_r_micro[N/m^2]";
      xs = {0.0};
      compute = [&stack, slab, q](double) {
        const AdditivityReport rep = additivity_check(slab, stack, q);
        Row r;
        r.csv = fmt(rep.dev_nr) + "," + fmt(rep.dev_r) + "," +
                fmt(rep.dev_total) + "," + fmt(rep.macro.f_nr) + "," +
                fmt(rep.macro.f_r) + "," + fmt(rep.micro.f_nr) + "," +
                fmt(rep.micro.f_r);
        r.errs = json{{"dev_nr", rep.dev_nr}, {"dev_r", rep.dev_r}};
        return r;
      };
      break;
    }
  }

  const std::vector<Row> rows = evaluate_rows(xs, compute);

  std::string csv = header + "\n";
  json row_errs = json::array();
  for (const Row& r : rows) {
    csv += r.csv + "\n";
    row_errs.push_back(r.errs);
  }

  json manifest;
  manifest["version"] = constants::version;
  manifest["task"] = task_name(sc.task);
  manifest["input_hash"] = sc.input_fingerprint;
  manifest["tolerances"] = {
      {"rel_tol", q.rel_tol},
      {"abs_tol", q.abs_tol},
      {"max_subdivisions", q.max_subdivisions},
      {"tail_mapping",
       q.tail_mapping == QuadratureSpec::TailMapping::Exp ? "exp"
                                                          : "algebraic"}};
  manifest["temperature"] = sc.temperature;
  manifest["rows"] = rows.size();
  manifest["columns"] = header;
  manifest["row_errors"] = row_errs;

  return {csv, manifest.dump(2) + "\n"};
}

}  // namespace casimir

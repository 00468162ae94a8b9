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

#pragma once

#include <map>
#include <optional>
#include <string>

#include "casimir/forces.hpp"
#include "casimir/greens.hpp"
#include "casimir/materials.hpp"
#include "casimir/numerics.hpp"
#include "casimir/potentials.hpp"

namespace casimir {

// Raised on any malformed or inconsistent scenario input. The message names
// the offending JSON path.
class SchemaError : public std::runtime_error {
 public:
  SchemaError(const std::string& path, const std::string& msg)
      : std::runtime_error("schema error at " + path + ": " + msg),
        path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

enum class Task { Material, Green, Cp, ForceSlab, ForcePlates, Check };

const char* task_name(Task t);

struct SweepSpec {
  std::string variable;  // "z", "gap", "omega", "xi"
  double min = 0.0;
  double max = 0.0;
  int points = 1;
  bool log_spacing = true;
};

// One batch job: named materials/atoms/stacks plus a task with its bindings.
struct Scenario {
  Task task = Task::Material;
  std::map<std::string, MaterialPtr> materials;
  std::map<std::string, AtomModel> atoms;
  std::map<std::string, LayerStack> stacks;
  std::optional<SweepSpec> sweep;
  QuadratureSpec tolerances;
  double temperature = 0.0;

  std::string material_id;  // task=material
  std::string atom_id;      // task=cp
  std::string stack_id;     // task=green, cp, force-slab, check
  std::string mat_a_id;     // task=force-plates
  std::string mat_b_id;
  std::optional<DiluteSlab> slab;      // task=force-slab, check
  std::optional<double> fixed_z;       // task=green frequency sweeps
  std::optional<double> fixed_omega;   // task=green z sweeps (real axis)
  std::optional<double> fixed_xi;      // task=green z sweeps (imaginary axis)

  std::string input_fingerprint;  // hash of the scenario document
};

Scenario parse_scenario(const std::string& json_text);
Scenario parse_scenario_file(const std::string& path);

struct RunResult {
  std::string csv;            // header + rows, deterministic formatting
  std::string manifest_json;  // run metadata and per-row error estimates
};

// Evaluates the scenario. Sweep points run concurrently (capped by the
// CASIMIR_GAIN_THREADS environment variable); rows are emitted in sweep
// order. Nothing is produced on error: exceptions propagate.
RunResult run(const Scenario& scenario);

}  // namespace casimir

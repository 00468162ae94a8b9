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

#include "casimir/greens.hpp"
#include "casimir/materials.hpp"
#include "casimir/potentials.hpp"

namespace casimir {

// A dilute gas slab of identical atoms occupying z in [z_lo, z_hi] above the
// stack's top interface. n_layers is the panel count for the volume
// discretisation. Warns when the static susceptibility exceeds 1e-2.
struct DiluteSlab {
  AtomModel atom;
  double eta = 0.0;   // number density [1/m^3]
  double z_lo = 0.0;  // [m]
  double z_hi = 0.0;  // [m]
  int n_layers = 64;
};

// Per-unit-area force on the slab; negative values point towards the stack
// (attraction).
struct ForceResult {
  double f_nr = 0.0;     // [N/m^2]
  double f_r = 0.0;      // [N/m^2]
  double f_total = 0.0;  // f_nr + f_r exactly
  double err_nr = 0.0;
  double err_r = 0.0;
};

// Nonresonant component: -eta * [U_nr(z_hi) - U_nr(z_lo)]. The n_layers panel
// discretisation of the volume integral is evaluated alongside and must
// telescope to the endpoint difference to roundoff.
ValueErr force_nr_dilute(const DiluteSlab& slab, const LayerStack& stack,
                         const QuadratureSpec& spec = {});

// Resonant component through the sharp-line potential, same construction.
ValueErr force_r_dilute(const DiluteSlab& slab, const LayerStack& stack,
                        const QuadratureSpec& spec = {});

// Resonant component through the finite-linewidth frequency-window route;
// cross-validates force_r_dilute and converges to it as gamma_a -> 0.
ValueErr force_r_dilute_window(const DiluteSlab& slab, const LayerStack& stack,
                               double gamma_a, const QuadratureSpec& spec = {});

ForceResult force_total_dilute(const DiluteSlab& slab, const LayerStack& stack,
                               const QuadratureSpec& spec = {});

// Dilute-gas additivity: the macroscopic route (potential endpoint
// differences) against the microscopic route (density-weighted midpoint sum
// of per-atom forces from analytic derivatives), per component.
struct AdditivityReport {
  ForceResult macro;
  ForceResult micro;
  double dev_nr = 0.0;
  double dev_r = 0.0;
  double dev_total = 0.0;
};

AdditivityReport additivity_check(const DiluteSlab& slab,
                                  const LayerStack& stack,
                                  const QuadratureSpec& spec = {});

// Imaginary-frequency (Lifshitz-type) pressure between two half spaces
// separated by a vacuum gap. Negative = attraction. T > 0 switches the
// frequency integral to a Matsubara sum. A vanishing scattering denominator
// (gain above threshold) raises DivergenceError.
ValueErr lifshitz_two_plates(const Material& mat_a, const Material& mat_b,
                             double gap, double temperature = 0.0,
                             const QuadratureSpec& spec = {});

}  // namespace casimir

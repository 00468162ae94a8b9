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

#include <functional>

#include "casimir/greens.hpp"
#include "casimir/materials.hpp"
#include "casimir/numerics.hpp"

namespace casimir {

struct ValueErr {
  double value = 0.0;
  double err = 0.0;
};

// Atom-surface potential at height z, split into the imaginary-frequency
// (nonresonant) part and the emission (resonant) part.
struct PotentialResult {
  double u_nr = 0.0;     // [J]
  double u_r = 0.0;      // [J]
  double u_total = 0.0;  // u_nr + u_r exactly [J]
  double f_z = 0.0;      // -d u_total / dz, from analytic derivatives [N]
  double err_nr = 0.0;
  double err_r = 0.0;
  double z = 0.0;        // [m]
};

// U_nr(z) = (hbar mu0 / 2 pi) Int_0^inf dxi xi^2 alpha(i xi) Tr G1(z,z,i xi).
ValueErr cp_nonresonant(const AtomModel& atom, const LayerStack& stack,
                        double z, const QuadratureSpec& spec = {});

// f_z = -dU_nr/dz via the analytic z-derivative of the Green trace.
ValueErr cp_nonresonant_force(const AtomModel& atom, const LayerStack& stack,
                              double z, const QuadratureSpec& spec = {});

// U_r(z) = -(mu0/3) sum over downward transitions of
//          omega_nk^2 |d|^2 Tr Re G1(z,z,omega_nk).
// Zero for a ground-state atom; refuses stacks that amplify at a line.
ValueErr cp_resonant(const AtomModel& atom, const LayerStack& stack, double z,
                     const QuadratureSpec& spec = {});

ValueErr cp_resonant_force(const AtomModel& atom, const LayerStack& stack,
                           double z, const QuadratureSpec& spec = {});

// Finite-linewidth emission profile: Im alpha(omega) <= 0 on a finite window.
// Breakpoints seed the quadrature around sharp features.
struct ResonantProfile {
  std::function<double(double)> im_alpha;
  double lo = 0.0;
  double hi = 0.0;
  std::vector<double> breakpoints;
};

// Lorentzian-broadened emission lines of width gamma_a; window extends
// window_halfwidth (fraction of the line frequency) on both sides.
ResonantProfile lorentzian_im_alpha(const AtomModel& atom, double gamma_a,
                                    double window_halfwidth = 0.5);

// U_r = (hbar mu0 / pi) Int_window domega omega^2 [Im alpha]_- Tr Re G1,
// restricted to Im alpha <= 0 (window boundary points included). Converges to
// cp_resonant as the linewidth goes to zero.
ValueErr cp_resonant_integral(const ResonantProfile& profile,
                              const LayerStack& stack, double z,
                              const QuadratureSpec& spec = {});

PotentialResult cp_total(const AtomModel& atom, const LayerStack& stack,
                         double z, const QuadratureSpec& spec = {});

// Nonresonant part at finite temperature: the xi-integral becomes a Matsubara
// sum with the m = 0 term from the static Green-trace limit. T = 0 falls back
// to cp_nonresonant. The resonant part is left at its T = 0 form.
ValueErr cp_nonresonant_thermal(const AtomModel& atom, const LayerStack& stack,
                                double z, double temperature,
                                const QuadratureSpec& spec = {});

ValueErr cp_nonresonant_thermal_force(const AtomModel& atom,
                                      const LayerStack& stack, double z,
                                      double temperature,
                                      const QuadratureSpec& spec = {});

}  // namespace casimir

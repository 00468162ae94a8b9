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

#include <complex>
#include <vector>

#include "casimir/numerics.hpp"

namespace casimir {

// One Lorentz oscillator. An inverted (population-pumped) oscillator enters
// with flipped sign and contributes negative Im eps, i.e. optical gain, in a
// band around omega0. gamma > 0 keeps all poles in the lower half plane.
struct LorentzOscillator {
  double omega0 = 0.0;    // resonance [rad/s]
  double omegap = 0.0;    // coupling strength [rad/s], enters squared
  double gamma = 0.0;     // damping rate [rad/s]
  bool inverted = false;  // true: gain (emission) instead of absorption
};

// Sum of Lorentz oscillators over a real background constant. Causal by
// construction: eps(-conj(w)) = conj(eps(w)) and eps(i xi) is real.
class PermittivityModel {
 public:
  PermittivityModel() = default;  // vacuum
  PermittivityModel(std::vector<LorentzOscillator> oscillators,
                    double background = 1.0);

  const std::vector<LorentzOscillator>& oscillators() const {
    return oscillators_;
  }
  double background() const { return background_; }
  bool is_vacuum() const {
    return oscillators_.empty() && background_ == 1.0;
  }
  // True when no oscillator is inverted (Im eps >= 0 for all omega > 0).
  bool purely_absorbing() const;

  static PermittivityModel vacuum() { return {}; }

 private:
  std::vector<LorentzOscillator> oscillators_;
  double background_ = 1.0;
};

std::complex<double> eval_permittivity(const PermittivityModel& model,
                                       std::complex<double> omega);

// eps(i xi) evaluated in real arithmetic; exact real result. xi >= 0.
double eval_permittivity_imag_axis(const PermittivityModel& model, double xi);

// Im eps(omega) on the positive real axis, closed form.
double im_permittivity(const PermittivityModel& model, double omega);

// Contiguous frequency interval with Im eps < 0 (optical gain). Boundary
// points count as part of the window.
struct GainWindow {
  double lo = 0.0;
  double hi = 0.0;
};

struct FrequencyGrid {
  double lo = 0.0;
  double hi = 0.0;
  int points = 4000;
  bool log_spacing = true;
};

// Maximal disjoint intervals of the scan range where Im eps < -tol, endpoints
// refined by bisection to 1e-10 relative accuracy.
std::vector<GainWindow> gain_windows(const PermittivityModel& model,
                                     const FrequencyGrid& grid, double tol);

// Kramers-Kronig consistency: eps(i xi) - background computed directly and
// through the dispersion integral (2/pi) Int_0^inf w Im eps(w)/(w^2+xi^2) dw.
// Returns the relative deviation (0 by convention for a vacuum model).
double kk_check(const PermittivityModel& model, double xi,
                const QuadratureSpec& spec = {});

// One electric-dipole transition of the atom's prepared state. omega_kn > 0
// is an upward (absorbing) transition, omega_kn < 0 a downward (emitting) one.
struct AtomTransition {
  double omega_kn = 0.0;  // signed transition frequency [rad/s]
  double d2 = 0.0;        // |d|^2, squared dipole matrix element [C^2 m^2]
};

class AtomModel {
 public:
  AtomModel() = default;
  explicit AtomModel(std::vector<AtomTransition> transitions,
                     double linewidth_epsilon = 0.0);

  const std::vector<AtomTransition>& transitions() const {
    return transitions_;
  }
  // Regulator used only for plotting alpha on the real axis. Defaults to
  // 1e-6 * min |omega_kn| when not set explicitly.
  double regulator() const;

 private:
  std::vector<AtomTransition> transitions_;
  double linewidth_epsilon_ = 0.0;
};

// alpha(omega) = (1/3 hbar) sum_k [ d2/(omega + omega_kn + i eps)
//                                 - d2/(omega - omega_kn + i eps) ].
// epsilon < 0 selects the default regulator for real omega (none elsewhere).
// Unregulated evaluation at a pole raises std::domain_error.
std::complex<double> polarizability(const AtomModel& atom,
                                    std::complex<double> omega,
                                    double epsilon = -1.0);

// alpha(i xi) = (2/3 hbar) sum_k d2 * omega_kn / (omega_kn^2 + xi^2),
// exact real arithmetic. xi >= 0.
double polarizability_imag_axis(const AtomModel& atom, double xi);

// One delta line of Im alpha at omega_nk > 0 with weight pi d2 / (3 hbar):
// Im alpha(omega > 0) = -sum weights * delta(omega - omega_nk). Only downward
// transitions appear; a ground-state atom gives an empty spectrum.
struct SharpLine {
  double omega_nk = 0.0;  // positive emission frequency [rad/s]
  double weight = 0.0;    // pi |d|^2 / (3 hbar) [C^2 m^2 / (J s)]
};

std::vector<SharpLine> sharp_line_spectrum(const AtomModel& atom);

// Linearised Clausius-Mossotti susceptibility chi = eta alpha / eps0 for a
// dilute gas of number density eta. Warns (stderr) when |chi| > 1e-2.
std::complex<double> susceptibility_from_atoms(const AtomModel& atom,
                                               double eta,
                                               std::complex<double> omega);

}  // namespace casimir

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

#include "casimir/materials.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>
#include <numbers>

#include "casimir/constants.hpp"

namespace casimir {

PermittivityModel::PermittivityModel(
    std::vector<LorentzOscillator> oscillators, double background)
    : oscillators_(std::move(oscillators)), background_(background) {
  if (!(background_ >= 1.0) || !std::isfinite(background_))
    throw std::invalid_argument(
        "PermittivityModel: background must be a finite value >= 1");
  for (const auto& o : oscillators_) {
    if (!(o.omega0 > 0.0))
      throw std::invalid_argument("LorentzOscillator: omega0 must be > 0");
    if (!(o.omegap >= 0.0))
      throw std::invalid_argument("LorentzOscillator: omegap must be >= 0");
    if (!(o.gamma > 0.0))
      throw std::invalid_argument("LorentzOscillator: gamma must be > 0");
  }
}

bool PermittivityModel::purely_absorbing() const {
  return std::none_of(oscillators_.begin(), oscillators_.end(),
                      [](const LorentzOscillator& o) { return o.inverted; });
}

std::complex<double> eval_permittivity(const PermittivityModel& model,
                                       std::complex<double> omega) {
  std::complex<double> eps(model.background(), 0.0);
  for (const auto& o : model.oscillators()) {
    const double sign = o.inverted ? -1.0 : 1.0;
    const std::complex<double> denom =
        o.omega0 * o.omega0 - omega * omega -
        std::complex<double>(0.0, o.gamma) * omega;
    eps += sign * (o.omegap * o.omegap) / denom;
  }
  return eps;
}

double eval_permittivity_imag_axis(const PermittivityModel& model, double xi) {
  if (!(xi >= 0.0))
    throw std::invalid_argument(
        "eval_permittivity_imag_axis: xi must be >= 0");
  double eps = model.background();
  for (const auto& o : model.oscillators()) {
    const double sign = o.inverted ? -1.0 : 1.0;
    eps += sign * (o.omegap * o.omegap) /
           (o.omega0 * o.omega0 + xi * xi + o.gamma * xi);
  }
  return eps;
}

double im_permittivity(const PermittivityModel& model, double omega) {
  double im = 0.0;
  for (const auto& o : model.oscillators()) {
    const double sign = o.inverted ? -1.0 : 1.0;
    const double d = o.omega0 * o.omega0 - omega * omega;
    im += sign * (o.omegap * o.omegap) * o.gamma * omega /
          (d * d + o.gamma * o.gamma * omega * omega);
  }
  return im;
}

std::vector<GainWindow> gain_windows(const PermittivityModel& model,
                                     const FrequencyGrid& grid, double tol) {
  if (!(grid.lo > 0.0) || !(grid.hi > grid.lo) || grid.points < 2)
    throw std::invalid_argument("gain_windows: bad frequency grid");
  if (!(tol >= 0.0)) throw std::invalid_argument("gain_windows: tol < 0");

  const auto sample = [&](int i) {
    const double s = static_cast<double>(i) / (grid.points - 1);
    return grid.log_spacing ? grid.lo * std::pow(grid.hi / grid.lo, s)
                            : grid.lo + (grid.hi - grid.lo) * s;
  };
  // Negative inside a gain window.
  const auto h = [&](double w) { return im_permittivity(model, w) + tol; };

  const auto refine = [&](double a, double b) {
    // h changes sign on [a, b]; bisect to 1e-10 relative width.
    double ha = h(a);
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (a + b);
      if (b - a <= 1e-10 * mid || mid <= a || mid >= b) break;
      if ((h(mid) < 0.0) == (ha < 0.0)) {
        a = mid;
        ha = h(mid);
      } else {
        b = mid;
      }
    }
    return 0.5 * (a + b);
  };

  std::vector<GainWindow> windows;
  bool inside = h(sample(0)) < 0.0;
  double open_at = inside ? sample(0) : 0.0;
  double prev = sample(0);
  for (int i = 1; i < grid.points; ++i) {
    const double w = sample(i);
    const bool now = h(w) < 0.0;
    if (now != inside) {
      const double edge = refine(prev, w);
      if (now)
        open_at = edge;
      else
        windows.push_back({open_at, edge});
      inside = now;
    }
    prev = w;
  }
  if (inside) windows.push_back({open_at, grid.hi});
  return windows;
}

double kk_check(const PermittivityModel& model, double xi,
                const QuadratureSpec& spec) {
  if (!(xi > 0.0)) throw std::invalid_argument("kk_check: xi must be > 0");
  if (model.oscillators().empty()) return 0.0;  // 0/0 guarded by convention

  const double direct = eval_permittivity_imag_axis(model, xi) -
                        model.background();

  std::vector<double> breakpoints{xi};
  double scale = xi;
  for (const auto& o : model.oscillators()) {
    scale = std::max(scale, o.omega0);
    for (double k : {-100.0, -30.0, -10.0, -3.0, -1.0, 0.0,
                     1.0, 3.0, 10.0, 30.0, 100.0}) {
      const double w = o.omega0 + k * o.gamma;
      if (w > 0.0) breakpoints.push_back(w);
    }
  }

  const auto f = [&](double w) {
    return w * im_permittivity(model, w) / (w * w + xi * xi);
  };
  const auto integral_part = integrate_semi_infinite(f, spec, scale,
                                                     breakpoints);
  const double integral = (2.0 / std::numbers::pi) * integral_part.value;

  const double denom = std::abs(direct);
  if (denom == 0.0) return std::abs(integral - direct);
  return std::abs(direct - integral) / denom;
}

AtomModel::AtomModel(std::vector<AtomTransition> transitions,
                     double linewidth_epsilon)
    : transitions_(std::move(transitions)),
      linewidth_epsilon_(linewidth_epsilon) {
  for (const auto& t : transitions_) {
    if (!(t.d2 >= 0.0))
      throw std::invalid_argument("AtomTransition: d2 must be >= 0");
    if (t.omega_kn == 0.0 || !std::isfinite(t.omega_kn))
      throw std::invalid_argument(
          "AtomTransition: omega_kn must be finite and nonzero");
  }
  if (linewidth_epsilon_ < 0.0)
    throw std::invalid_argument("AtomModel: linewidth_epsilon must be >= 0");
}

double AtomModel::regulator() const {
  if (linewidth_epsilon_ > 0.0) return linewidth_epsilon_;
  double wmin = std::numeric_limits<double>::infinity();
  for (const auto& t : transitions_) wmin = std::min(wmin, std::abs(t.omega_kn));
  return transitions_.empty() ? 0.0 : 1e-6 * wmin;
}

std::complex<double> polarizability(const AtomModel& atom,
                                    std::complex<double> omega,
                                    double epsilon) {
  const bool real_axis = omega.imag() == 0.0;
  const double reg = epsilon >= 0.0 ? epsilon
                                    : (real_axis ? atom.regulator() : 0.0);
  const std::complex<double> ieps(0.0, reg);
  std::complex<double> acc(0.0, 0.0);
  for (const auto& t : atom.transitions()) {
    if (real_axis && reg == 0.0) {
      const double dist = std::min(std::abs(omega.real() + t.omega_kn),
                                   std::abs(omega.real() - t.omega_kn));
      if (dist <= 1e-12 * std::abs(t.omega_kn))
        throw std::domain_error(
            "polarizability: unregulated evaluation at a transition pole");
    }
    acc += t.d2 / (omega + t.omega_kn + ieps) -
           t.d2 / (omega - t.omega_kn + ieps);
  }
  return acc / (3.0 * constants::hbar);
}

double polarizability_imag_axis(const AtomModel& atom, double xi) {
  if (!(xi >= 0.0))
    throw std::invalid_argument("polarizability_imag_axis: xi must be >= 0");
  double acc = 0.0;
  for (const auto& t : atom.transitions())
    acc += t.d2 * t.omega_kn / (t.omega_kn * t.omega_kn + xi * xi);
  return 2.0 * acc / (3.0 * constants::hbar);
}

std::vector<SharpLine> sharp_line_spectrum(const AtomModel& atom) {
  std::vector<SharpLine> lines;
  for (const auto& t : atom.transitions())
    if (t.omega_kn < 0.0)
      lines.push_back({-t.omega_kn,
                       std::numbers::pi * t.d2 / (3.0 * constants::hbar)});
  return lines;
}

std::complex<double> susceptibility_from_atoms(const AtomModel& atom,
                                               double eta,
                                               std::complex<double> omega) {
  if (!(eta >= 0.0))
    throw std::invalid_argument("susceptibility_from_atoms: eta must be >= 0");
  const std::complex<double> chi =
      eta * polarizability(atom, omega) / constants::eps0;
  if (std::abs(chi) > 1e-2)
    std::cerr << "casimir: warning: |chi| = " << std::abs(chi)
              << " > 1e-2; dilute-gas treatment is questionable\n";
  return chi;
}

}  // namespace casimir

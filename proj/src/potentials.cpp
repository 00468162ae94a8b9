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

#include "casimir/potentials.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "casimir/constants.hpp"

namespace casimir {

namespace {

constexpr double kPi = std::numbers::pi;

QuadratureSpec inner_spec(const QuadratureSpec& spec) {
  QuadratureSpec q = spec;
  q.rel_tol = std::max(spec.rel_tol * 0.02, 1e-14);
  q.abs_tol = 0.0;
  return q;
}

QuadratureSpec exp_tail(const QuadratureSpec& spec) {
  QuadratureSpec q = spec;
  q.tail_mapping = QuadratureSpec::TailMapping::Exp;
  return q;
}

std::vector<double> transition_breakpoints(const AtomModel& atom) {
  std::vector<double> bp;
  for (const auto& t : atom.transitions()) {
    bp.push_back(std::abs(t.omega_kn));
    bp.push_back(3.0 * std::abs(t.omega_kn));
  }
  return bp;
}

// Either the trace value or its z-derivative under the xi-integral.
ValueErr nonresonant_integral(const AtomModel& atom, const LayerStack& stack,
                              double z, const QuadratureSpec& spec,
                              bool derivative) {
  if (!(z > 0.0)) throw std::invalid_argument("cp_nonresonant: z must be > 0");
  if (atom.transitions().empty() || stack.vacuum_everywhere()) return {};
  const QuadratureSpec inner = inner_spec(spec);
  const auto f = [&](double xi) {
    const double a = polarizability_imag_axis(atom, xi);
    if (a == 0.0) return 0.0;
    const GreenTraceReal g = green_trace_imag_axis(stack, z, xi, inner);
    return xi * xi * a * (derivative ? g.dvalue_dz : g.value);
  };
  auto bp = transition_breakpoints(atom);
  bp.push_back(constants::c / (2.0 * z));
  const auto I = integrate_semi_infinite(f, exp_tail(spec),
                                         constants::c / (2.0 * z), bp);
  const double pref = constants::hbar * constants::mu0 / (2.0 * kPi);
  return {pref * I.value, pref * I.err};
}

}  // namespace

ValueErr cp_nonresonant(const AtomModel& atom, const LayerStack& stack,
                        double z, const QuadratureSpec& spec) {
  return nonresonant_integral(atom, stack, z, spec, false);
}

ValueErr cp_nonresonant_force(const AtomModel& atom, const LayerStack& stack,
                              double z, const QuadratureSpec& spec) {
  const ValueErr d = nonresonant_integral(atom, stack, z, spec, true);
  return {-d.value, d.err};
}

ValueErr cp_resonant(const AtomModel& atom, const LayerStack& stack, double z,
                     const QuadratureSpec& spec) {
  ValueErr u;
  const double pref = constants::hbar * constants::mu0 / kPi;
  for (const SharpLine& line : sharp_line_spectrum(atom)) {
    const GreenTrace g =
        green_trace(stack, z, {line.omega_nk, 0.0}, spec);
    const double w2 = line.omega_nk * line.omega_nk;
    u.value -= pref * w2 * line.weight * g.value.real();
    u.err += pref * w2 * line.weight * g.err;
  }
  return u;
}

ValueErr cp_resonant_force(const AtomModel& atom, const LayerStack& stack,
                           double z, const QuadratureSpec& spec) {
  ValueErr f;
  const double pref = constants::hbar * constants::mu0 / kPi;
  for (const SharpLine& line : sharp_line_spectrum(atom)) {
    const GreenTrace g =
        green_trace(stack, z, {line.omega_nk, 0.0}, spec);
    const double w2 = line.omega_nk * line.omega_nk;
    f.value += pref * w2 * line.weight * g.dvalue_dz.real();
    f.err += pref * w2 * line.weight * g.err_d;
  }
  return f;
}

ResonantProfile lorentzian_im_alpha(const AtomModel& atom, double gamma_a,
                                    double window_halfwidth) {
  if (!(gamma_a > 0.0))
    throw std::invalid_argument("lorentzian_im_alpha: gamma_a must be > 0");
  if (!(window_halfwidth > 0.0 && window_halfwidth < 1.0))
    throw std::invalid_argument(
        "lorentzian_im_alpha: window_halfwidth must lie in (0, 1)");
  const auto lines = sharp_line_spectrum(atom);
  ResonantProfile p;
  if (lines.empty()) {
    p.im_alpha = [](double) { return 0.0; };
    return p;
  }
  p.lo = lines.front().omega_nk;
  p.hi = lines.front().omega_nk;
  for (const auto& l : lines) {
    p.lo = std::min(p.lo, l.omega_nk * (1.0 - window_halfwidth));
    p.hi = std::max(p.hi, l.omega_nk * (1.0 + window_halfwidth));
    for (double k : {-100.0, -30.0, -10.0, -3.0, -1.0, 0.0,
                     1.0, 3.0, 10.0, 30.0, 100.0})
      p.breakpoints.push_back(l.omega_nk + k * gamma_a);
  }
  p.im_alpha = [lines, gamma_a](double omega) {
    double v = 0.0;
    for (const auto& l : lines) {
      const double x = omega - l.omega_nk;
      v -= l.weight * (gamma_a / kPi) / (x * x + gamma_a * gamma_a);
    }
    return v;
  };
  return p;
}

ValueErr cp_resonant_integral(const ResonantProfile& profile,
                              const LayerStack& stack, double z,
                              const QuadratureSpec& spec) {
  if (!profile.im_alpha) throw std::invalid_argument(
      "cp_resonant_integral: missing Im alpha profile");
  if (profile.hi <= profile.lo) return {};
  if (!(profile.lo >= 0.0))
    throw std::invalid_argument(
        "cp_resonant_integral: window must lie at positive frequencies");
  const QuadratureSpec inner = inner_spec(spec);
  const auto f = [&](double omega) {
    const double ia = profile.im_alpha(omega);
    if (ia > 0.0) return 0.0;  // emission part only
    if (ia == 0.0) return 0.0;
    const GreenTrace g = green_trace(stack, z, {omega, 0.0}, inner);
    return omega * omega * ia * g.value.real();
  };
  const auto I =
      integrate_window(f, profile.lo, profile.hi, spec, profile.breakpoints);
  const double pref = constants::hbar * constants::mu0 / kPi;
  return {pref * I.value, pref * I.err};
}

PotentialResult cp_total(const AtomModel& atom, const LayerStack& stack,
                         double z, const QuadratureSpec& spec) {
  PotentialResult r;
  r.z = z;
  const ValueErr nr = cp_nonresonant(atom, stack, z, spec);
  const ValueErr nf = cp_nonresonant_force(atom, stack, z, spec);
  const ValueErr rr = cp_resonant(atom, stack, z, spec);
  const ValueErr rf = cp_resonant_force(atom, stack, z, spec);
  r.u_nr = nr.value;
  r.err_nr = nr.err;
  r.u_r = rr.value;
  r.err_r = rr.err;
  r.u_total = r.u_nr + r.u_r;
  r.f_z = nf.value + rf.value;
  return r;
}

namespace {

ValueErr thermal_integral(const AtomModel& atom, const LayerStack& stack,
                          double z, double temperature,
                          const QuadratureSpec& spec, bool derivative) {
  if (!(z > 0.0))
    throw std::invalid_argument("cp_nonresonant_thermal: z must be > 0");
  if (atom.transitions().empty() || stack.vacuum_everywhere()) return {};
  const QuadratureSpec inner = inner_spec(spec);
  const auto f = [&](double xi) {
    if (xi == 0.0) {
      const StaticGreenTrace s = green_trace_static(stack, z, inner);
      return polarizability_imag_axis(atom, 0.0) *
             (derivative ? s.dvalue_dz : s.value);
    }
    const double a = polarizability_imag_axis(atom, xi);
    const GreenTraceReal g = green_trace_imag_axis(stack, z, xi, inner);
    return xi * xi * a * (derivative ? g.dvalue_dz : g.value);
  };
  const auto I = matsubara_sum(f, temperature, exp_tail(spec),
                               constants::c / (2.0 * z));
  const double pref = constants::hbar * constants::mu0 / (2.0 * kPi);
  return {pref * I.value, pref * I.err};
}

}  // namespace

ValueErr cp_nonresonant_thermal(const AtomModel& atom, const LayerStack& stack,
                                double z, double temperature,
                                const QuadratureSpec& spec) {
  if (temperature == 0.0) return cp_nonresonant(atom, stack, z, spec);
  return thermal_integral(atom, stack, z, temperature, spec, false);
}

ValueErr cp_nonresonant_thermal_force(const AtomModel& atom,
                                      const LayerStack& stack, double z,
                                      double temperature,
                                      const QuadratureSpec& spec) {
  if (temperature == 0.0) return cp_nonresonant_force(atom, stack, z, spec);
  const ValueErr d = thermal_integral(atom, stack, z, temperature, spec, true);
  return {-d.value, d.err};
}

}  // namespace casimir

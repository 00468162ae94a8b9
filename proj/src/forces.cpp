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

#include "casimir/forces.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>
#include <numbers>
#include <vector>

#include "casimir/constants.hpp"

namespace casimir {

namespace {

constexpr double kPi = std::numbers::pi;

void validate_slab(const DiluteSlab& slab) {
  if (!(slab.z_lo > 0.0) || !(slab.z_hi > slab.z_lo))
    throw std::invalid_argument("DiluteSlab: need 0 < z_lo < z_hi");
  if (!(slab.eta >= 0.0))
    throw std::invalid_argument("DiluteSlab: eta must be >= 0");
  if (slab.n_layers < 1)
    throw std::invalid_argument("DiluteSlab: n_layers must be >= 1");
  const double chi0 = slab.eta *
                      std::abs(polarizability_imag_axis(slab.atom, 0.0)) /
                      constants::eps0;
  if (chi0 > 1e-2)
    std::cerr << "casimir: warning: slab |chi(0)| = " << chi0
              << " > 1e-2; dilute-gas treatment is questionable\n";
}

using PotentialFn = ValueErr (*)(const AtomModel&, const LayerStack&, double,
                                 const QuadratureSpec&);

// -eta * [U(z_hi) - U(z_lo)] with the panel telescoping consistency check.
ValueErr endpoint_force(const DiluteSlab& slab, const LayerStack& stack,
                        const QuadratureSpec& spec, PotentialFn potential) {
  validate_slab(slab);
  if (slab.eta == 0.0) return {};
  const int n = slab.n_layers;
  const double dz = (slab.z_hi - slab.z_lo) / n;
  std::vector<ValueErr> u(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i)
    u[i] = potential(slab.atom, stack, slab.z_lo + i * dz, spec);
  const double endpoint = u[n].value - u[0].value;
  double panels = 0.0;
  for (int i = 0; i < n; ++i) panels += u[i + 1].value - u[i].value;
  const double mismatch = std::abs(panels - endpoint);
  if (mismatch > 1e-12 * std::max(std::abs(endpoint), 1e-300) + 1e-300)
    throw std::runtime_error(
        "dilute force: panel sum does not telescope to the endpoint "
        "difference");
  return {-slab.eta * endpoint, slab.eta * (u[n].err + u[0].err)};
}

}  // namespace

ValueErr force_nr_dilute(const DiluteSlab& slab, const LayerStack& stack,
                         const QuadratureSpec& spec) {
  return endpoint_force(slab, stack, spec, &cp_nonresonant);
}

ValueErr force_r_dilute(const DiluteSlab& slab, const LayerStack& stack,
                        const QuadratureSpec& spec) {
  return endpoint_force(slab, stack, spec, &cp_resonant);
}

ValueErr force_r_dilute_window(const DiluteSlab& slab, const LayerStack& stack,
                               double gamma_a, const QuadratureSpec& spec) {
  validate_slab(slab);
  if (slab.eta == 0.0) return {};
  if (sharp_line_spectrum(slab.atom).empty()) return {};
  const ResonantProfile profile = lorentzian_im_alpha(slab.atom, gamma_a);
  const ValueErr hi = cp_resonant_integral(profile, stack, slab.z_hi, spec);
  const ValueErr lo = cp_resonant_integral(profile, stack, slab.z_lo, spec);
  return {-slab.eta * (hi.value - lo.value), slab.eta * (hi.err + lo.err)};
}

ForceResult force_total_dilute(const DiluteSlab& slab, const LayerStack& stack,
                               const QuadratureSpec& spec) {
  ForceResult f;
  const ValueErr nr = force_nr_dilute(slab, stack, spec);
  const ValueErr r = force_r_dilute(slab, stack, spec);
  f.f_nr = nr.value;
  f.err_nr = nr.err;
  f.f_r = r.value;
  f.err_r = r.err;
  f.f_total = f.f_nr + f.f_r;
  return f;
}

AdditivityReport additivity_check(const DiluteSlab& slab,
                                  const LayerStack& stack,
                                  const QuadratureSpec& spec) {
  validate_slab(slab);
  AdditivityReport rep;
  rep.macro = force_total_dilute(slab, stack, spec);

  // Microscopic route: atoms on midpoint panels, per-atom force from the
  // analytic z-derivative under the integral/sum.
  const int n = slab.n_layers;
  const double dz = (slab.z_hi - slab.z_lo) / n;
  for (int i = 0; i < n; ++i) {
    const double zi = slab.z_lo + (i + 0.5) * dz;
    const ValueErr fnr = cp_nonresonant_force(slab.atom, stack, zi, spec);
    const ValueErr fr = cp_resonant_force(slab.atom, stack, zi, spec);
    rep.micro.f_nr += slab.eta * fnr.value * dz;
    rep.micro.err_nr += slab.eta * fnr.err * dz;
    rep.micro.f_r += slab.eta * fr.value * dz;
    rep.micro.err_r += slab.eta * fr.err * dz;
  }
  rep.micro.f_total = rep.micro.f_nr + rep.micro.f_r;

  const auto dev = [](double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
  };
  rep.dev_nr = dev(rep.macro.f_nr, rep.micro.f_nr);
  rep.dev_r = dev(rep.macro.f_r, rep.micro.f_r);
  rep.dev_total = dev(rep.macro.f_total, rep.micro.f_total);
  return rep;
}

namespace {

double plate_static_r(const Material& m, Polarization pol) {
  if (m.is_mirror()) return pol == Polarization::S ? -1.0 : 1.0;
  if (pol == Polarization::S) return 0.0;
  const double e0 = eval_permittivity_imag_axis(m.eps, 0.0);
  return (e0 - 1.0) / (e0 + 1.0);
}

}  // namespace

ValueErr lifshitz_two_plates(const Material& mat_a, const Material& mat_b,
                             double gap, double temperature,
                             const QuadratureSpec& spec) {
  if (!(gap > 0.0))
    throw std::invalid_argument("lifshitz_two_plates: gap must be > 0");
  if (temperature < 0.0)
    throw std::invalid_argument("lifshitz_two_plates: temperature must be >= 0");

  const LayerStack plate_a =
      LayerStack::half_space(std::make_shared<const Material>(mat_a));
  const LayerStack plate_b =
      LayerStack::half_space(std::make_shared<const Material>(mat_b));

  QuadratureSpec inner = spec;
  inner.rel_tol = std::max(spec.rel_tol * 0.05, 1e-14);
  inner.abs_tol = 0.0;
  inner.tail_mapping = QuadratureSpec::TailMapping::Exp;

  const auto mode_sum = [&](double rsa, double rsb, double rpa, double rpb,
                            double kappa, double xi) {
    double acc = 0.0;
    for (const double R : {rsa * rsb, rpa * rpb}) {
      const double e = R * std::exp(-2.0 * kappa * gap);
      if (e >= 1.0 - 1e-12)
        throw DivergenceError(
            "lifshitz_two_plates: scattering denominator vanished at gap=" +
                std::to_string(gap) + " m, xi=" + std::to_string(xi) +
                " rad/s, kappa=" + std::to_string(kappa) + " 1/m",
            0.0, std::numeric_limits<double>::infinity());
      acc += e / (1.0 - e);
    }
    return acc;
  };

  // kappa-integral at one imaginary frequency.
  const auto g = [&](double xi) {
    if (xi == 0.0) {
      const double rsa = plate_static_r(mat_a, Polarization::S);
      const double rsb = plate_static_r(mat_b, Polarization::S);
      const double rpa = plate_static_r(mat_a, Polarization::P);
      const double rpb = plate_static_r(mat_b, Polarization::P);
      const auto f0 = [&](double kappa) {
        return kappa * kappa * mode_sum(rsa, rsb, rpa, rpb, kappa, 0.0);
      };
      return integrate_semi_infinite(f0, inner, 1.0 / (2.0 * gap)).value;
    }
    const std::complex<double> iomega(0.0, xi);
    const double kappa0 = xi / constants::c;
    const auto f = [&](double t) {
      const double kappa = kappa0 + t;
      const double kpar =
          std::sqrt(std::max(kappa * kappa - kappa0 * kappa0, 0.0));
      const double rsa =
          fresnel_reflection(plate_a, Polarization::S, iomega, kpar).real();
      const double rsb =
          fresnel_reflection(plate_b, Polarization::S, iomega, kpar).real();
      const double rpa =
          fresnel_reflection(plate_a, Polarization::P, iomega, kpar).real();
      const double rpb =
          fresnel_reflection(plate_b, Polarization::P, iomega, kpar).real();
      return kappa * kappa * mode_sum(rsa, rsb, rpa, rpb, kappa, xi);
    };
    return integrate_semi_infinite(f, inner, 1.0 / (2.0 * gap)).value;
  };

  QuadratureSpec outer = spec;
  outer.tail_mapping = QuadratureSpec::TailMapping::Exp;
  std::vector<double> bp{constants::c / (2.0 * gap)};
  for (const Material* m : {&mat_a, &mat_b})
    if (!m->is_mirror())
      for (const auto& o : m->eps.oscillators()) bp.push_back(o.omega0);

  IntegralResult I;
  if (temperature == 0.0) {
    I = integrate_semi_infinite(g, outer, constants::c / (2.0 * gap), bp);
  } else {
    I = matsubara_sum(g, temperature, outer, constants::c / (2.0 * gap));
  }
  const double pref = -constants::hbar / (2.0 * kPi * kPi);
  return {pref * I.value, std::abs(pref) * I.err};
}

}  // namespace casimir

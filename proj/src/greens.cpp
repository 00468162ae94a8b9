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

#include "casimir/greens.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "casimir/constants.hpp"

namespace casimir {

namespace {

using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;

// Decaying-wave branch: Im k_z >= 0 in every layer; for real k_z, Re k_z >= 0.
cd branch_kz(cd kz2) {
  cd kz = std::sqrt(kz2);
  if (kz.imag() < 0.0) kz = -kz;
  return kz;
}

cd interface_r(Polarization pol, cd eps_i, cd kz_i, cd eps_j, cd kz_j) {
  if (pol == Polarization::S) return (kz_i - kz_j) / (kz_i + kz_j);
  return (eps_j * kz_i - eps_i * kz_j) / (eps_j * kz_i + eps_i * kz_j);
}

// Permittivities of all regions at one frequency, probe region first.
struct StackEval {
  cd k02;                   // omega^2 / c^2
  std::vector<cd> eps;      // regions 0..L (+ substrate unless mirror)
  std::vector<double> d;    // thicknesses of interior layers (regions 1..L)
  bool below_mirror = false;

  StackEval(const LayerStack& s, cd omega)
      : below_mirror(s.below()->is_mirror()) {
    const cd k0 = omega / constants::c;
    k02 = k0 * k0;
    eps.reserve(s.layers().size() + 2);
    eps.push_back(eval_permittivity(s.above()->eps, omega));
    for (const Layer& l : s.layers()) {
      eps.push_back(eval_permittivity(l.material->eps, omega));
      d.push_back(l.thickness);
    }
    if (!below_mirror) eps.push_back(eval_permittivity(s.below()->eps, omega));
  }
};

// Reflection seen from the probe region, recursion from the deepest interface
// upwards. kpar2 may be complex (analytic continuation in the k-plane is not
// used, but the propagating/evanescent substitutions pass exact real values).
cd stack_reflection(const StackEval& se, Polarization pol, cd kpar2) {
  const std::size_t L = se.d.size();
  cd r;
  if (se.below_mirror) {
    r = (pol == Polarization::S) ? cd(-1.0, 0.0) : cd(1.0, 0.0);
  } else {
    const cd kz_a = branch_kz(se.eps[L] * se.k02 - kpar2);
    const cd kz_b = branch_kz(se.eps[L + 1] * se.k02 - kpar2);
    r = interface_r(pol, se.eps[L], kz_a, se.eps[L + 1], kz_b);
  }
  for (std::size_t j = L; j-- > 0;) {
    const cd kz_hi = branch_kz(se.eps[j] * se.k02 - kpar2);
    const cd kz_lo = branch_kz(se.eps[j + 1] * se.k02 - kpar2);
    const cd phase = std::exp(cd(0.0, 2.0) * kz_lo * se.d[j]);
    const cd rj = interface_r(pol, se.eps[j], kz_hi, se.eps[j + 1], kz_lo);
    r = (rj + r * phase) / (cd(1.0, 0.0) + rj * r * phase);
  }
  return r;
}

// Magnitude scale of |Tr G1| used for absolute-tolerance floors; the perfect
// mirror bounds every stack at the same (z, omega).
double trace_scale(double z, double k0_abs) {
  const double x = std::max(k0_abs * z, 1e-30);
  return (1.0 / (8.0 * kPi * z)) * (2.0 + 2.0 / x + 1.0 / (x * x));
}

QuadratureSpec with_floor(const QuadratureSpec& spec, double magnitude) {
  QuadratureSpec q = spec;
  q.abs_tol = std::max(spec.abs_tol, 0.1 * spec.rel_tol * magnitude);
  return q;
}

QuadratureSpec exp_tail(const QuadratureSpec& spec) {
  QuadratureSpec q = spec;
  q.tail_mapping = QuadratureSpec::TailMapping::Exp;
  return q;
}

std::string format_omega(cd omega) {
  std::ostringstream os;
  os << "(" << omega.real() << "," << omega.imag() << ") rad/s";
  return os.str();
}

GreenTrace green_real_axis(const LayerStack& stack, double z, double omega,
                           const QuadratureSpec& spec) {
  const StackEval se(stack, cd(omega, 0.0));
  const double k0 = omega / constants::c;
  double max_r = 0.0;

  const auto B = [&](cd kpar2, cd kz02) {
    const cd rs = stack_reflection(se, Polarization::S, kpar2);
    const cd rp = stack_reflection(se, Polarization::P, kpar2);
    max_r = std::max({max_r, std::abs(rs), std::abs(rp)});
    return 2.0 * rs + (2.0 / se.k02) * (kpar2 - kz02) * rp;
  };

  // Propagating segment, substituted to u = k_z in [0, k0]; the integrand
  // oscillates as exp(2iuz) with no endpoint singularity.
  const auto prop_v = [&](double u) {
    return std::exp(cd(0.0, 2.0 * u * z)) * B(cd(k0 * k0 - u * u, 0.0),
                                              cd(u * u, 0.0));
  };
  const auto prop_d = [&](double u) {
    return cd(0.0, 2.0 * u) * prop_v(u);
  };
  // Evanescent tail, substituted to v with k_z = i v; damped as exp(-2vz).
  const auto evan_v = [&](double v) {
    return cd(0.0, -1.0) * std::exp(-2.0 * v * z) *
           B(cd(k0 * k0 + v * v, 0.0), cd(-v * v, 0.0));
  };
  const auto evan_d = [&](double v) { return -2.0 * v * evan_v(v); };

  const double scale8 = 8.0 * kPi * trace_scale(z, k0);
  const double dscale = 2.0 * std::max(k0, 1.0 / z);
  const QuadratureSpec qv = with_floor(spec, scale8);
  const QuadratureSpec qd = with_floor(spec, scale8 * dscale);

  const auto osc = oscillation_breakpoints(0.0, k0, kPi / (2.0 * z));

  GreenTrace g;
  g.omega = cd(omega, 0.0);
  try {
    const auto pv = integrate_window(prop_v, 0.0, k0, qv, osc);
    const auto ev =
        integrate_semi_infinite(evan_v, exp_tail(qv), 1.0 / (2.0 * z), {k0});
    const auto pd = integrate_window(prop_d, 0.0, k0, qd, osc);
    const auto ed =
        integrate_semi_infinite(evan_d, exp_tail(qd), 1.0 / (2.0 * z), {k0});
    const cd pref(0.0, 1.0 / (8.0 * kPi));
    g.value = pref * (pv.value + ev.value);
    g.err = (pv.err + ev.err) / (8.0 * kPi);
    g.dvalue_dz = pref * (pd.value + ed.value);
    g.err_d = (pd.err + ed.err) / (8.0 * kPi);
  } catch (const QuadratureError& e) {
    throw DivergenceError(
        "green_trace: k-integral did not converge at omega=" +
            format_omega(g.omega) + ", z=" + std::to_string(z) +
            " m (possible gain instability); partial value attached",
        e.best_value * cd(0.0, 1.0 / (8.0 * kPi)),
        e.err_estimate / (8.0 * kPi));
  }
  g.gain_reflection = max_r > 1.0 + 1e-9;
  return g;
}

GreenTrace green_complex(const LayerStack& stack, double z, cd omega,
                         const QuadratureSpec& spec) {
  const StackEval se(stack, omega);
  const double k0_abs = std::abs(omega) / constants::c;
  double max_r = 0.0;

  const auto B = [&](cd kpar2, cd kz02) {
    const cd rs = stack_reflection(se, Polarization::S, kpar2);
    const cd rp = stack_reflection(se, Polarization::P, kpar2);
    max_r = std::max({max_r, std::abs(rs), std::abs(rp)});
    return 2.0 * rs + (2.0 / se.k02) * (kpar2 - kz02) * rp;
  };
  const auto f = [&](double kpar, cd extra) {
    const cd kpar2(kpar * kpar, 0.0);
    const cd kz0 = branch_kz(se.k02 - kpar2);
    return (kpar / kz0) * extra * std::exp(cd(0.0, 2.0) * kz0 * z) *
           B(kpar2, kz0 * kz0);
  };
  const auto fv = [&](double kpar) { return f(kpar, cd(1.0, 0.0)); };
  const auto fd = [&](double kpar) {
    const cd kz0 = branch_kz(se.k02 - cd(kpar * kpar, 0.0));
    return f(kpar, cd(0.0, 2.0) * kz0);
  };

  const double K1 = 4.0 * k0_abs;
  auto bp = oscillation_breakpoints(0.0, K1, kPi / (2.0 * z));
  for (double s : {0.5, 1.0, 1.5, 2.0}) bp.push_back(s * k0_abs);

  const double scale8 = 8.0 * kPi * trace_scale(z, k0_abs);
  const double dscale = 2.0 * std::max(k0_abs, 1.0 / z);
  const QuadratureSpec qv = with_floor(spec, scale8);
  const QuadratureSpec qd = with_floor(spec, scale8 * dscale);

  GreenTrace g;
  g.omega = omega;
  try {
    const auto nv = integrate_window(fv, 0.0, K1, qv, bp);
    const auto tv = integrate_semi_infinite(
        [&](double t) { return fv(K1 + t); }, exp_tail(qv), 1.0 / (2.0 * z));
    const auto nd = integrate_window(fd, 0.0, K1, qd, bp);
    const auto td = integrate_semi_infinite(
        [&](double t) { return fd(K1 + t); }, exp_tail(qd), 1.0 / (2.0 * z));
    const cd pref(0.0, 1.0 / (8.0 * kPi));
    g.value = pref * (nv.value + tv.value);
    g.err = (nv.err + tv.err) / (8.0 * kPi);
    g.dvalue_dz = pref * (nd.value + td.value);
    g.err_d = (nd.err + td.err) / (8.0 * kPi);
  } catch (const QuadratureError& e) {
    throw DivergenceError(
        "green_trace: k-integral did not converge at omega=" +
            format_omega(omega) + ", z=" + std::to_string(z) + " m",
        e.best_value * cd(0.0, 1.0 / (8.0 * kPi)),
        e.err_estimate / (8.0 * kPi));
  }
  g.gain_reflection = max_r > 1.0 + 1e-9;
  return g;
}

}  // namespace

LayerStack::LayerStack(MaterialPtr below, std::vector<Layer> layers,
                       MaterialPtr above, bool allow_gain)
    : below_(std::move(below)),
      above_(std::move(above)),
      layers_(std::move(layers)),
      allow_gain_(allow_gain) {
  if (!below_ || !above_)
    throw std::invalid_argument("LayerStack: null outer region");
  if (above_->is_mirror())
    throw std::invalid_argument(
        "LayerStack: the probe region cannot be a mirror");
  for (const Layer& l : layers_) {
    if (!l.material)
      throw std::invalid_argument("LayerStack: null layer material");
    if (l.material->is_mirror())
      throw std::invalid_argument(
          "LayerStack: a mirror is only allowed as the substrate");
    if (!(l.thickness > 0.0) || !std::isfinite(l.thickness))
      throw std::invalid_argument("LayerStack: layer thickness must be > 0");
  }
}

bool LayerStack::vacuum_everywhere() const {
  if (!below_->is_vacuum() || !above_->is_vacuum()) return false;
  for (const Layer& l : layers_)
    if (!l.material->is_vacuum()) return false;
  return true;
}

bool LayerStack::amplifying_at(double omega) const {
  const auto gains = [&](const MaterialPtr& m) {
    return !m->is_mirror() && im_permittivity(m->eps, omega) < 0.0;
  };
  if (gains(below_) || gains(above_)) return true;
  for (const Layer& l : layers_)
    if (gains(l.material)) return true;
  return false;
}

LayerStack LayerStack::half_space(MaterialPtr below, bool allow_gain) {
  return LayerStack(std::move(below), {},
                    std::make_shared<const Material>(Material::vacuum()),
                    allow_gain);
}

std::complex<double> fresnel_reflection(const LayerStack& stack,
                                        Polarization pol,
                                        std::complex<double> omega,
                                        double kpar) {
  if (!(kpar >= 0.0))
    throw std::invalid_argument("fresnel_reflection: kpar must be >= 0");
  if (omega == cd(0.0, 0.0) || omega.imag() < 0.0)
    throw std::invalid_argument(
        "fresnel_reflection: omega must be nonzero with Im omega >= 0");
  const StackEval se(stack, omega);
  return stack_reflection(se, pol, cd(kpar * kpar, 0.0));
}

GreenTrace green_trace(const LayerStack& stack, double z,
                       std::complex<double> omega,
                       const QuadratureSpec& spec) {
  if (!(z > 0.0)) throw std::invalid_argument("green_trace: z must be > 0");
  if (!stack.probe_region_vacuum())
    throw std::invalid_argument("green_trace: probe region must be vacuum");
  if (omega == cd(0.0, 0.0))
    throw std::invalid_argument("green_trace: omega must be nonzero");
  if (omega.imag() < 0.0)
    throw std::invalid_argument(
        "green_trace: omega must lie in the closed upper half plane");
  if (stack.vacuum_everywhere()) {
    GreenTrace g;
    g.omega = omega;
    return g;
  }
  if (omega.imag() == 0.0) {
    if (!(omega.real() > 0.0))
      throw std::invalid_argument(
          "green_trace: real-axis evaluation needs omega > 0");
    if (!stack.allow_gain() && stack.amplifying_at(omega.real()))
      throw std::domain_error(
          "green_trace: stack is amplifying at omega=" +
          std::to_string(omega.real()) +
          " rad/s; construct the stack with allow_gain to proceed");
    return green_real_axis(stack, z, omega.real(), spec);
  }
  if (omega.real() == 0.0) {
    const GreenTraceReal gr = green_trace_imag_axis(stack, z, omega.imag(),
                                                    spec);
    GreenTrace g;
    g.value = cd(gr.value, 0.0);
    g.dvalue_dz = cd(gr.dvalue_dz, 0.0);
    g.err = gr.err;
    g.err_d = gr.err_d;
    g.omega = omega;
    return g;
  }
  return green_complex(stack, z, omega, spec);
}

GreenTraceReal green_trace_imag_axis(
    const LayerStack& stack, double z, double xi, const QuadratureSpec& spec,
    const std::vector<double>& extra_breakpoints) {
  if (!(z > 0.0))
    throw std::invalid_argument("green_trace_imag_axis: z must be > 0");
  if (!(xi > 0.0))
    throw std::invalid_argument("green_trace_imag_axis: xi must be > 0");
  if (!stack.probe_region_vacuum())
    throw std::invalid_argument(
        "green_trace_imag_axis: probe region must be vacuum");

  GreenTraceReal g;
  g.xi = xi;
  if (stack.vacuum_everywhere()) return g;

  const StackEval se(stack, cd(0.0, xi));
  const double kappa0 = xi / constants::c;
  const double c2_xi2 = constants::c * constants::c / (xi * xi);

  // Integrand over the vacuum decay constant kappa in [kappa0, inf); the
  // coefficients are real on the imaginary axis for eps(i xi) >= 0.
  const auto poly = [&](double kappa) {
    const cd kpar2(kappa * kappa - kappa0 * kappa0, 0.0);
    const cd rs = stack_reflection(se, Polarization::S, kpar2);
    const cd rp = stack_reflection(se, Polarization::P, kpar2);
    return (rs - (2.0 * kappa * kappa * c2_xi2 - 1.0) * rp).real();
  };
  const auto fv = [&](double t) {
    const double kappa = kappa0 + t;
    return std::exp(-2.0 * kappa * z) * poly(kappa);
  };
  const auto fd = [&](double t) {
    const double kappa = kappa0 + t;
    return -2.0 * kappa * std::exp(-2.0 * kappa * z) * poly(kappa);
  };

  const double x = xi * z / constants::c;
  const double mag = constants::c * constants::c /
                     (8.0 * kPi * xi * xi * z * z * z) *
                     std::exp(-2.0 * x) * (1.0 + 2.0 * x + 2.0 * x * x);
  const QuadratureSpec qv = with_floor(spec, 4.0 * kPi * mag);
  const QuadratureSpec qd =
      with_floor(spec, 4.0 * kPi * mag * 2.0 * (kappa0 + 1.0 / z));

  std::vector<double> bp{0.5 / z, 1.0 / z, kappa0};
  for (double b : extra_breakpoints) bp.push_back(b - kappa0);

  try {
    const auto v =
        integrate_semi_infinite(fv, exp_tail(qv), 1.0 / (2.0 * z), bp);
    const auto d =
        integrate_semi_infinite(fd, exp_tail(qd), 1.0 / (2.0 * z), bp);
    g.value = v.value / (4.0 * kPi);
    g.err = v.err / (4.0 * kPi);
    g.dvalue_dz = d.value / (4.0 * kPi);
    g.err_d = d.err / (4.0 * kPi);
  } catch (const QuadratureError& e) {
    throw DivergenceError(
        "green_trace_imag_axis: k-integral did not converge at xi=" +
            std::to_string(xi) + " rad/s, z=" + std::to_string(z) + " m",
        e.best_value / (4.0 * kPi), e.err_estimate / (4.0 * kPi));
  }
  return g;
}

StaticGreenTrace green_trace_static(const LayerStack& stack, double z,
                                    const QuadratureSpec& spec) {
  if (!(z > 0.0))
    throw std::invalid_argument("green_trace_static: z must be > 0");
  if (!stack.probe_region_vacuum())
    throw std::invalid_argument(
        "green_trace_static: probe region must be vacuum");
  StaticGreenTrace g;
  if (stack.vacuum_everywhere()) return g;

  // At xi -> 0 all k_z collapse to i kappa; only the p-polarised reflection
  // survives the xi^2 scaling.
  const StackEval se(stack, cd(0.0, 0.0));
  const auto rp0 = [&](double kappa) {
    return stack_reflection(se, Polarization::P, cd(kappa * kappa, 0.0))
        .real();
  };
  const auto fv = [&](double kappa) {
    return kappa * kappa * std::exp(-2.0 * kappa * z) * rp0(kappa);
  };
  const auto fd = [&](double kappa) {
    return kappa * kappa * kappa * std::exp(-2.0 * kappa * z) * rp0(kappa);
  };

  const double c2 = constants::c * constants::c;
  const double mag = c2 / (8.0 * kPi * z * z * z);
  const QuadratureSpec qv = with_floor(spec, mag * 2.0 * kPi / c2);
  const QuadratureSpec qd = with_floor(spec, mag * kPi / c2 / z);

  try {
    const auto v = integrate_semi_infinite(fv, exp_tail(qv), 1.0 / (2.0 * z));
    const auto d = integrate_semi_infinite(fd, exp_tail(qd), 1.0 / (2.0 * z));
    g.value = -c2 / (2.0 * kPi) * v.value;
    g.err = c2 / (2.0 * kPi) * v.err;
    g.dvalue_dz = c2 / kPi * d.value;
  } catch (const QuadratureError& e) {
    throw DivergenceError(
        "green_trace_static: k-integral did not converge at z=" +
            std::to_string(z) + " m",
        e.best_value * (-c2 / (2.0 * kPi)), e.err_estimate * c2 / (2.0 * kPi));
  }
  return g;
}

}  // namespace casimir

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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <memory>
#include <numbers>

#include "casimir/constants.hpp"
#include "casimir/greens.hpp"
#include "oracles.hpp"

using namespace casimir;
namespace K = casimir::constants;
using cd = std::complex<double>;

namespace {

MaterialPtr make_mat(Material m) {
  return std::make_shared<const Material>(std::move(m));
}

LayerStack mirror_stack() {
  return LayerStack::half_space(make_mat(Material::perfect_mirror()));
}

LayerStack absorber_stack() {
  return LayerStack::half_space(make_mat(
      Material::dielectric(PermittivityModel({{1e16, 5e15, 1e14, false}}))));
}

LayerStack gain_stack(bool allow) {
  return LayerStack::half_space(
      make_mat(Material::dielectric(
          PermittivityModel({{1e16, 5e15, 1e14, true}}))),
      allow);
}

QuadratureSpec tight() {
  QuadratureSpec q;
  q.rel_tol = 1e-12;
  return q;
}

}  // namespace

TEST_CASE("fresnel: vacuum everywhere reflects nothing") {
  const LayerStack vac = LayerStack::half_space(make_mat(Material::vacuum()));
  for (double kpar : {0.0, 1e7, 1e9}) {
    CHECK(std::abs(fresnel_reflection(vac, Polarization::S, {1e16, 0.0},
                                      kpar)) == 0.0);
    CHECK(std::abs(fresnel_reflection(vac, Polarization::P, {1e16, 0.0},
                                      kpar)) == 0.0);
  }
}

TEST_CASE("fresnel: huge-eps substrate approaches the mirror values") {
  const LayerStack big = LayerStack::half_space(
      make_mat(Material::dielectric(PermittivityModel({}, 1e10))));
  const LayerStack mir = mirror_stack();
  for (double kpar : {0.0, 1e7, 5e7, 1e9}) {
    const cd rs = fresnel_reflection(big, Polarization::S, {1e16, 0.0}, kpar);
    const cd rp = fresnel_reflection(big, Polarization::P, {1e16, 0.0}, kpar);
    CHECK(std::abs(rs - cd(-1.0, 0.0)) < 1e-3);
    CHECK(std::abs(rp - cd(1.0, 0.0)) < 1e-3);
    CHECK(fresnel_reflection(mir, Polarization::S, {1e16, 0.0}, kpar) ==
          cd(-1.0, 0.0));
    CHECK(fresnel_reflection(mir, Polarization::P, {1e16, 0.0}, kpar) ==
          cd(1.0, 0.0));
  }
}

TEST_CASE("fresnel: single film equals the explicit Airy summation") {
  const PermittivityModel film_eps({{2e16, 8e15, 5e14, false}}, 2.0);
  const PermittivityModel sub_eps({{1e16, 5e15, 1e14, false}});
  const double d = 40e-9;
  const LayerStack stack(
      make_mat(Material::dielectric(sub_eps)),
      {{make_mat(Material::dielectric(film_eps)), d}},
      make_mat(Material::vacuum()));
  for (double omega : {6e15, 1.3e16}) {
    for (double kpar : {0.0, 1e7, 4e7, 2e8}) {
      const cd e1 = eval_permittivity(film_eps, {omega, 0.0});
      const cd e2 = eval_permittivity(sub_eps, {omega, 0.0});
      for (bool s_pol : {true, false}) {
        const cd lib = fresnel_reflection(
            stack, s_pol ? Polarization::S : Polarization::P, {omega, 0.0},
            kpar);
        const cd airy = oracles::airy_film_reflection(
            cd(1.0, 0.0), e1, e2, d, s_pol, omega, kpar);
        CHECK(std::abs(lib - airy) < 1e-12 * std::max(1.0, std::abs(airy)));
      }
    }
  }
}

TEST_CASE("green trace: vacuum stack vanishes identically") {
  const LayerStack vac = LayerStack::half_space(make_mat(Material::vacuum()));
  const GreenTrace g = green_trace(vac, 1e-8, {1e16, 0.0});
  CHECK(g.value == cd(0.0, 0.0));
  CHECK(g.dvalue_dz == cd(0.0, 0.0));
  CHECK(green_trace_imag_axis(vac, 1e-8, 1e15).value == 0.0);
}

TEST_CASE("green trace: perfect mirror on the imaginary axis matches the closed form") {
  const LayerStack mir = mirror_stack();
  for (double zf : {0.01, 0.3, 1.0, 10.0}) {
    const double z = zf * K::c / 1e16;
    for (double xi : {1e15, 7e15, 3e16}) {
      const GreenTraceReal g = green_trace_imag_axis(mir, z, xi, tight());
      const double ref = oracles::mirror_trace_imag_axis(z, xi);
      CHECK(std::abs(g.value - ref) < 1e-10 * std::abs(ref));
      const double refd = oracles::mirror_trace_imag_axis_dz(z, xi);
      CHECK(std::abs(g.dvalue_dz - refd) < 1e-9 * std::abs(refd));
    }
  }
}

TEST_CASE("green trace: perfect mirror on the real axis matches the closed form") {
  const LayerStack mir = mirror_stack();
  for (double zf : {0.05, 1.0, 15.0}) {
    const double om = 1e16;
    const double z = zf * K::c / om;
    const GreenTrace g = green_trace(mir, z, {om, 0.0}, tight());
    const cd ref = oracles::mirror_trace_real_axis(z, om);
    CHECK(std::abs(g.value - ref) < 1e-9 * std::abs(ref));
  }
}

TEST_CASE("green trace: Schwarz reflection for an absorbing stack") {
  const LayerStack stack = absorber_stack();
  const double z = 5e-8;
  for (const cd omega : {cd(8e15, 2e15), cd(1.2e16, 5e15)}) {
    const GreenTrace gp = green_trace(stack, z, omega);
    const GreenTrace gm = green_trace(stack, z, -std::conj(omega));
    CHECK(std::abs(gm.value - std::conj(gp.value)) <
          1e-7 * std::abs(gp.value));
  }
}

TEST_CASE("green trace: quadrature-path independence under extra splits") {
  const LayerStack stack = absorber_stack();
  const double z = 3e-8, xi = 8e15;
  const GreenTraceReal base = green_trace_imag_axis(stack, z, xi, tight());
  for (const std::vector<double> splits :
       {std::vector<double>{5e7}, std::vector<double>{3.3e7, 1.7e8, 9e8}}) {
    const GreenTraceReal split =
        green_trace_imag_axis(stack, z, xi, tight(), splits);
    CHECK(std::abs(split.value - base.value) < 1e-12 * std::abs(base.value));
  }
}

TEST_CASE("green trace: s/p assembly order does not matter") {
  // Assemble the kappa-integral from the public reflection coefficients,
  // summing polarizations in both orders, and compare with the library path.
  const LayerStack stack = absorber_stack();
  const double z = 3e-8, xi = 8e15;
  const double kappa0 = xi / K::c;
  const double c2_xi2 = K::c * K::c / (xi * xi);
  QuadratureSpec q = tight();
  q.tail_mapping = QuadratureSpec::TailMapping::Exp;
  const auto term = [&](double t, Polarization pol) {
    const double kappa = kappa0 + t;
    const double kpar =
        std::sqrt(std::max(kappa * kappa - kappa0 * kappa0, 0.0));
    const double r =
        fresnel_reflection(stack, pol, {0.0, xi}, kpar).real();
    const double weight =
        pol == Polarization::S ? 1.0 : -(2.0 * kappa * kappa * c2_xi2 - 1.0);
    return std::exp(-2.0 * kappa * z) * weight * r;
  };
  const auto s_first = [&](double t) {
    return term(t, Polarization::S) + term(t, Polarization::P);
  };
  const auto p_first = [&](double t) {
    return term(t, Polarization::P) + term(t, Polarization::S);
  };
  const double pref = 1.0 / (4.0 * std::numbers::pi);
  const double a =
      pref * integrate_semi_infinite(s_first, q, 1.0 / (2.0 * z)).value;
  const double b =
      pref * integrate_semi_infinite(p_first, q, 1.0 / (2.0 * z)).value;
  CHECK(std::abs(a - b) <= 1e-12 * std::abs(a));
  const GreenTraceReal lib = green_trace_imag_axis(stack, z, xi, tight());
  CHECK(std::abs(a - lib.value) < 1e-9 * std::abs(lib.value));
}

TEST_CASE("green trace: substrate sign on the imaginary axis follows eps(i xi) - 1") {
  for (double z : {3e-9, 3e-8, 3e-7}) {
    for (double xi : {1e15, 1e16}) {
      CHECK(green_trace_imag_axis(absorber_stack(), z, xi).value < 0.0);
      CHECK(green_trace_imag_axis(gain_stack(false), z, xi).value > 0.0);
    }
  }
}

TEST_CASE("green trace: finite substrates stay below the mirror bound") {
  const LayerStack mir = mirror_stack();
  for (const LayerStack& stack : {absorber_stack(), gain_stack(false)}) {
    for (double z : {3e-9, 3e-8, 3e-7}) {
      for (double xi : {1e15, 1e16, 5e16}) {
        const double v = std::abs(green_trace_imag_axis(stack, z, xi).value);
        const double m = std::abs(green_trace_imag_axis(mir, z, xi).value);
        CHECK(v <= m * (1.0 + 1e-9));
      }
    }
  }
}

TEST_CASE("green trace: imaginary-axis decay envelope is bounded") {
  const LayerStack stack = absorber_stack();
  const double z = 3e-8;
  double prev = 0.0;
  bool first = true;
  for (double xif = 1.0; xif <= 64.0; xif *= 2.0) {
    const double xi = xif * K::c / z;
    const double q = std::abs(green_trace_imag_axis(stack, z, xi).value) *
                     std::exp(2.0 * xi * z / K::c);
    if (!first) CHECK(q <= prev * 1.01);
    prev = q;
    first = false;
  }
}

TEST_CASE("green trace: analytic derivative agrees with central differences") {
  QuadratureSpec q;
  q.rel_tol = 1e-11;
  for (const LayerStack& stack : {mirror_stack(), absorber_stack()}) {
    for (double z : {5e-9, 5e-8}) {
      const double h = z * 1e-4;
      {
        const double xi = 9e15;
        const GreenTraceReal g = green_trace_imag_axis(stack, z, xi, q);
        const double fd = (green_trace_imag_axis(stack, z + h, xi, q).value -
                           green_trace_imag_axis(stack, z - h, xi, q).value) /
                          (2.0 * h);
        CHECK(std::abs(g.dvalue_dz - fd) < 1e-6 * std::abs(fd));
      }
      {
        const double om = 9e15;
        const GreenTrace g = green_trace(stack, z, {om, 0.0}, q);
        const cd fd = (green_trace(stack, z + h, {om, 0.0}, q).value -
                       green_trace(stack, z - h, {om, 0.0}, q).value) /
                      (2.0 * h);
        CHECK(std::abs(g.dvalue_dz - fd) < 1e-6 * std::abs(fd));
      }
    }
  }
}

TEST_CASE("green trace: retarded mirror oscillation has spatial period pi c / omega") {
  const LayerStack mir = mirror_stack();
  const double om = 1e16;
  const double unit = K::c / om;
  // zero crossings of Re Tr G1 over a retarded window
  std::vector<double> zeros;
  double prev_z = 30.0 * unit;
  double prev_v = green_trace(mir, prev_z, {om, 0.0}).value.real();
  for (double z = prev_z + 0.02 * unit; z < 45.0 * unit; z += 0.02 * unit) {
    const double v = green_trace(mir, z, {om, 0.0}).value.real();
    if ((v < 0.0) != (prev_v < 0.0)) {
      double a = prev_z, b = z, fa = prev_v;
      for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (a + b);
        const double fm = green_trace(mir, mid, {om, 0.0}).value.real();
        if ((fm < 0.0) == (fa < 0.0)) {
          a = mid;
          fa = fm;
        } else {
          b = mid;
        }
      }
      zeros.push_back(0.5 * (a + b));
    }
    prev_z = z;
    prev_v = v;
  }
  REQUIRE(zeros.size() >= 4);
  // successive zeros are half a period apart
  const double period_ref = std::numbers::pi * K::c / om;
  for (std::size_t i = 2; i < zeros.size(); ++i) {
    const double period = zeros[i] - zeros[i - 2];
    CHECK(std::abs(period - period_ref) < 0.01 * period_ref);
  }
}

TEST_CASE("amplifying stack at real frequency is refused without the override") {
  CHECK_THROWS_AS(green_trace(gain_stack(false), 3e-8, {1e16, 0.0}),
                  std::domain_error);
  // with the override the evaluation proceeds and flags the reflection
  const GreenTrace g = green_trace(gain_stack(true), 3e-8, {1e16, 0.0});
  CHECK(std::isfinite(g.value.real()));
}

TEST_CASE("stack construction rules") {
  const auto vac = make_mat(Material::vacuum());
  const auto mir = make_mat(Material::perfect_mirror());
  CHECK_THROWS_AS(LayerStack(vac, {}, mir), std::invalid_argument);
  CHECK_THROWS_AS(LayerStack(mir, {{mir, 1e-9}}, vac), std::invalid_argument);
  CHECK_THROWS_AS(LayerStack(mir, {{vac, 0.0}}, vac), std::invalid_argument);
  CHECK_THROWS_AS(green_trace(mirror_stack(), -1e-9, {1e16, 0.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(green_trace(mirror_stack(), 1e-8, {1e16, -1e14}),
                  std::invalid_argument);
}

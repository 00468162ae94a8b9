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
#include <numbers>

#include "casimir/constants.hpp"
#include "casimir/numerics.hpp"

using namespace casimir;

TEST_CASE("semi-infinite: exp(-x) integrates to 1") {
  QuadratureSpec q;
  q.rel_tol = 1e-12;
  const auto r =
      integrate_semi_infinite([](double x) { return std::exp(-x); }, q);
  CHECK(std::abs(r.value - 1.0) < 1e-10);
}

TEST_CASE("semi-infinite: x^2 exp(-2x) integrates to 1/4") {
  QuadratureSpec q;
  q.rel_tol = 1e-12;
  q.tail_mapping = QuadratureSpec::TailMapping::Exp;
  const auto r = integrate_semi_infinite(
      [](double x) { return x * x * std::exp(-2.0 * x); }, q, 0.5);
  CHECK(std::abs(r.value - 0.25) < 1e-10 * 0.25);
}

TEST_CASE("semi-infinite: 1/(1+x^2) integrates to pi/2") {
  QuadratureSpec q;  // default algebraic tail handles the slow decay
  const auto r = integrate_semi_infinite(
      [](double x) { return 1.0 / (1.0 + x * x); }, q);
  CHECK(std::abs(r.value - std::numbers::pi / 2) < 1e-8);
}

TEST_CASE("window: constant on [0,1]") {
  const auto r = integrate_window([](double) { return 1.0; }, 0.0, 1.0, {});
  CHECK(r.value == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("window: sin(100x) over [0, 2pi] vanishes") {
  QuadratureSpec q;
  q.abs_tol = 1e-10;
  const auto bp = oscillation_breakpoints(0.0, 2.0 * std::numbers::pi,
                                          std::numbers::pi / 200.0);
  const auto r = integrate_window([](double x) { return std::sin(100.0 * x); },
                                  0.0, 2.0 * std::numbers::pi, q, bp);
  CHECK(std::abs(r.value) < 1e-10);
}

TEST_CASE("window: truncated Lorentzian mass against the arctan closed form") {
  const double gamma = 1e-3, x0 = 5.0;
  const auto lorentz = [=](double x) {
    const double d = x - x0;
    return (gamma / std::numbers::pi) / (d * d + gamma * gamma);
  };
  QuadratureSpec q;
  q.rel_tol = 1e-12;
  std::vector<double> bp;
  for (double k : {-30.0, -10.0, -3.0, 0.0, 3.0, 10.0, 30.0})
    bp.push_back(x0 + k * gamma);
  for (double w : {50.0, 100.0}) {
    const auto r = integrate_window(lorentz, x0 - w * gamma, x0 + w * gamma,
                                    q, bp);
    const double expected = (2.0 / std::numbers::pi) * std::atan(w);
    CHECK(r.value == doctest::Approx(expected).epsilon(1e-10));
  }
}

TEST_CASE("budget exhaustion carries the best value") {
  QuadratureSpec q;
  q.rel_tol = 1e-15;
  q.max_subdivisions = 4;
  bool threw = false;
  try {
    integrate_window([](double x) { return std::sqrt(std::abs(x - 0.3717)); },
                     0.0, 1.0, q);
  } catch (const QuadratureError& e) {
    threw = true;
    // (2/3)(a^{3/2} + (1-a)^{3/2}) for a = 0.3717
    CHECK(std::abs(e.best_value.real() - 0.483075) < 1e-2);
    CHECK(e.err_estimate > 0.0);
  }
  CHECK(threw);
}

TEST_CASE("reproducibility: halving rel_tol moves the value less than err") {
  const auto cases = {
      +[](double x) { return std::exp(-x) * std::cos(3.0 * x); },
      +[](double x) { return x * std::exp(-0.7 * x * x); },
      +[](double x) { return 1.0 / ((1.0 + x) * (1.0 + x) * (1.0 + x)); }};
  for (const auto& f : cases) {
    QuadratureSpec q;
    q.rel_tol = 1e-6;
    double prev_err = 0.0, prev_value = 0.0;
    bool first = true;
    for (int i = 0; i < 4; ++i) {
      const auto r = integrate_semi_infinite(f, q);
      if (!first) CHECK(std::abs(r.value - prev_value) <= prev_err + 1e-15);
      prev_err = r.err;
      prev_value = r.value;
      first = false;
      q.rel_tol *= 0.5;
    }
  }
}

TEST_CASE("matsubara: T=0 falls back to the integral") {
  const double xi0 = 1e15;
  const auto f = [=](double xi) { return std::exp(-xi / xi0); };
  const auto r = matsubara_sum(f, 0.0, {}, xi0);
  CHECK(r.value == doctest::Approx(xi0).epsilon(1e-8));
}

TEST_CASE("matsubara: first frequency at 300 K") {
  CHECK(matsubara_spacing(300.0) == doctest::Approx(2.4675e14).epsilon(2e-3));
}

TEST_CASE("matsubara: smooth integrands approach the integral as O(T^2)") {
  static constexpr double scale = 1e15;  // integrand frequency scale
  struct Case {
    double (*f)(double);
    double integral;
  };
  const Case cases[] = {
      {+[](double x) { return std::exp(-x / scale); }, scale},
      {+[](double x) { return (x / scale) * std::exp(-x / scale); }, scale},
      {+[](double x) {
         const double u = 1.0 + x / scale;
         return 1.0 / (u * u * u);
       },
       0.5 * scale}};
  QuadratureSpec q;
  q.rel_tol = 1e-10;
  for (const auto& c : cases) {
    const double T1 = 120.0, T2 = 60.0;
    const double d1 =
        std::abs(matsubara_sum(c.f, T1, q, scale).value - c.integral);
    const double d2 =
        std::abs(matsubara_sum(c.f, T2, q, scale).value - c.integral);
    CHECK(d1 / c.integral < 1e-2);
    const double ratio = d1 / d2;  // Euler-Maclaurin: expect ~4
    CHECK(ratio > 3.0);
    CHECK(ratio < 5.0);
  }
}

TEST_CASE("matsubara: constant terms are flagged divergent") {
  CHECK_THROWS_AS(matsubara_sum([](double) { return 1.0; }, 300.0, {}),
                  DivergenceError);
}

TEST_CASE("non-finite integrand raises instead of poisoning the result") {
  CHECK_THROWS_AS(
      integrate_window(
          [](double x) { return 1.0 / (x - 0.5) / (x - 0.5); }, 0.0, 1.0, {}),
      QuadratureError);
}

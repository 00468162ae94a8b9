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

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <limits>
#include <string>
#include <type_traits>
#include <vector>

namespace casimir {

struct QuadratureSpec {
  enum class TailMapping { Exp, Algebraic };

  double rel_tol = 1e-8;
  double abs_tol = 0.0;
  int max_subdivisions = 2000;
  TailMapping tail_mapping = TailMapping::Algebraic;

  bool valid() const { return rel_tol > 0.0 || abs_tol > 0.0; }
};

template <typename T>
struct BasicIntegralResult {
  T value{};
  double err = 0.0;   // heuristic error estimate, not a bound
  long evaluations = 0;
};

using IntegralResult = BasicIntegralResult<double>;
using ComplexIntegralResult = BasicIntegralResult<std::complex<double>>;

// Subdivision or term budget exhausted before the error target was met.
// Carries the best value obtained so far together with its error estimate.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& msg, std::complex<double> best, double err)
      : std::runtime_error(msg), best_value(best), err_estimate(err) {}
  std::complex<double> best_value;
  double err_estimate;
};

// A sum or integral was recognised as non-convergent rather than merely slow.
class DivergenceError : public std::runtime_error {
 public:
  DivergenceError(const std::string& msg, std::complex<double> partial,
                  double err)
      : std::runtime_error(msg), partial_value(partial), err_estimate(err) {}
  std::complex<double> partial_value;
  double err_estimate;
};

namespace detail {

// Gauss(7)-Kronrod(15) nodes and weights on [-1, 1] (QUADPACK values).
inline constexpr std::array<double, 8> kGkNodes = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.0};
inline constexpr std::array<double, 8> kKronrodW = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
inline constexpr std::array<double, 4> kGaussW = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

inline std::complex<double> to_complex(double v) { return {v, 0.0}; }
inline std::complex<double> to_complex(std::complex<double> v) { return v; }

template <typename F>
using integrand_value_t = std::decay_t<std::invoke_result_t<F&, double>>;

template <typename T>
struct Segment {
  double a = 0.0, b = 0.0;
  T value{};
  double err = 0.0;
};

template <typename F, typename T = integrand_value_t<F>>
Segment<T> gk15(F& f, double a, double b, long& evaluations) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  T acc_k{};
  T acc_g{};
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kGkNodes[i];
    const T fl = f(mid - dx);
    const T fr = f(mid + dx);
    acc_k += kKronrodW[i] * (fl + fr);
    if (i % 2 == 1) acc_g += kGaussW[i / 2] * (fl + fr);
  }
  const T fc = f(mid);
  acc_k += kKronrodW[7] * fc;
  acc_g += kGaussW[3] * fc;
  evaluations += 15;
  Segment<T> seg{a, b, half * acc_k, std::abs(half * (acc_k - acc_g))};
  if (!std::isfinite(seg.err) || !std::isfinite(std::abs(seg.value)))
    throw QuadratureError("quadrature: integrand returned a non-finite value",
                          to_complex(seg.value),
                          std::numeric_limits<double>::infinity());
  return seg;
}

// Globally adaptive bisection over an initial set of segment edges.
template <typename F, typename T = integrand_value_t<F>>
BasicIntegralResult<T> adaptive(F& f, const std::vector<double>& edges,
                                const QuadratureSpec& spec, const char* what) {
  long evaluations = 0;
  std::vector<Segment<T>> segs;
  std::vector<Segment<T>> frozen;  // too narrow to split further
  segs.reserve(edges.size() + 64);
  for (std::size_t i = 0; i + 1 < edges.size(); ++i)
    if (edges[i + 1] > edges[i])
      segs.push_back(gk15(f, edges[i], edges[i + 1], evaluations));
  const auto by_err = [](const Segment<T>& x, const Segment<T>& y) {
    return x.err < y.err;
  };
  std::make_heap(segs.begin(), segs.end(), by_err);

  const auto totals = [&] {
    T v{};
    double e = 0.0;
    for (const auto& s : segs) {
      v += s.value;
      e += s.err;
    }
    for (const auto& s : frozen) {
      v += s.value;
      e += s.err;
    }
    return std::pair<T, double>(v, e);
  };

  for (;;) {
    const auto [value, err] = totals();
    const double target =
        std::max(spec.rel_tol * std::abs(value), spec.abs_tol);
    if (err <= target || segs.empty())
      return {value, err, evaluations};
    if (static_cast<int>(segs.size() + frozen.size()) >= spec.max_subdivisions)
      throw QuadratureError(std::string(what) +
                                ": subdivision budget exhausted",
                            to_complex(value), err);
    std::pop_heap(segs.begin(), segs.end(), by_err);
    const Segment<T> worst = segs.back();
    segs.pop_back();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      frozen.push_back(worst);
      continue;
    }
    segs.push_back(gk15(f, worst.a, mid, evaluations));
    std::push_heap(segs.begin(), segs.end(), by_err);
    segs.push_back(gk15(f, mid, worst.b, evaluations));
    std::push_heap(segs.begin(), segs.end(), by_err);
  }
}

}  // namespace detail

// Adaptive integral of f over the finite window [lo, hi]. Optional interior
// breakpoints seed the initial subdivision (oscillation periods, known peaks).
template <typename F>
auto integrate_window(F&& f, double lo, double hi, const QuadratureSpec& spec,
                      const std::vector<double>& breakpoints = {}) {
  using T = detail::integrand_value_t<F>;
  if (!spec.valid())
    throw std::invalid_argument(
        "integrate_window: rel_tol or abs_tol must be positive");
  if (!std::isfinite(lo) || !std::isfinite(hi) || hi < lo)
    throw std::invalid_argument("integrate_window: bad interval");
  if (hi == lo) return BasicIntegralResult<T>{};
  std::vector<double> edges;
  edges.reserve(breakpoints.size() + 2);
  edges.push_back(lo);
  for (double b : breakpoints)
    if (b > lo && b < hi) edges.push_back(b);
  edges.push_back(hi);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  auto& fn = f;
  return detail::adaptive(fn, edges, spec, "integrate_window");
}

// Adaptive integral of a decaying f over [0, inf), via a variable transform
// selected by spec.tail_mapping. `scale` sets the transform's length scale;
// optional breakpoints are given in the untransformed variable.
template <typename F>
auto integrate_semi_infinite(F&& f, const QuadratureSpec& spec,
                             double scale = 1.0,
                             const std::vector<double>& breakpoints = {}) {
  if (!spec.valid())
    throw std::invalid_argument(
        "integrate_semi_infinite: rel_tol or abs_tol must be positive");
  if (!(scale > 0.0) || !std::isfinite(scale))
    throw std::invalid_argument("integrate_semi_infinite: scale must be > 0");
  const bool expmap = spec.tail_mapping == QuadratureSpec::TailMapping::Exp;
  // The t = 1 endpoint is excluded; the sliver beyond t_max contributes at
  // most ~1e-15 of the total for any integrable decay.
  const double t_max = 1.0 - 1e-15;
  const auto t_of_x = [=](double x) {
    return expmap ? -std::expm1(-x / scale) : x / (x + scale);
  };
  auto g = [&](double t) {
    using T = detail::integrand_value_t<F>;
    const double u = 1.0 - t;
    if (u <= 0.0) return T{};
    const double x = expmap
                         ? (t < 0.5 ? -scale * std::log1p(-t)
                                    : -scale * std::log(u))
                         : scale * t / u;
    const T fx = f(x);
    if (fx == T{}) return T{};  // avoid 0 * inf from the Jacobian
    return fx * (expmap ? scale / u : scale / (u * u));
  };
  std::vector<double> edges{0.0};
  for (double b : breakpoints)
    if (b > 0.0 && std::isfinite(b)) edges.push_back(std::min(t_of_x(b), t_max));
  edges.push_back(t_max);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return detail::adaptive(g, edges, spec, "integrate_semi_infinite");
}

// Matsubara sum of f over xi_m = 2 pi m k_B T / hbar:
//   (2 pi k_B T / hbar) * [f(0)/2 + sum_{m>=1} f(xi_m)].
// At T = 0 falls back to integrate_semi_infinite (scale as there). Terms that
// stop decaying raise DivergenceError.
IntegralResult matsubara_sum(const std::function<double(double)>& f,
                             double temperature, const QuadratureSpec& spec,
                             double scale = 1.0);

// First Matsubara frequency 2 pi k_B T / hbar [rad/s].
double matsubara_spacing(double temperature);

// Evenly spaced interior points so that no subinterval of [lo, hi] is wider
// than max_width. Used to seed oscillatory integrands at Nyquist density.
std::vector<double> oscillation_breakpoints(double lo, double hi,
                                            double max_width);

}  // namespace casimir

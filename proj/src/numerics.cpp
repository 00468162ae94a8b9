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

#include "casimir/numerics.hpp"

#include <limits>
#include <numbers>

#include "casimir/constants.hpp"

namespace casimir {

double matsubara_spacing(double temperature) {
  return 2.0 * std::numbers::pi * constants::k_B * temperature /
         constants::hbar;
}

IntegralResult matsubara_sum(const std::function<double(double)>& f,
                             double temperature, const QuadratureSpec& spec,
                             double scale) {
  if (!spec.valid())
    throw std::invalid_argument(
        "matsubara_sum: rel_tol or abs_tol must be positive");
  if (temperature < 0.0)
    throw std::invalid_argument("matsubara_sum: temperature must be >= 0");
  if (temperature == 0.0) return integrate_semi_infinite(f, spec, scale);

  const double h = matsubara_spacing(temperature);
  double sum = 0.5 * f(0.0);
  long evaluations = 1;
  double first_mag = -1.0;
  double last_mag = 0.0;
  int consecutive_small = 0;
  long next_check = 8192;
  double prev_check_mag = std::numeric_limits<double>::infinity();
  const long max_terms = std::max<long>(1L << 16, 64L * spec.max_subdivisions);

  for (long m = 1;; ++m) {
    const double term = f(static_cast<double>(m) * h);
    ++evaluations;
    sum += term;
    const double tmag = std::abs(term);
    if (m == 1) first_mag = tmag;
    last_mag = tmag;

    const double tol =
        std::max({spec.rel_tol * std::abs(sum), spec.abs_tol / h, 1e-300});
    if (tmag <= 0.25 * tol) {
      if (++consecutive_small >= 3 && m >= 8) break;
    } else {
      consecutive_small = 0;
    }

    if (m == next_check) {
      if (tmag > 0.9 * prev_check_mag &&
          tmag > 1e-3 * std::max(first_mag, 1e-300))
        throw DivergenceError("matsubara_sum: terms are not decaying",
                              h * sum, h * tmag * static_cast<double>(m));
      prev_check_mag = tmag;
      next_check *= 2;
    }
    if (m >= max_terms)
      throw QuadratureError("matsubara_sum: term budget exhausted", h * sum,
                            h * tmag * 8.0);
  }
  return {h * sum, h * last_mag * 4.0, evaluations};
}

std::vector<double> oscillation_breakpoints(double lo, double hi,
                                            double max_width) {
  std::vector<double> out;
  if (!(hi > lo) || !(max_width > 0.0) || !std::isfinite(max_width))
    return out;
  const double need = std::ceil((hi - lo) / max_width);
  const long count =
      std::min<long>(static_cast<long>(std::max(need, 1.0)), 100000L);
  out.reserve(static_cast<std::size_t>(count));
  for (long i = 1; i < count; ++i)
    out.push_back(lo + (hi - lo) * (static_cast<double>(i) /
                                    static_cast<double>(count)));
  return out;
}

}  // namespace casimir

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
#include <memory>
#include <vector>

#include "casimir/materials.hpp"
#include "casimir/numerics.hpp"

namespace casimir {

// A half-space or layer material: either a dispersive dielectric (possibly
// with gain) or an idealised perfect mirror (r_s = -1, r_p = +1 exactly).
struct Material {
  enum class Kind { Dielectric, PerfectMirror };

  Kind kind = Kind::Dielectric;
  PermittivityModel eps;

  static Material dielectric(PermittivityModel m) {
    return {Kind::Dielectric, std::move(m)};
  }
  static Material vacuum() { return {}; }
  static Material perfect_mirror() {
    return {Kind::PerfectMirror, PermittivityModel::vacuum()};
  }

  bool is_mirror() const { return kind == Kind::PerfectMirror; }
  bool is_vacuum() const {
    return kind == Kind::Dielectric && eps.is_vacuum();
  }
};

using MaterialPtr = std::shared_ptr<const Material>;

struct Layer {
  MaterialPtr material;
  double thickness = 0.0;  // [m], interior layers only
};

// Planar stratified background: semi-infinite substrate below, finite layers,
// semi-infinite probe region above (vacuum for all trace evaluations here).
// A perfect mirror is allowed only as the substrate.
class LayerStack {
 public:
  LayerStack(MaterialPtr below, std::vector<Layer> layers, MaterialPtr above,
             bool allow_gain = false);

  const MaterialPtr& below() const { return below_; }
  const MaterialPtr& above() const { return above_; }
  const std::vector<Layer>& layers() const { return layers_; }
  bool allow_gain() const { return allow_gain_; }

  bool probe_region_vacuum() const { return above_->is_vacuum(); }
  bool vacuum_everywhere() const;
  // Any region with Im eps < 0 at the given real frequency.
  bool amplifying_at(double omega) const;

  static LayerStack half_space(MaterialPtr below, bool allow_gain = false);

 private:
  MaterialPtr below_;
  MaterialPtr above_;
  std::vector<Layer> layers_;
  bool allow_gain_ = false;
};

enum class Polarization { S, P };

// Generalised reflection coefficient of the stack seen from the probe region,
// by transfer recursion over the interfaces. Branch: Im k_z >= 0 everywhere.
// For amplifying layers at real omega the magnitude may exceed 1.
std::complex<double> fresnel_reflection(const LayerStack& stack,
                                        Polarization pol,
                                        std::complex<double> omega,
                                        double kpar);

// Coincidence-limit trace of the scattering Green tensor and its z-derivative
// at height z above the top interface.
struct GreenTrace {
  std::complex<double> value{};      // Tr G1(r,r,omega) [1/m]
  std::complex<double> dvalue_dz{};  // d/dz Tr G1 [1/m^2]
  double err = 0.0;                  // quadrature estimate for value
  double err_d = 0.0;                // quadrature estimate for dvalue_dz
  std::complex<double> omega{};      // [rad/s]
  bool gain_reflection = false;      // some |r| exceeded 1 during assembly
};

// omega in the closed upper half plane (real axis included, omega != 0).
// An amplifying stack at real omega is refused unless the stack was built
// with allow_gain; a non-convergent k-integral raises DivergenceError with
// the partial value attached.
GreenTrace green_trace(const LayerStack& stack, double z,
                       std::complex<double> omega,
                       const QuadratureSpec& spec = {});

struct GreenTraceReal {
  double value = 0.0;      // Tr G1(z,z,i xi) [1/m], strictly real
  double dvalue_dz = 0.0;  // [1/m^2]
  double err = 0.0;
  double err_d = 0.0;
  double xi = 0.0;         // [rad/s]
};

// Purely imaginary frequency omega = i xi, xi > 0. `extra_breakpoints` seeds
// additional k-integration split points (in the kappa variable); the result
// must not depend on them beyond quadrature error.
GreenTraceReal green_trace_imag_axis(
    const LayerStack& stack, double z, double xi,
    const QuadratureSpec& spec = {},
    const std::vector<double>& extra_breakpoints = {});

// Static limit lim_{xi->0} xi^2 Tr G1(z,z,i xi) and its z-derivative
// [rad^2 s^-2 / m]. This is the zero-frequency (m = 0) Matsubara piece.
struct StaticGreenTrace {
  double value = 0.0;
  double dvalue_dz = 0.0;
  double err = 0.0;
};

StaticGreenTrace green_trace_static(const LayerStack& stack, double z,
                                    const QuadratureSpec& spec = {});

}  // namespace casimir

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

namespace casimir::constants {

// SI values (CODATA 2018 / exact SI definitions).
inline constexpr double c = 299792458.0;             // speed of light [m/s]
inline constexpr double hbar = 1.054571817e-34;      // reduced Planck constant [J s]
inline constexpr double eps0 = 8.8541878128e-12;     // vacuum permittivity [F/m]
inline constexpr double mu0 = 1.0 / (eps0 * c * c);  // vacuum permeability [H/m]
inline constexpr double k_B = 1.380649e-23;          // Boltzmann constant [J/K]
inline constexpr double elementary_charge = 1.602176634e-19;  // [C]

// Angular frequency of a 1 eV quantum; used for input unit conversion.
inline constexpr double eV_to_rad_s = elementary_charge / hbar;

inline constexpr const char* version = "0.1.0";

}  // namespace casimir::constants

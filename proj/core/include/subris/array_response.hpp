// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "subris/config.hpp"

namespace subris {

using cplx = std::complex<double>;

/// Dense array response; every entry has unit modulus.
using SteeringVector = std::vector<cplx>;

/// ULA response: entry m is exp(j 2 pi (d/lambda) sin(theta) m), m = 0..M-1.
SteeringVector ula_steering(std::size_t M, double d_over_lambda, double theta);

/// UPA response of an Lx x Ly panel: kron(x-axis ramp, y-axis ramp) with
/// per-element phase steps 2 pi (d/lambda) sin(theta) along x and
/// 2 pi (d/lambda) sin(phi) cos(theta) along y. Index lx * Ly + ly.
SteeringVector upa_steering(std::size_t Lx, std::size_t Ly, double d_over_lambda, double theta, double phi);

/// Arrival-side phase offset of subarray q (negative exponent, AoA angles).
cplx subarray_phase_b(const ValidatedConfig& cfg, std::size_t q);

/// Departure-side phase offset of subarray q (positive exponent, AoD angles).
cplx subarray_phase_c(const ValidatedConfig& cfg, std::size_t q);

}  // namespace subris

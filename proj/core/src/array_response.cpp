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

#include "subris/array_response.hpp"

#include <cmath>
#include <numbers>

namespace subris {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

SteeringVector phase_ramp(std::size_t count, double step) {
    SteeringVector out(count);
    for (std::size_t k = 0; k < count; ++k) {
        out[k] = std::polar(1.0, step * static_cast<double>(k));
    }
    return out;
}

}  // namespace

SteeringVector ula_steering(std::size_t M, double d_over_lambda, double theta) {
    return phase_ramp(M, kTwoPi * d_over_lambda * std::sin(theta));
}

SteeringVector upa_steering(std::size_t Lx, std::size_t Ly, double d_over_lambda, double theta, double phi) {
    const SteeringVector x = phase_ramp(Lx, kTwoPi * d_over_lambda * std::sin(theta));
    const SteeringVector y = phase_ramp(Ly, kTwoPi * d_over_lambda * std::sin(phi) * std::cos(theta));
    SteeringVector out;
    out.reserve(Lx * Ly);
    for (const cplx& xv : x) {
        for (const cplx& yv : y) {
            out.push_back(xv * yv);
        }
    }
    return out;
}

cplx subarray_phase_b(const ValidatedConfig& cfg, std::size_t q) {
    const auto [x, y] = subarray_origin(cfg, q);
    const auto& a = cfg.angles();
    const double arg = std::sin(a.theta_a1) * static_cast<double>(x) +
                       std::cos(a.theta_a1) * std::sin(a.phi_a1) * static_cast<double>(y);
    return std::polar(1.0, -kTwoPi * cfg.params().d2_over_lambda * arg);
}

cplx subarray_phase_c(const ValidatedConfig& cfg, std::size_t q) {
    const auto [x, y] = subarray_origin(cfg, q);
    const auto& a = cfg.angles();
    const double arg = std::sin(a.theta_d2) * static_cast<double>(x) +
                       std::cos(a.theta_d2) * std::sin(a.phi_d2) * static_cast<double>(y);
    return std::polar(1.0, kTwoPi * cfg.params().d2_over_lambda * arg);
}

}  // namespace subris

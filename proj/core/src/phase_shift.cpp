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

#include "subris/phase_shift.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace subris {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kSingularityThreshold = 1e-9;
// pi - double(pi), rounded to double.
constexpr double kPiTail = 1.2246467991473532e-16;

void require_phase_count(const ValidatedConfig& cfg, const PhaseAssignment& phases) {
    if (phases.size() != cfg.Q()) {
        throw std::invalid_argument("phase assignment has " + std::to_string(phases.size()) +
                                    " entries, expected Q=" + std::to_string(cfg.Q()));
    }
}

}  // namespace

double wrap_phase(double phase) noexcept {
    double r = std::fmod(phase, kTwoPi);
    if (r < 0.0) {
        r += kTwoPi;
    }
    // fmod + shift can round up to exactly 2 pi for tiny negative inputs.
    return r >= kTwoPi ? 0.0 : r;
}

PhaseAssignment::PhaseAssignment(std::vector<double> phases) : phases_(std::move(phases)) {
    for (double& p : phases_) {
        p = wrap_phase(p);
    }
}

PhaseGradients phase_gradients(const ValidatedConfig& cfg) {
    const auto& a = cfg.angles();
    const double scale = std::numbers::pi * cfg.params().d2_over_lambda;
    return {
        scale * (std::sin(a.theta_d2) - std::sin(a.theta_a1)),
        scale * (std::sin(a.phi_d2) * std::cos(a.theta_d2) - std::sin(a.phi_a1) * std::cos(a.theta_a1)),
    };
}

double normalized_dirichlet(std::size_t L, double p) {
    if (L == 1) {
        return 1.0;
    }
    // Reduce p = k pi + r with a two-part pi so that r keeps full relative
    // precision next to the removable singularities at multiples of pi.
    const double k = std::nearbyint(p / std::numbers::pi);
    const double r = std::fma(-k, std::numbers::pi, p) - k * kPiTail;
    const double len = static_cast<double>(L);
    const bool odd = std::fmod(std::abs(k) * (len - 1.0), 2.0) != 0.0;
    const double sign = odd ? -1.0 : 1.0;
    if (std::abs(r) < kSingularityThreshold) {
        return sign;
    }
    return std::clamp(sign * std::sin(len * r) / (len * std::sin(r)), -1.0, 1.0);
}

double eta_factor(std::size_t Lx, std::size_t Ly, double p1, double p2) {
    const double f = normalized_dirichlet(Lx, p1) * normalized_dirichlet(Ly, p2);
    return f * f;
}

double eta(const ValidatedConfig& cfg) {
    const auto [p1, p2] = phase_gradients(cfg);
    return eta_factor(cfg.Lx(), cfg.Ly(), p1, p2);
}

PhaseGeometry phase_geometry(const ValidatedConfig& cfg) {
    const auto [p1, p2] = phase_gradients(cfg);
    return {p1, p2, eta_factor(cfg.Lx(), cfg.Ly(), p1, p2)};
}

PhaseAssignment optimal_phases(const ValidatedConfig& cfg) {
    const auto [p1, p2] = phase_gradients(cfg);
    const double intra = p1 * static_cast<double>(cfg.Lx() - 1) + p2 * static_cast<double>(cfg.Ly() - 1);
    std::vector<double> phases(cfg.Q());
    for (std::size_t q = 0; q < cfg.Q(); ++q) {
        const auto [x, y] = subarray_origin(cfg, q);
        phases[q] = -(2.0 * p1 * static_cast<double>(x) + 2.0 * p2 * static_cast<double>(y) + intra);
    }
    return PhaseAssignment(std::move(phases));
}

ComplexMatrix effective_cascade(const ValidatedConfig& cfg,
                                const PhaseAssignment& phases,
                                const ComplexMatrix& h2,
                                const ComplexMatrix& H1) {
    require_phase_count(cfg, phases);
    if (h2.rows() != 1 || h2.cols() != cfg.N()) {
        throw std::invalid_argument("h2 must be 1 x N");
    }
    if (H1.rows() != cfg.N() || H1.cols() != cfg.M()) {
        throw std::invalid_argument("H1 must be N x M");
    }

    ComplexMatrix h(1, cfg.M());
    auto acc = h.row(0);
    for (std::size_t q = 0; q < cfg.Q(); ++q) {
        const cplx rotation = std::polar(1.0, phases[q]);
        for (std::size_t l = 0; l < cfg.L(); ++l) {
            const std::size_t n = q * cfg.L() + l;
            const cplx w = h2(0, n) * rotation;
            const auto row = H1.row(n);
            for (std::size_t m = 0; m < cfg.M(); ++m) {
                acc[m] += w * row[m];
            }
        }
    }
    return h;
}

std::vector<cplx> subarray_los_terms(const ValidatedConfig& cfg, const PhaseAssignment& phases) {
    require_phase_count(cfg, phases);
    const auto& a = cfg.angles();
    const double d2 = cfg.params().d2_over_lambda;
    const SteeringVector depart = upa_steering(cfg.Lx(), cfg.Ly(), d2, a.theta_d2, a.phi_d2);
    const SteeringVector arrive = upa_steering(cfg.Lx(), cfg.Ly(), d2, a.theta_a1, a.phi_a1);

    // a_L(AoD) * a_L(AoA)^H is the same for every subarray.
    cplx inner{0.0, 0.0};
    for (std::size_t l = 0; l < depart.size(); ++l) {
        inner += depart[l] * std::conj(arrive[l]);
    }

    std::vector<cplx> z(cfg.Q());
    for (std::size_t q = 0; q < cfg.Q(); ++q) {
        z[q] = subarray_phase_c(cfg, q) * subarray_phase_b(cfg, q) * std::polar(1.0, phases[q]) * inner;
    }
    return z;
}

double los_array_gain(const ValidatedConfig& cfg, const PhaseAssignment& phases) {
    const std::vector<cplx> z = subarray_los_terms(cfg, phases);
    cplx total{0.0, 0.0};
    for (const cplx& v : z) {
        total += v;
    }
    return std::norm(total) * static_cast<double>(cfg.M());
}

}  // namespace subris

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

#include <cstddef>
#include <span>
#include <vector>

#include "subris/array_response.hpp"
#include "subris/channel.hpp"
#include "subris/config.hpp"

namespace subris {

/// Reduces an angle to [0, 2 pi).
double wrap_phase(double phase) noexcept;

/// One phase per subarray; the reflection matrix is
/// blkdiag(exp(j phi_1) I_L, ..., exp(j phi_Q) I_L). Stored phases are
/// reduced to [0, 2 pi).
class PhaseAssignment {
public:
    PhaseAssignment() = default;
    explicit PhaseAssignment(std::vector<double> phases);

    static PhaseAssignment zeros(std::size_t Q) { return PhaseAssignment(std::vector<double>(Q, 0.0)); }

    std::size_t size() const noexcept { return phases_.size(); }
    double operator[](std::size_t q) const { return phases_[q]; }
    std::span<const double> phases() const noexcept { return phases_; }

private:
    std::vector<double> phases_;
};

/// Half the inter-element phase mismatch between the departure and arrival
/// steering directions, along x (p1) and y (p2).
struct PhaseGradients {
    double p1;
    double p2;
};

struct PhaseGeometry {
    double p1;
    double p2;
    double eta;
};

PhaseGradients phase_gradients(const ValidatedConfig& cfg);

/// sin(L p) / (L sin p), clamped to [-1, 1]. At p = k pi the removable
/// singularity is resolved by its limit cos(L p) / cos(p) = +-1.
double normalized_dirichlet(std::size_t L, double p);

/// Subarray beamforming efficiency in [0, 1]: the squared product of the
/// normalized Dirichlet kernels along both axes.
double eta_factor(std::size_t Lx, std::size_t Ly, double p1, double p2);

double eta(const ValidatedConfig& cfg);
PhaseGeometry phase_geometry(const ValidatedConfig& cfg);

/// Closed-form maximizer of the LoS cascade gain:
/// phi_q = -[2 p1 x_q + 2 p2 y_q + p1 (Lx - 1) + p2 (Ly - 1)] with zero-based
/// subarray origins (x_q, y_q).
PhaseAssignment optimal_phases(const ValidatedConfig& cfg);

/// h2 * Phi * H1 (1 x M) without forming the N x N reflection matrix.
/// Throws std::invalid_argument on any dimension mismatch.
ComplexMatrix effective_cascade(const ValidatedConfig& cfg,
                                const PhaseAssignment& phases,
                                const ComplexMatrix& h2,
                                const ComplexMatrix& H1);

/// Per-subarray LoS contributions z_q = c_q b_q a_L(AoD) Phi_q a_L(AoA)^H.
std::vector<cplx> subarray_los_terms(const ValidatedConfig& cfg, const PhaseAssignment& phases);

/// ||h2_los * Phi * H1_los||^2 = |sum_q z_q|^2 * M.
double los_array_gain(const ValidatedConfig& cfg, const PhaseAssignment& phases);

}  // namespace subris

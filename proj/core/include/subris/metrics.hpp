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
#include <cstdint>
#include <span>

#include "subris/channel.hpp"
#include "subris/config.hpp"
#include "subris/phase_shift.hpp"

namespace subris {

/// Weights of the LoS-LoS cascade (gamma1) and of every path containing a
/// scattered component (gamma2). gamma1 + gamma2 = 1.
struct RicianWeights {
    double gamma1;
    double gamma2;
};

/// Throws std::invalid_argument for negative or NaN factors. Infinite factors
/// are handled through their limits.
RicianWeights rician_weights(double K1, double K2);

/// Jensen bound on the ergodic SE for a given phase assignment (bits/s/Hz):
/// log2(1 + snr (gamma1 ||h2_los Phi H1_los||^2 + gamma2 M N + M)).
double se_upper_bound(const ValidatedConfig& cfg, const PhaseAssignment& phases);

/// The bound above maximized over phases, in closed form via eta.
double max_ub_subarray(const ValidatedConfig& cfg);

/// Maximized bound of the element-based RIS: the same computation as
/// max_ub_subarray with Lx = Ly = 1.
double max_ub_element(const ValidatedConfig& cfg);

struct SeGap {
    double exact;        ///< max_ub_element - max_ub_subarray
    double large_scale;  ///< log2((g1 N^2 + g2 N + 1) / (g1 eta N^2 + g2 N + 1))
    double asymptote;    ///< -log2(eta); +inf when eta == 0
};

SeGap delta_ub(const ValidatedConfig& cfg);

struct MonteCarloEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::size_t samples = 0;
};

/// log2(1 + snr ||h2 Phi H1 + g||^2) for one realization. With MRT at the BS
/// this is the instantaneous rate.
double instantaneous_se(const ValidatedConfig& cfg, const PhaseAssignment& phases, const ChannelRealization& channel);

/// Monte Carlo ergodic SE. Sample i draws its channel from the stream seeded
/// with derive_seed(master_seed, i); per-sample values are reduced by
/// pairwise summation in index order, so the result is identical for any
/// `threads` (0 = hardware concurrency).
MonteCarloEstimate monte_carlo_se(const ValidatedConfig& cfg,
                                  const PhaseAssignment& phases,
                                  std::size_t num_samples,
                                  std::uint64_t master_seed,
                                  unsigned threads = 1);

/// Deterministic pairwise (cascade) summation.
double pairwise_sum(std::span<const double> values) noexcept;

/// Power model constants in watts. Defaults describe a varactor-diode RIS.
struct PowerConstants {
    double P_rest = 20.0;  ///< PA-scaled transmit power plus BS and UE circuits
    double P_dy = 0.0;     ///< dynamic RIS power
    double P_ct = 4.8;     ///< control board
    double P_d = 0.43;     ///< one driving circuit
};

/// P_dy + P_ct + num_drivers * P_d.
double ris_power(std::size_t num_drivers, const PowerConstants& pc);

/// One driving circuit per subarray (Q); Q = N for the element-based RIS.
std::size_t driver_count(const ValidatedConfig& cfg) noexcept;

/// se / (P_rest + P_RIS) in bits/s/Hz/W. Throws on negative SE or a
/// non-positive total power.
double energy_efficiency(double se, const PowerConstants& pc, std::size_t num_drivers);

}  // namespace subris

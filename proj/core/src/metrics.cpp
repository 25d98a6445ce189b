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

#include "subris/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

#include "subris/rng.hpp"

namespace subris {

namespace {

double los_weight_squared(double K) {
    return std::isinf(K) ? 1.0 : K / (K + 1.0);
}

// Closed-form maximized bound for the configured subarray shape.
double maximized_bound(const ValidatedConfig& cfg) {
    const auto [g1, g2] = rician_weights(cfg.params().K1, cfg.params().K2);
    const double N = static_cast<double>(cfg.N());
    const double M = static_cast<double>(cfg.M());
    return std::log2(1.0 + cfg.snr() * M * (g1 * eta(cfg) * N * N + g2 * N + 1.0));
}

/// Draws one realization and evaluates ||h2 Phi H1 + g||^2 without
/// materializing H1. The stream is consumed in exactly the order used by
/// ChannelSampler, so both routes see the same channel.
class CascadeGainSampler {
public:
    CascadeGainSampler(const ValidatedConfig& cfg, const PhaseAssignment& phases)
        : N_(cfg.N()),
          M_(cfg.M()),
          w1_(fading_weights(cfg.params().K1)),
          w2_(fading_weights(cfg.params().K2)),
          h2_los_(cfg.N()),
          los_row_scale_(cfg.N()),
          rotation_(cfg.N()),
          a_m_(ula_steering(cfg.M(), cfg.params().d1_over_lambda, cfg.angles().theta_d1)) {
        const ComplexMatrix h2_los = los_ris_user(cfg);
        const auto& a = cfg.angles();
        const SteeringVector a_l = upa_steering(cfg.Lx(), cfg.Ly(), cfg.params().d2_over_lambda, a.theta_a1, a.phi_a1);
        for (std::size_t q = 0; q < cfg.Q(); ++q) {
            const cplx b = subarray_phase_b(cfg, q);
            const cplx rot = std::polar(1.0, phases[q]);
            for (std::size_t l = 0; l < cfg.L(); ++l) {
                const std::size_t n = q * cfg.L() + l;
                h2_los_[n] = h2_los(0, n);
                los_row_scale_[n] = b * std::conj(a_l[l]);
                rotation_[n] = rot;
            }
        }
    }

    double sample(SampleStream& stream) const {
        std::vector<cplx> h2(N_);
        std::vector<cplx> g(M_);
        std::vector<cplx> row(M_);
        stream.fill_complex_normal(h2);
        stream.fill_complex_normal(g);

        // Reflected weights w_n = [h2]_n exp(j phi_q(n)); LoS part collapses
        // to (sum_n w_n beta_n) * a_M because each H1_los row is beta_n a_M.
        cplx los_sum{0.0, 0.0};
        for (std::size_t n = 0; n < N_; ++n) {
            h2[n] = (w2_.los * h2_los_[n] + w2_.nlos * h2[n]) * rotation_[n];
            los_sum += h2[n] * los_row_scale_[n];
        }

        // Accumulate in split real/imaginary form; std::complex multiplication
        // carries NaN-recovery branches that dominate this loop.
        std::vector<double> h_re(M_);
        std::vector<double> h_im(M_);
        const cplx los_coeff = w1_.los * los_sum;
        for (std::size_t m = 0; m < M_; ++m) {
            const cplx v = los_coeff * a_m_[m] + g[m];
            h_re[m] = v.real();
            h_im[m] = v.imag();
        }
        if (w1_.nlos != 0.0) {
            for (std::size_t n = 0; n < N_; ++n) {
                stream.fill_complex_normal(row);
                const double wr = w1_.nlos * h2[n].real();
                const double wi = w1_.nlos * h2[n].imag();
                for (std::size_t m = 0; m < M_; ++m) {
                    const double xr = row[m].real();
                    const double xi = row[m].imag();
                    h_re[m] += wr * xr - wi * xi;
                    h_im[m] += wr * xi + wi * xr;
                }
            }
        }

        double gain = 0.0;
        for (std::size_t m = 0; m < M_; ++m) {
            gain += h_re[m] * h_re[m] + h_im[m] * h_im[m];
        }
        return gain;
    }

private:
    std::size_t N_;
    std::size_t M_;
    FadingWeights w1_;
    FadingWeights w2_;
    std::vector<cplx> h2_los_;
    std::vector<cplx> los_row_scale_;
    std::vector<cplx> rotation_;
    SteeringVector a_m_;
};

}  // namespace

RicianWeights rician_weights(double K1, double K2) {
    if (std::isnan(K1) || std::isnan(K2) || K1 < 0.0 || K2 < 0.0) {
        throw std::invalid_argument("Rician factors must be >= 0");
    }
    if (std::isinf(K1) || std::isinf(K2)) {
        const double g1 = los_weight_squared(K1) * los_weight_squared(K2);
        return {g1, 1.0 - g1};
    }
    const double denom = (K1 + 1.0) * (K2 + 1.0);
    return {K1 * K2 / denom, (K1 + K2 + 1.0) / denom};
}

double se_upper_bound(const ValidatedConfig& cfg, const PhaseAssignment& phases) {
    const auto [g1, g2] = rician_weights(cfg.params().K1, cfg.params().K2);
    const double N = static_cast<double>(cfg.N());
    const double M = static_cast<double>(cfg.M());
    const double mean_gain = g1 * los_array_gain(cfg, phases) + g2 * M * N + M;
    return std::log2(1.0 + cfg.snr() * mean_gain);
}

double max_ub_subarray(const ValidatedConfig& cfg) {
    return maximized_bound(cfg);
}

double max_ub_element(const ValidatedConfig& cfg) {
    return maximized_bound(with_subarray_shape(cfg, 1, 1));
}

SeGap delta_ub(const ValidatedConfig& cfg) {
    const auto [g1, g2] = rician_weights(cfg.params().K1, cfg.params().K2);
    const double N = static_cast<double>(cfg.N());
    const double e = eta(cfg);
    SeGap gap{};
    gap.exact = max_ub_element(cfg) - max_ub_subarray(cfg);
    gap.large_scale = std::log2((g1 * N * N + g2 * N + 1.0) / (g1 * e * N * N + g2 * N + 1.0));
    gap.asymptote = e > 0.0 ? -std::log2(e) : std::numeric_limits<double>::infinity();
    return gap;
}

double instantaneous_se(const ValidatedConfig& cfg, const PhaseAssignment& phases, const ChannelRealization& channel) {
    const ComplexMatrix h = effective_cascade(cfg, phases, channel.h2, channel.H1);
    if (channel.g.rows() != 1 || channel.g.cols() != cfg.M()) {
        throw std::invalid_argument("g must be 1 x M");
    }
    double gain = 0.0;
    for (std::size_t m = 0; m < cfg.M(); ++m) {
        gain += std::norm(h(0, m) + channel.g(0, m));
    }
    return std::log2(1.0 + cfg.snr() * gain);
}

double pairwise_sum(std::span<const double> values) noexcept {
    constexpr std::size_t kBlock = 16;
    if (values.size() <= kBlock) {
        double s = 0.0;
        for (double v : values) {
            s += v;
        }
        return s;
    }
    const std::size_t half = values.size() / 2;
    return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

MonteCarloEstimate monte_carlo_se(const ValidatedConfig& cfg,
                                  const PhaseAssignment& phases,
                                  std::size_t num_samples,
                                  std::uint64_t master_seed,
                                  unsigned threads) {
    if (num_samples == 0) {
        throw std::invalid_argument("monte_carlo_se needs at least one sample");
    }
    if (phases.size() != cfg.Q()) {
        throw std::invalid_argument("phase assignment does not match Q");
    }
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, num_samples));

    const CascadeGainSampler sampler(cfg, phases);
    const double snr = cfg.snr();
    std::vector<double> rates(num_samples);

    auto run_range = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            SampleStream stream(derive_seed(master_seed, i));
            rates[i] = std::log2(1.0 + snr * sampler.sample(stream));
        }
    };

    if (threads == 1) {
        run_range(0, num_samples);
    } else {
        std::vector<std::jthread> workers;
        workers.reserve(threads);
        const std::size_t chunk = (num_samples + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            const std::size_t begin = std::min(num_samples, t * chunk);
            const std::size_t end = std::min(num_samples, begin + chunk);
            workers.emplace_back(run_range, begin, end);
        }
    }

    MonteCarloEstimate est;
    est.samples = num_samples;
    est.mean = pairwise_sum(rates) / static_cast<double>(num_samples);
    if (num_samples > 1) {
        std::vector<double> sq(num_samples);
        for (std::size_t i = 0; i < num_samples; ++i) {
            const double d = rates[i] - est.mean;
            sq[i] = d * d;
        }
        const double variance = pairwise_sum(sq) / static_cast<double>(num_samples - 1);
        est.std_error = std::sqrt(variance / static_cast<double>(num_samples));
    }
    return est;
}

double ris_power(std::size_t num_drivers, const PowerConstants& pc) {
    if (pc.P_dy < 0.0 || pc.P_ct < 0.0 || pc.P_d < 0.0 || pc.P_rest < 0.0) {
        throw std::invalid_argument("power constants must be >= 0");
    }
    return pc.P_dy + pc.P_ct + static_cast<double>(num_drivers) * pc.P_d;
}

std::size_t driver_count(const ValidatedConfig& cfg) noexcept {
    return cfg.Q();
}

double energy_efficiency(double se, const PowerConstants& pc, std::size_t num_drivers) {
    if (!(se >= 0.0)) {
        throw std::invalid_argument("spectral efficiency must be >= 0");
    }
    const double total = pc.P_rest + ris_power(num_drivers, pc);
    if (total <= 0.0) {
        throw std::invalid_argument("total power consumption must be > 0");
    }
    return se / total;
}

}  // namespace subris

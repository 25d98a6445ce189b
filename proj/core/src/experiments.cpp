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

#include "subris/experiments.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "subris/rng.hpp"

namespace subris {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::string format_real(double value) {
    char buf[32];
    const auto result = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, result.ptr);
}

void write_optional(std::ostream& out, const std::optional<double>& value) {
    if (value) {
        out << format_real(*value);
    }
}

ValidatedConfig with_angles(const ValidatedConfig& cfg, const Angles& angles) {
    SystemConfig raw = cfg.params();
    raw.angles = angles;
    return validate_config(raw);
}

std::string scheme_label(int l0) {
    return l0 == 1 ? "element" : "subarray_L" + std::to_string(l0);
}

// Mean of the maximized SE bound over the regional angle draws.
double regional_se(const ValidatedConfig& cfg, const RegionalSettings& regional) {
    if (regional.angle_draws == 0) {
        throw std::invalid_argument("regional averaging needs at least one angle draw");
    }
    std::vector<double> values(regional.angle_draws);
    for (std::size_t i = 0; i < regional.angle_draws; ++i) {
        values[i] = max_ub_subarray(with_angles(cfg, random_angles(regional.seed, i)));
    }
    return pairwise_sum(values) / static_cast<double>(values.size());
}

SweepRow regional_row(const ValidatedConfig& cfg,
                      std::string scheme,
                      std::string var_name,
                      double var_value,
                      const RegionalSettings& regional,
                      const PowerConstants& pc) {
    SweepRow row;
    row.scheme = std::move(scheme);
    row.var_name = std::move(var_name);
    row.var_value = var_value;
    row.se_ub = regional_se(cfg, regional);
    row.ee = energy_efficiency(row.se_ub, pc, driver_count(cfg));
    return row;
}

}  // namespace

std::vector<SweepRow> sweep_rician(const ValidatedConfig& base,
                                   const std::vector<double>& k_grid,
                                   const MonteCarloSettings& mc) {
    std::vector<SweepRow> rows;
    rows.reserve(2 * k_grid.size());
    const ValidatedConfig element_base = with_subarray_shape(base, 1, 1);

    for (double K : k_grid) {
        for (const ValidatedConfig* shape : {&base, &element_base}) {
            const ValidatedConfig cfg = with_rician_factor(*shape, K);
            SweepRow row;
            row.scheme = cfg.L() == 1 ? "element" : "subarray";
            row.var_name = "K";
            row.var_value = K;
            row.se_ub = max_ub_subarray(cfg);
            if (mc.samples > 0) {
                const MonteCarloEstimate est = monte_carlo_se(cfg, optimal_phases(cfg), mc.samples, mc.seed, mc.threads);
                row.se_mc = est.mean;
                row.se_mc_stderr = est.std_error;
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::vector<SweepRow> sweep_subarray_count(const ValidatedConfig& base,
                                           const std::vector<int>& l0_grid,
                                           const RegionalSettings& regional,
                                           const PowerConstants& pc) {
    std::vector<SweepRow> rows;
    rows.reserve(l0_grid.size());
    for (int l0 : l0_grid) {
        const ValidatedConfig cfg = with_subarray_shape(base, l0, l0);
        rows.push_back(regional_row(cfg, l0 == 1 ? "element" : "subarray", "Q", static_cast<double>(cfg.Q()),
                                    regional, pc));
    }
    return rows;
}

std::vector<SweepRow> sweep_ris_size(const ValidatedConfig& base,
                                     const std::vector<int>& n_grid,
                                     const std::vector<int>& l0_set,
                                     const RegionalSettings& regional,
                                     const PowerConstants& pc) {
    std::vector<int> shapes{1};
    for (int l0 : l0_set) {
        if (l0 != 1) {
            shapes.push_back(l0);
        }
    }

    std::vector<SweepRow> rows;
    for (int n : n_grid) {
        const int side = static_cast<int>(std::lround(std::sqrt(static_cast<double>(std::max(n, 0)))));
        if (n < 1 || side * side != n) {
            throw ConfigError("N", "sweep value " + std::to_string(n) + " is not a perfect square");
        }
        SystemConfig raw = base.params();
        raw.Nx = side;
        raw.Ny = side;
        for (int l0 : shapes) {
            raw.Lx = l0;
            raw.Ly = l0;
            const ValidatedConfig cfg = validate_config(raw);
            rows.push_back(regional_row(cfg, scheme_label(l0), "N", static_cast<double>(n), regional, pc));
        }
    }
    return rows;
}

Angles random_angles(std::uint64_t seed, std::uint64_t index) {
    SampleStream stream(derive_seed(seed, index));
    Angles a;
    a.theta_d1 = stream.uniform(0.0, kTwoPi);
    a.theta_a1 = stream.uniform(0.0, kTwoPi);
    a.phi_a1 = stream.uniform(0.0, kTwoPi);
    a.theta_d2 = stream.uniform(0.0, kTwoPi);
    a.phi_d2 = stream.uniform(0.0, kTwoPi);
    return a;
}

OracleResult brute_force_phase_oracle(const ValidatedConfig& cfg, std::size_t grid_levels) {
    constexpr std::size_t kMaxSubarrays = 4;
    constexpr std::size_t kMaxLevels = 32;
    if (cfg.Q() > kMaxSubarrays) {
        throw std::invalid_argument("oracle search limited to Q <= 4, got Q=" + std::to_string(cfg.Q()));
    }
    if (grid_levels < 2 || grid_levels > kMaxLevels) {
        throw std::invalid_argument("grid_levels must be in [2, 32], got " + std::to_string(grid_levels));
    }

    const std::size_t Q = cfg.Q();
    std::vector<std::size_t> digits(Q, 0);
    std::vector<double> phases(Q, 0.0);
    OracleResult result;
    result.best_gain = -1.0;

    while (true) {
        for (std::size_t q = 0; q < Q; ++q) {
            phases[q] = kTwoPi * static_cast<double>(digits[q]) / static_cast<double>(grid_levels);
        }
        PhaseAssignment candidate(phases);
        const double gain = los_array_gain(cfg, candidate);
        ++result.evaluated;
        if (gain > result.best_gain) {
            result.best_gain = gain;
            result.best_phases = std::move(candidate);
        }

        std::size_t q = 0;
        while (q < Q && ++digits[q] == grid_levels) {
            digits[q] = 0;
            ++q;
        }
        if (q == Q) {
            break;
        }
    }
    return result;
}

double grid_resolution_slack(const ValidatedConfig& cfg, std::size_t grid_levels) {
    const double N = static_cast<double>(cfg.N());
    const double M = static_cast<double>(cfg.M());
    return 2.0 * (1.0 - std::cos(std::numbers::pi / static_cast<double>(grid_levels))) * N * N * M;
}

void write_sweep_csv(std::ostream& out, std::vector<SweepRow> rows) {
    std::stable_sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
        if (a.scheme != b.scheme) {
            return a.scheme < b.scheme;
        }
        return a.var_value < b.var_value;
    });
    out << "scheme,var_name,var_value,se_mc,se_mc_stderr,se_ub,ee\n";
    for (const SweepRow& row : rows) {
        out << row.scheme << ',' << row.var_name << ',' << format_real(row.var_value) << ',';
        write_optional(out, row.se_mc);
        out << ',';
        write_optional(out, row.se_mc_stderr);
        out << ',' << format_real(row.se_ub) << ',';
        write_optional(out, row.ee);
        out << '\n';
    }
}

}  // namespace subris

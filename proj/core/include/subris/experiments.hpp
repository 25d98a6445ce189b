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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "subris/config.hpp"
#include "subris/metrics.hpp"
#include "subris/phase_shift.hpp"

namespace subris {

/// One output row. Missing metrics are written as empty CSV fields.
struct SweepRow {
    std::string scheme;  ///< "element", "subarray", or "subarray_L<L0>"
    std::string var_name;
    double var_value = 0.0;
    std::optional<double> se_mc;
    std::optional<double> se_mc_stderr;
    double se_ub = 0.0;
    std::optional<double> ee;
};

struct MonteCarloSettings {
    std::size_t samples = 10000;  ///< 0 disables the Monte Carlo column
    std::uint64_t seed = 1;
    unsigned threads = 1;
};

struct RegionalSettings {
    std::size_t angle_draws = 100;
    std::uint64_t seed = 1;
};

/// Ergodic SE versus the Rician factor (K1 = K2 = K) for the configured
/// subarray shape and the element-based RIS, both under optimal phases.
std::vector<SweepRow> sweep_rician(const ValidatedConfig& base,
                                   const std::vector<double>& k_grid,
                                   const MonteCarloSettings& mc);

/// Regional SE bound and EE versus the number of subarrays Q = N / L0^2,
/// averaged over random angle tuples. L0 = 1 is labeled "element".
std::vector<SweepRow> sweep_subarray_count(const ValidatedConfig& base,
                                           const std::vector<int>& l0_grid,
                                           const RegionalSettings& regional,
                                           const PowerConstants& pc);

/// Regional EE versus the RIS size N (square Nx = Ny = sqrt(N)) for the
/// element-based RIS and each subarray size in `l0_set`.
std::vector<SweepRow> sweep_ris_size(const ValidatedConfig& base,
                                     const std::vector<int>& n_grid,
                                     const std::vector<int>& l0_set,
                                     const RegionalSettings& regional,
                                     const PowerConstants& pc);

/// Five i.i.d. uniform angles on [0, 2 pi) for regional draw `index`.
Angles random_angles(std::uint64_t seed, std::uint64_t index);

struct OracleResult {
    PhaseAssignment best_phases;
    double best_gain = 0.0;
    std::size_t evaluated = 0;
};

/// Exhaustive search of los_array_gain over phases 2 pi k / grid_levels for
/// every subarray. Requires Q <= 4 and 2 <= grid_levels <= 32.
OracleResult brute_force_phase_oracle(const ValidatedConfig& cfg, std::size_t grid_levels);

/// Maximum amount by which a grid search may fall short of the continuous
/// optimum: 2 (1 - cos(pi / grid_levels)) N^2 M.
double grid_resolution_slack(const ValidatedConfig& cfg, std::size_t grid_levels);

/// Rows sorted by (scheme, var_value) under header
/// `scheme,var_name,var_value,se_mc,se_mc_stderr,se_ub,ee`. Numbers use the
/// shortest round-trip representation.
void write_sweep_csv(std::ostream& out, std::vector<SweepRow> rows);

}  // namespace subris

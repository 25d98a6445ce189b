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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "subris/experiments.hpp"

using namespace subris;
using std::numbers::pi;

namespace {

SystemConfig sized(int M, int Nx, int Ny, int Lx, int Ly, double K) {
    SystemConfig c;
    c.M = M;
    c.Nx = Nx;
    c.Ny = Ny;
    c.Lx = Lx;
    c.Ly = Ly;
    c.K1 = c.K2 = K;
    return c;
}

const SweepRow& find_row(const std::vector<SweepRow>& rows, const std::string& scheme, double value) {
    const auto it = std::find_if(rows.begin(), rows.end(), [&](const SweepRow& r) {
        return r.scheme == scheme && r.var_value == value;
    });
    REQUIRE(it != rows.end());
    return *it;
}

std::string csv(const std::vector<SweepRow>& rows) {
    std::ostringstream out;
    write_sweep_csv(out, rows);
    return out.str();
}

}  // namespace

TEST_CASE("sweep_rician") {
    const auto base = validate_config(sized(8, 4, 4, 2, 2, 1.0));
    const auto rows = sweep_rician(base, {0.0, 2.0, 20.0}, {300, 9, 1});
    REQUIRE(rows.size() == 6);

    SUBCASE("K = 0: subarray and element bounds coincide") {
        CHECK(find_row(rows, "subarray", 0.0).se_ub == find_row(rows, "element", 0.0).se_ub);
    }
    SUBCASE("every Monte Carlo mean sits below its bound within 3 standard errors") {
        for (const auto& r : rows) {
            REQUIRE(r.se_mc.has_value());
            CHECK(*r.se_mc <= r.se_ub + 3.0 * *r.se_mc_stderr);
        }
    }
    SUBCASE("element rows use the same bound code path with Lx = Ly = 1") {
        const auto elem = with_rician_factor(with_subarray_shape(base, 1, 1), 20.0);
        CHECK(find_row(rows, "element", 20.0).se_ub == max_ub_subarray(elem));
    }
    SUBCASE("samples = 0 leaves the Monte Carlo columns empty") {
        const auto bound_only = sweep_rician(base, {1.0}, {0, 1, 1});
        CHECK_FALSE(bound_only[0].se_mc.has_value());
        CHECK_FALSE(bound_only[0].ee.has_value());
    }
}

TEST_CASE("sweep_rician: large-K gap approaches 2.40 bits on the reference setup") {
    const auto rows = sweep_rician(validate_config(SystemConfig{}), {1e4}, {0, 1, 1});
    const double gap = find_row(rows, "element", 1e4).se_ub - find_row(rows, "subarray", 1e4).se_ub;
    CHECK(std::abs(gap - 2.40) < 0.05);
}

TEST_CASE("sweep output is identical for any thread count") {
    const auto base = validate_config(sized(4, 4, 4, 2, 2, 3.0));
    const std::string a = csv(sweep_rician(base, {0.0, 5.0}, {200, 3, 1}));
    const std::string b = csv(sweep_rician(base, {0.0, 5.0}, {200, 3, 4}));
    CHECK(a == b);
}

TEST_CASE("sweep_subarray_count") {
    const auto base = validate_config(SystemConfig{});
    const PowerConstants pc;
    const auto rows = sweep_subarray_count(base, {1, 2, 4, 8}, {25, 3}, pc);
    REQUIRE(rows.size() == 4);

    SUBCASE("element-based row has the highest regional SE") {
        const auto& elem = find_row(rows, "element", 1024.0);
        for (const auto& r : rows) {
            CHECK(r.se_ub <= elem.se_ub);
        }
    }
    SUBCASE("EE grows as Q shrinks from 1024") {
        CHECK(find_row(rows, "subarray", 256.0).ee.value() > find_row(rows, "element", 1024.0).ee.value());
        CHECK(find_row(rows, "subarray", 64.0).ee.value() > find_row(rows, "subarray", 256.0).ee.value());
    }
    SUBCASE("Q = 1 row is the closed form with single-subarray eta") {
        const auto one = sweep_subarray_count(base, {32}, {1, 3}, pc);
        SystemConfig raw = base.params();
        raw.Lx = raw.Ly = 32;
        raw.angles = random_angles(3, 0);
        const auto cfg = validate_config(raw);
        const auto w = rician_weights(raw.K1, raw.K2);
        const double want = std::log2(1.0 + 640.0 * (w.gamma1 * eta(cfg) * 1024.0 * 1024.0 + w.gamma2 * 1024.0 + 1.0));
        CHECK(one[0].var_value == 1.0);
        CHECK(one[0].se_ub == doctest::Approx(want).epsilon(1e-12));
        CHECK(one[0].ee.value() == doctest::Approx(want / (20.0 + 4.8 + 0.43)).epsilon(1e-12));
    }
    SUBCASE("L0 must divide the RIS") {
        CHECK_THROWS_AS(sweep_subarray_count(base, {3}, {2, 1}, pc), ConfigError);
    }
}

TEST_CASE("sweep_ris_size") {
    const auto base = validate_config(SystemConfig{});
    const PowerConstants pc;
    const auto rows = sweep_ris_size(base, {16, 64}, {2, 4}, {10, 1}, pc);
    REQUIRE(rows.size() == 6);

    SUBCASE("EE denominators scale with N for element and N / L0^2 for subarrays") {
        for (const auto& r : rows) {
            const double N = r.var_value;
            const double drivers = r.scheme == "element" ? N : (r.scheme == "subarray_L2" ? N / 4 : N / 16);
            CHECK(r.ee.value() == doctest::Approx(r.se_ub / (20.0 + 4.8 + 0.43 * drivers)).epsilon(1e-13));
        }
    }
    SUBCASE("non-square or incompatible sizes are rejected") {
        CHECK_THROWS_AS(sweep_ris_size(base, {20}, {2}, {1, 1}, pc), ConfigError);
        CHECK_THROWS_AS(sweep_ris_size(base, {36}, {4}, {1, 1}, pc), ConfigError);
    }
}

TEST_CASE("random_angles are reproducible and in [0, 2 pi)") {
    for (std::uint64_t i = 0; i < 200; ++i) {
        const Angles a = random_angles(11, i);
        const Angles b = random_angles(11, i);
        CHECK(a.theta_a1 == b.theta_a1);
        for (double v : {a.theta_d1, a.theta_a1, a.phi_a1, a.theta_d2, a.phi_d2}) {
            CHECK(v >= 0.0);
            CHECK(v < 2 * pi);
        }
    }
    CHECK(random_angles(11, 0).phi_d2 != random_angles(11, 1).phi_d2);
}

TEST_CASE("brute_force_phase_oracle") {
    SUBCASE("single subarray reaches eta N^2 M up to grid resolution") {
        const auto cfg = validate_config(sized(3, 2, 2, 2, 2, 1.0));
        const auto res = brute_force_phase_oracle(cfg, 16);
        const double closed = eta(cfg) * 16.0 * 3.0;
        CHECK(res.evaluated == 16);
        CHECK(res.best_gain <= closed * (1.0 + 1e-9));
        CHECK(res.best_gain >= closed * std::pow(std::cos(pi / 16), 2) - 1e-9);
    }
    SUBCASE("two subarrays never beat the closed form beyond the slack") {
        const auto cfg = validate_config(sized(2, 4, 2, 2, 2, 1.0));
        const auto res = brute_force_phase_oracle(cfg, 16);
        CHECK(res.evaluated == 256);
        CHECK(res.best_gain <= los_array_gain(cfg, optimal_phases(cfg)) + grid_resolution_slack(cfg, 16));
    }
    SUBCASE("specular reflection: N^2 M is attained on the grid") {
        SystemConfig raw = sized(2, 4, 4, 2, 2, 1.0);
        raw.angles.theta_d2 = raw.angles.theta_a1;
        raw.angles.phi_d2 = raw.angles.phi_a1;
        const auto res = brute_force_phase_oracle(validate_config(raw), 8);
        CHECK(res.best_gain == doctest::Approx(16.0 * 16.0 * 2.0).epsilon(1e-12));
    }
    SUBCASE("search-space cap") {
        CHECK_THROWS_AS(brute_force_phase_oracle(validate_config(sized(1, 4, 4, 1, 1, 1.0)), 4), std::invalid_argument);
        CHECK_THROWS_AS(brute_force_phase_oracle(validate_config(sized(1, 2, 2, 2, 2, 1.0)), 33), std::invalid_argument);
    }
}

TEST_CASE("write_sweep_csv sorts rows and leaves missing metrics empty") {
    std::vector<SweepRow> rows(3);
    rows[0] = {"subarray", "K", 5.0, 1.5, 0.25, 2.0, std::nullopt};
    rows[1] = {"element", "K", 5.0, std::nullopt, std::nullopt, 3.0, 0.125};
    rows[2] = {"subarray", "K", 1.0, std::nullopt, std::nullopt, 1.0, std::nullopt};
    CHECK(csv(rows) ==
          "scheme,var_name,var_value,se_mc,se_mc_stderr,se_ub,ee\n"
          "element,K,5,,,3,0.125\n"
          "subarray,K,1,,,1,\n"
          "subarray,K,5,1.5,0.25,2,\n");
}

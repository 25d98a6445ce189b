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

#include <cmath>
#include <limits>
#include <set>
#include <tuple>
#include <vector>
#include <utility>

#include "subris/config.hpp"

using namespace subris;

namespace {

SystemConfig grid(int Nx, int Ny, int Lx, int Ly) {
    SystemConfig c;
    c.Nx = Nx;
    c.Ny = Ny;
    c.Lx = Lx;
    c.Ly = Ly;
    return c;
}

std::string failing_field(const SystemConfig& c) {
    try {
        validate_config(c);
    } catch (const ConfigError& e) {
        return e.field();
    }
    return "";
}

}  // namespace

TEST_CASE("reference grid validates with Q=256, L=4") {
    const auto cfg = validate_config(grid(32, 32, 2, 2));
    CHECK(cfg.N() == 1024);
    CHECK(cfg.Q() == 256);
    CHECK(cfg.L() == 4);
    CHECK(cfg.Qx() == 16);
    CHECK(cfg.Qy() == 16);
}

TEST_CASE("element-based degeneration: Lx=Ly=1 gives Q=N") {
    const auto cfg = validate_config(grid(32, 32, 1, 1));
    CHECK(cfg.Q() == cfg.N());
    CHECK(cfg.L() == 1);
}

TEST_CASE("non-square subarrays are accepted") {
    const auto cfg = validate_config(grid(6, 4, 3, 2));
    CHECK(cfg.Q() == 4);
    CHECK(cfg.L() == 6);
}

TEST_CASE("validation reports the offending field") {
    CHECK(failing_field(grid(4, 4, 3, 1)) == "Lx");
    CHECK(failing_field(grid(4, 6, 1, 4)) == "Ly");
    CHECK(failing_field(grid(0, 4, 1, 1)) == "Nx");
    CHECK(failing_field(grid(4, 4, 0, 1)) == "Lx");

    SystemConfig c;
    c.M = 0;
    CHECK(failing_field(c) == "M");
    c = {};
    c.P = 0.0;
    CHECK(failing_field(c) == "P");
    c = {};
    c.sigma_w2 = -1.0;
    CHECK(failing_field(c) == "sigma_w2");
    c = {};
    c.d2_over_lambda = 0.0;
    CHECK(failing_field(c) == "d2_over_lambda");
    c = {};
    c.K1 = -0.5;
    CHECK(failing_field(c) == "K1");
    c = {};
    c.K2 = std::numeric_limits<double>::quiet_NaN();
    CHECK(failing_field(c) == "K2");
    c = {};
    c.angles.phi_d2 = std::numeric_limits<double>::infinity();
    CHECK(failing_field(c) == "phi_d2");
}

TEST_CASE("infinite Rician factor is a valid pure-LoS sentinel") {
    SystemConfig c;
    c.K1 = std::numeric_limits<double>::infinity();
    c.K2 = std::numeric_limits<double>::infinity();
    CHECK_NOTHROW(validate_config(c));
}

TEST_CASE("angles are stored without range reduction") {
    SystemConfig c;
    c.angles.theta_a1 = 17.5;
    CHECK(validate_config(c).angles().theta_a1 == 17.5);
}

TEST_CASE("subarray_origin follows row-major subarray order") {
    const auto cfg = validate_config(grid(4, 4, 2, 2));
    // Zero-based: index 1 is the second subarray in the first row.
    CHECK(subarray_origin(cfg, 0) == SubarrayOrigin{0, 0});
    CHECK(subarray_origin(cfg, 1) == SubarrayOrigin{0, 2});
    CHECK(subarray_origin(cfg, 2) == SubarrayOrigin{2, 0});
    CHECK(subarray_origin(cfg, 3) == SubarrayOrigin{2, 2});
    CHECK_THROWS_AS(subarray_origin(cfg, 4), std::out_of_range);
}

TEST_CASE("element_index places each subarray contiguously, x-major inside") {
    const auto cfg = validate_config(grid(4, 4, 2, 2));
    CHECK(element_index(cfg, 0, 0, 0) == 0);
    CHECK(element_index(cfg, 1, 0, 0) == 4);
    CHECK(element_index(cfg, 0, 1, 0) == 2);
    CHECK(element_index(cfg, 0, 0, 1) == 1);
    CHECK_THROWS_AS(element_index(cfg, 0, 2, 0), std::out_of_range);
    CHECK_THROWS_AS(element_index(cfg, 4, 0, 0), std::out_of_range);
}

TEST_CASE("element_index is a bijection and origins tile the grid") {
    const std::vector<std::tuple<int, int, int, int>> shapes{{4, 4, 2, 2}, {6, 4, 3, 2}, {5, 3, 5, 1}, {8, 8, 4, 2}, {3, 3, 1, 1}};
    for (const auto& [Nx, Ny, Lx, Ly] : shapes) {
        const auto cfg = validate_config(grid(Nx, Ny, Lx, Ly));
        std::set<std::size_t> seen;
        std::set<std::pair<std::size_t, std::size_t>> coords;
        for (std::size_t q = 0; q < cfg.Q(); ++q) {
            const auto o = subarray_origin(cfg, q);
            for (std::size_t lx = 0; lx < cfg.Lx(); ++lx) {
                for (std::size_t ly = 0; ly < cfg.Ly(); ++ly) {
                    seen.insert(element_index(cfg, q, lx, ly));
                    coords.insert({o.x + lx, o.y + ly});
                }
            }
        }
        CHECK(seen.size() == cfg.N());
        CHECK(*seen.rbegin() == cfg.N() - 1);
        CHECK(coords.size() == cfg.N());
    }
}

TEST_CASE("with Lx=Ly=1 origins enumerate every element and index equals q") {
    const auto cfg = validate_config(grid(3, 5, 1, 1));
    std::set<std::pair<std::size_t, std::size_t>> coords;
    for (std::size_t q = 0; q < cfg.Q(); ++q) {
        const auto o = subarray_origin(cfg, q);
        coords.insert({o.x, o.y});
        CHECK(element_index(cfg, q, 0, 0) == q);
    }
    CHECK(coords.size() == cfg.N());
}

TEST_CASE("with_subarray_shape revalidates") {
    const auto cfg = validate_config(grid(4, 4, 2, 2));
    CHECK(with_subarray_shape(cfg, 1, 1).Q() == 16);
    CHECK_THROWS_AS(with_subarray_shape(cfg, 3, 3), ConfigError);
}

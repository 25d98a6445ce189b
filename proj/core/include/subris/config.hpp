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
#include <numbers>
#include <stdexcept>
#include <string>

namespace subris {

/// Propagation angles in radians. No range reduction is applied.
struct Angles {
    double theta_d1 = std::numbers::pi / 2.0;        ///< AoD at the BS ULA
    double theta_a1 = 2.0 * std::numbers::pi / 3.0;  ///< elevation AoA at the RIS
    double phi_a1 = 7.0 * std::numbers::pi / 6.0;    ///< azimuth AoA at the RIS
    double theta_d2 = 5.0 * std::numbers::pi / 3.0;  ///< elevation AoD at the RIS
    double phi_d2 = 4.0 * std::numbers::pi / 3.0;    ///< azimuth AoD at the RIS
};

/// Raw system parameters as read from a config file or the command line.
///
/// The defaults reproduce the reference numerical setup: a 64-antenna BS,
/// a 32x32 RIS grouped into 2x2 subarrays, half-wavelength spacing and a
/// 10 dB transmit SNR. Rician factors are linear; `+inf` selects pure LoS.
struct SystemConfig {
    int M = 64;
    int Nx = 32;
    int Ny = 32;
    int Lx = 2;
    int Ly = 2;
    double d1_over_lambda = 0.5;
    double d2_over_lambda = 0.5;
    double K1 = 10.0;
    double K2 = 10.0;
    double P = 10.0;
    double sigma_w2 = 1.0;
    Angles angles{};
};

/// Raised for any configuration that violates a structural invariant.
class ConfigError : public std::invalid_argument {
public:
    ConfigError(std::string field, const std::string& message);

    /// Name of the offending field, e.g. "Lx".
    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

/// A configuration that passed `validate_config`, with derived sizes cached.
///
/// Instances are immutable and can be shared freely between threads.
class ValidatedConfig {
public:
    const SystemConfig& params() const noexcept { return params_; }
    const Angles& angles() const noexcept { return params_.angles; }

    std::size_t M() const noexcept { return M_; }
    std::size_t Nx() const noexcept { return Nx_; }
    std::size_t Ny() const noexcept { return Ny_; }
    std::size_t Lx() const noexcept { return Lx_; }
    std::size_t Ly() const noexcept { return Ly_; }
    std::size_t Qx() const noexcept { return Nx_ / Lx_; }
    std::size_t Qy() const noexcept { return Ny_ / Ly_; }
    std::size_t Q() const noexcept { return Qx() * Qy(); }
    std::size_t L() const noexcept { return Lx_ * Ly_; }
    std::size_t N() const noexcept { return Nx_ * Ny_; }

    double snr() const noexcept { return params_.P / params_.sigma_w2; }

private:
    friend ValidatedConfig validate_config(const SystemConfig& cfg);
    explicit ValidatedConfig(const SystemConfig& cfg);

    SystemConfig params_;
    std::size_t M_, Nx_, Ny_, Lx_, Ly_;
};

/// Checks every invariant and throws ConfigError naming the first bad field.
ValidatedConfig validate_config(const SystemConfig& cfg);

/// Same configuration with a different subarray shape. Lx = Ly = 1 yields
/// the element-based RIS.
ValidatedConfig with_subarray_shape(const ValidatedConfig& cfg, int Lx, int Ly);

/// Same configuration with both Rician factors set to `K`.
ValidatedConfig with_rician_factor(const ValidatedConfig& cfg, double K);

/// Zero-based grid coordinates of the first element of a subarray.
struct SubarrayOrigin {
    std::size_t x;
    std::size_t y;

    friend bool operator==(const SubarrayOrigin&, const SubarrayOrigin&) = default;
};

/// Subarrays are numbered row-major over the Qx x Qy grid:
/// q = qx * Qy + qy, origin = (qx * Lx, qy * Ly). All indices zero-based.
SubarrayOrigin subarray_origin(const ValidatedConfig& cfg, std::size_t q);

/// Flat element index n = q * L + lx * Ly + ly. Elements of one subarray are
/// contiguous, x-major inside the subarray (the UPA Kronecker order).
std::size_t element_index(const ValidatedConfig& cfg, std::size_t q, std::size_t lx, std::size_t ly);

}  // namespace subris

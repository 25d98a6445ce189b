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

#include "subris/config.hpp"

#include <cmath>
#include <string>

namespace subris {

namespace {

void require_positive_count(int value, const char* field) {
    if (value < 1) {
        throw ConfigError(field, "must be >= 1, got " + std::to_string(value));
    }
}

void require_positive_finite(double value, const char* field) {
    if (!std::isfinite(value) || value <= 0.0) {
        throw ConfigError(field, "must be finite and > 0, got " + std::to_string(value));
    }
}

// Rician factors accept +inf (pure LoS) but never NaN or negatives.
void require_rician_factor(double value, const char* field) {
    if (std::isnan(value) || value < 0.0) {
        throw ConfigError(field, "must be >= 0 (or inf), got " + std::to_string(value));
    }
}

void require_finite_angle(double value, const char* field) {
    if (!std::isfinite(value)) {
        throw ConfigError(field, "angle must be finite");
    }
}

}  // namespace

ConfigError::ConfigError(std::string field, const std::string& message)
    : std::invalid_argument(field + ": " + message), field_(std::move(field)) {}

ValidatedConfig::ValidatedConfig(const SystemConfig& cfg)
    : params_(cfg),
      M_(static_cast<std::size_t>(cfg.M)),
      Nx_(static_cast<std::size_t>(cfg.Nx)),
      Ny_(static_cast<std::size_t>(cfg.Ny)),
      Lx_(static_cast<std::size_t>(cfg.Lx)),
      Ly_(static_cast<std::size_t>(cfg.Ly)) {}

ValidatedConfig validate_config(const SystemConfig& cfg) {
    require_positive_count(cfg.M, "M");
    require_positive_count(cfg.Nx, "Nx");
    require_positive_count(cfg.Ny, "Ny");
    require_positive_count(cfg.Lx, "Lx");
    require_positive_count(cfg.Ly, "Ly");
    if (cfg.Nx % cfg.Lx != 0) {
        throw ConfigError("Lx", "Lx=" + std::to_string(cfg.Lx) + " does not divide Nx=" + std::to_string(cfg.Nx));
    }
    if (cfg.Ny % cfg.Ly != 0) {
        throw ConfigError("Ly", "Ly=" + std::to_string(cfg.Ly) + " does not divide Ny=" + std::to_string(cfg.Ny));
    }
    require_positive_finite(cfg.d1_over_lambda, "d1_over_lambda");
    require_positive_finite(cfg.d2_over_lambda, "d2_over_lambda");
    require_rician_factor(cfg.K1, "K1");
    require_rician_factor(cfg.K2, "K2");
    require_positive_finite(cfg.P, "P");
    require_positive_finite(cfg.sigma_w2, "sigma_w2");
    require_finite_angle(cfg.angles.theta_d1, "theta_d1");
    require_finite_angle(cfg.angles.theta_a1, "theta_a1");
    require_finite_angle(cfg.angles.phi_a1, "phi_a1");
    require_finite_angle(cfg.angles.theta_d2, "theta_d2");
    require_finite_angle(cfg.angles.phi_d2, "phi_d2");
    return ValidatedConfig(cfg);
}

ValidatedConfig with_subarray_shape(const ValidatedConfig& cfg, int Lx, int Ly) {
    SystemConfig raw = cfg.params();
    raw.Lx = Lx;
    raw.Ly = Ly;
    return validate_config(raw);
}

ValidatedConfig with_rician_factor(const ValidatedConfig& cfg, double K) {
    SystemConfig raw = cfg.params();
    raw.K1 = K;
    raw.K2 = K;
    return validate_config(raw);
}

SubarrayOrigin subarray_origin(const ValidatedConfig& cfg, std::size_t q) {
    if (q >= cfg.Q()) {
        throw std::out_of_range("subarray index " + std::to_string(q) + " out of range [0, " +
                                std::to_string(cfg.Q()) + ")");
    }
    const std::size_t qx = q / cfg.Qy();
    const std::size_t qy = q % cfg.Qy();
    return {qx * cfg.Lx(), qy * cfg.Ly()};
}

std::size_t element_index(const ValidatedConfig& cfg, std::size_t q, std::size_t lx, std::size_t ly) {
    if (q >= cfg.Q() || lx >= cfg.Lx() || ly >= cfg.Ly()) {
        throw std::out_of_range("element coordinates out of range");
    }
    return q * cfg.L() + lx * cfg.Ly() + ly;
}

}  // namespace subris

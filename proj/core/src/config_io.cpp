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

#include "subris/config_io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace subris {

namespace {

using nlohmann::json;

int read_count(const json& value, const std::string& field) {
    if (!value.is_number_integer()) {
        throw ConfigError(field, "expected an integer");
    }
    return value.get<int>();
}

double read_real(const json& value, const std::string& field) {
    if (!value.is_number()) {
        throw ConfigError(field, "expected a number");
    }
    return value.get<double>();
}

double read_rician(const json& value, const std::string& field) {
    if (value.is_string()) {
        const auto text = value.get<std::string>();
        if (text == "inf" || text == "infinity" || text == "Infinity") {
            return std::numeric_limits<double>::infinity();
        }
        throw ConfigError(field, "expected a number or \"inf\", got \"" + text + "\"");
    }
    return read_real(value, field);
}

void read_angles(const json& node, Angles& angles) {
    if (!node.is_object()) {
        throw ConfigError("angles", "expected an object");
    }
    for (const auto& [key, value] : node.items()) {
        if (key == "theta_d1") angles.theta_d1 = read_real(value, key);
        else if (key == "theta_a1") angles.theta_a1 = read_real(value, key);
        else if (key == "phi_a1") angles.phi_a1 = read_real(value, key);
        else if (key == "theta_d2") angles.theta_d2 = read_real(value, key);
        else if (key == "phi_d2") angles.phi_d2 = read_real(value, key);
        else throw ConfigError(key, "unknown angle key");
    }
}

json rician_to_json(double K) {
    if (std::isinf(K)) {
        return "inf";
    }
    return K;
}

}  // namespace

SystemConfig config_from_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError("<document>", std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ConfigError("<document>", "top level must be an object");
    }

    SystemConfig cfg;
    for (const auto& [key, value] : doc.items()) {
        if (key == "M") cfg.M = read_count(value, key);
        else if (key == "Nx") cfg.Nx = read_count(value, key);
        else if (key == "Ny") cfg.Ny = read_count(value, key);
        else if (key == "Lx") cfg.Lx = read_count(value, key);
        else if (key == "Ly") cfg.Ly = read_count(value, key);
        else if (key == "d1_over_lambda") cfg.d1_over_lambda = read_real(value, key);
        else if (key == "d2_over_lambda") cfg.d2_over_lambda = read_real(value, key);
        else if (key == "K1") cfg.K1 = read_rician(value, key);
        else if (key == "K2") cfg.K2 = read_rician(value, key);
        else if (key == "P") cfg.P = read_real(value, key);
        else if (key == "sigma_w2") cfg.sigma_w2 = read_real(value, key);
        else if (key == "angles") read_angles(value, cfg.angles);
        else throw ConfigError(key, "unknown config key");
    }
    return cfg;
}

SystemConfig load_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("<file>", "cannot open " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return config_from_json(buffer.str());
}

std::string config_to_json(const SystemConfig& cfg) {
    json doc = {
        {"M", cfg.M},
        {"Nx", cfg.Nx},
        {"Ny", cfg.Ny},
        {"Lx", cfg.Lx},
        {"Ly", cfg.Ly},
        {"d1_over_lambda", cfg.d1_over_lambda},
        {"d2_over_lambda", cfg.d2_over_lambda},
        {"K1", rician_to_json(cfg.K1)},
        {"K2", rician_to_json(cfg.K2)},
        {"P", cfg.P},
        {"sigma_w2", cfg.sigma_w2},
        {"angles",
         {{"theta_d1", cfg.angles.theta_d1},
          {"theta_a1", cfg.angles.theta_a1},
          {"phi_a1", cfg.angles.phi_a1},
          {"theta_d2", cfg.angles.theta_d2},
          {"phi_d2", cfg.angles.phi_d2}}},
    };
    return doc.dump(2);
}

}  // namespace subris

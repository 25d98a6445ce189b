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

#include <filesystem>
#include <string>
#include <string_view>

#include "subris/config.hpp"

namespace subris {

/// Parses a JSON config document. Keys mirror the SystemConfig field names;
/// angles live under an "angles" object. Missing keys keep their defaults.
/// K1/K2 accept a number or the string "inf". Unknown keys and type
/// mismatches raise ConfigError. The result is not validated.
SystemConfig config_from_json(std::string_view text);

SystemConfig load_config_file(const std::filesystem::path& path);

/// Inverse of config_from_json; infinite Rician factors are written as "inf".
std::string config_to_json(const SystemConfig& cfg);

}  // namespace subris

// SPDX-License-Identifier: Apache-2.0
//
// lcxsim - leaky-coaxial pinching-antenna downlink simulator
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
// ------------------------------------------------------------------------

#include "lcx/scenario.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "lcx/rng.hpp"

namespace lcx {

double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

double watts_to_dbm(double watts) {
    if (!(watts > 0.0)) {
        throw std::domain_error("watts_to_dbm: power must be positive, got " +
                                std::to_string(watts));
    }
    return 10.0 * std::log10(watts) + 30.0;
}

void ScenarioConfig::validate() const {
    auto fail = [](const std::string& msg) { throw std::invalid_argument("ScenarioConfig: " + msg); };
    if (!(carrier_freq_hz > 0.0)) fail("carrier_freq_hz must be positive");
    if (!(attenuation_db_per_m >= 0.0)) fail("attenuation_db_per_m must be nonnegative");
    if (!(relative_permittivity >= 1.0)) fail("relative_permittivity must be >= 1");
    if (!(cable_height_m > 0.0)) fail("cable_height_m must be positive");
    if (!(region_x_m > 0.0)) fail("region_x_m must be positive");
    if (!(region_y_m > 0.0)) fail("region_y_m must be positive");
    if (num_slots < 1) fail("num_slots must be a positive integer");
    if (!(slot_spacing_m > 0.0)) fail("slot_spacing_m must be positive");
    if (num_users < 1) fail("num_users must be a positive integer");
    if (num_scatterers < 0) fail("num_scatterers must be nonnegative");
    if (!(target_rate_bps_hz >= 0.0)) fail("target_rate_bps_hz must be nonnegative");
    if (!(wall_height_m > 0.0)) fail("wall_height_m must be positive");
    if (!std::isfinite(noise_power_dbm) || !std::isfinite(transmit_power_dbm))
        fail("power levels must be finite");
    const double span = static_cast<double>(num_slots - 1) * slot_spacing_m;
    if (span > region_x_m + 1e-12 * region_x_m)
        fail("slots extend past the region: (num_slots - 1) * slot_spacing_m = " +
             std::to_string(span) + " > region_x_m = " + std::to_string(region_x_m));
}

Eigen::Vector3d slot_position(const ScenarioConfig& config, int slot_index) {
    if (slot_index < 1 || slot_index > config.num_slots) {
        throw std::out_of_range("slot_position: slot index " + std::to_string(slot_index) +
                                " outside 1.." + std::to_string(config.num_slots));
    }
    const double x = -0.5 * config.region_x_m +
                     static_cast<double>(slot_index - 1) * config.slot_spacing_m;
    return {x, 0.0, config.cable_height_m};
}

Eigen::Vector3d feed_position(const ScenarioConfig& config) {
    return {-0.5 * config.region_x_m, 0.0, config.cable_height_m};
}

ScenarioInstance sample_scenario(const ScenarioConfig& config) {
    config.validate();
    ScenarioInstance inst;
    inst.config = config;

    Rng rng(config.rng_seed);

    inst.user_positions.reserve(config.num_users);
    for (int n = 0; n < config.num_users; ++n) {
        const double x = rng.uniform(-0.5 * config.region_x_m, 0.5 * config.region_x_m);
        const double y = rng.uniform(-0.5 * config.region_y_m, 0.5 * config.region_y_m);
        inst.user_positions.emplace_back(x, y, 0.0);
    }

    // Scatterers go on the four vertical boundary walls, picked in
    // proportion to wall width so placement is uniform over the boundary
    // surface. Wall order: y = -Dy/2, y = +Dy/2, x = -Dx/2, x = +Dx/2.
    const double dx = config.region_x_m;
    const double dy = config.region_y_m;
    const double perimeter = 2.0 * (dx + dy);
    inst.scatterer_positions.reserve(config.num_scatterers);
    for (int l = 0; l < config.num_scatterers; ++l) {
        const double along = rng.uniform01() * perimeter;
        const double u_pos = rng.uniform01();
        const double z = config.wall_height_m * (1.0 - rng.uniform01());  // (0, wall_height]
        Eigen::Vector3d p;
        if (along < dx) {
            p = {-0.5 * dx + u_pos * dx, -0.5 * dy, z};
        } else if (along < 2.0 * dx) {
            p = {-0.5 * dx + u_pos * dx, 0.5 * dy, z};
        } else if (along < 2.0 * dx + dy) {
            p = {-0.5 * dx, -0.5 * dy + u_pos * dy, z};
        } else {
            p = {0.5 * dx, -0.5 * dy + u_pos * dy, z};
        }
        inst.scatterer_positions.push_back(p);
    }

    inst.scatterer_gains.reserve(config.num_scatterers);
    for (int l = 0; l < config.num_scatterers; ++l) {
        inst.scatterer_gains.push_back(rng.complex_normal());
    }
    return inst;
}

namespace {

struct KeyValue {
    std::string key;
    std::string value;
    int line;
};

std::vector<KeyValue> tokenize_config(const std::string& text, const std::string& origin) {
    std::vector<KeyValue> out;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        auto last = line.find_last_not_of(" \t\r");
        line = line.substr(first, last - first + 1);

        auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument(origin + ":" + std::to_string(lineno) +
                                        ": expected 'key = value', got '" + line + "'");
        }
        std::string key = line.substr(0, eq);
        std::string value = line.substr(eq + 1);
        auto trim = [](std::string& s) {
            auto b = s.find_first_not_of(" \t");
            auto e = s.find_last_not_of(" \t");
            s = (b == std::string::npos) ? std::string() : s.substr(b, e - b + 1);
        };
        trim(key);
        trim(value);
        if (key.empty() || value.empty()) {
            throw std::invalid_argument(origin + ":" + std::to_string(lineno) +
                                        ": empty key or value");
        }
        out.push_back({key, value, lineno});
    }
    return out;
}

double parse_double(const KeyValue& kv, const std::string& origin) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(kv.value, &pos);
        if (pos != kv.value.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument(origin + ":" + std::to_string(kv.line) + ": key '" + kv.key +
                                    "' has non-numeric value '" + kv.value + "'");
    }
}

long long parse_int(const KeyValue& kv, const std::string& origin) {
    try {
        std::size_t pos = 0;
        const long long v = std::stoll(kv.value, &pos);
        if (pos != kv.value.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument(origin + ":" + std::to_string(kv.line) + ": key '" + kv.key +
                                    "' has non-integer value '" + kv.value + "'");
    }
}

std::uint64_t parse_u64(const KeyValue& kv, const std::string& origin) {
    try {
        std::size_t pos = 0;
        const unsigned long long v = std::stoull(kv.value, &pos);
        if (pos != kv.value.size()) throw std::invalid_argument("trailing characters");
        return static_cast<std::uint64_t>(v);
    } catch (const std::exception&) {
        throw std::invalid_argument(origin + ":" + std::to_string(kv.line) + ": key '" + kv.key +
                                    "' has non-integer value '" + kv.value + "'");
    }
}

}  // namespace

ScenarioConfig parse_config(const std::string& text, const std::string& origin) {
    ScenarioConfig cfg;
    bool have_spacing = false;
    bool have_wall_height = false;
    std::set<std::string> seen;

    for (const auto& kv : tokenize_config(text, origin)) {
        if (!seen.insert(kv.key).second) {
            throw std::invalid_argument(origin + ":" + std::to_string(kv.line) +
                                        ": duplicate key '" + kv.key + "'");
        }
        if (kv.key == "carrier_freq_hz") {
            cfg.carrier_freq_hz = parse_double(kv, origin);
        } else if (kv.key == "noise_power_dbm") {
            cfg.noise_power_dbm = parse_double(kv, origin);
        } else if (kv.key == "transmit_power_dbm") {
            cfg.transmit_power_dbm = parse_double(kv, origin);
        } else if (kv.key == "attenuation_db_per_m") {
            cfg.attenuation_db_per_m = parse_double(kv, origin);
        } else if (kv.key == "relative_permittivity") {
            cfg.relative_permittivity = parse_double(kv, origin);
        } else if (kv.key == "cable_height_m") {
            cfg.cable_height_m = parse_double(kv, origin);
        } else if (kv.key == "region_x_m") {
            cfg.region_x_m = parse_double(kv, origin);
        } else if (kv.key == "region_y_m") {
            cfg.region_y_m = parse_double(kv, origin);
        } else if (kv.key == "num_slots") {
            cfg.num_slots = static_cast<int>(parse_int(kv, origin));
        } else if (kv.key == "slot_spacing_m") {
            cfg.slot_spacing_m = parse_double(kv, origin);
            have_spacing = true;
        } else if (kv.key == "num_users") {
            cfg.num_users = static_cast<int>(parse_int(kv, origin));
        } else if (kv.key == "num_scatterers") {
            cfg.num_scatterers = static_cast<int>(parse_int(kv, origin));
        } else if (kv.key == "target_rate_bps_hz") {
            cfg.target_rate_bps_hz = parse_double(kv, origin);
        } else if (kv.key == "wall_height_m") {
            cfg.wall_height_m = parse_double(kv, origin);
            have_wall_height = true;
        } else if (kv.key == "rng_seed") {
            cfg.rng_seed = parse_u64(kv, origin);
        } else {
            throw std::invalid_argument(origin + ":" + std::to_string(kv.line) +
                                        ": unknown key '" + kv.key + "'");
        }
    }

    if (!have_spacing && cfg.num_slots > 0) {
        cfg.slot_spacing_m = cfg.region_x_m / static_cast<double>(cfg.num_slots);
    }
    if (!have_wall_height) {
        cfg.wall_height_m = cfg.cable_height_m;
    }
    cfg.validate();
    return cfg;
}

ScenarioConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open config file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), path);
}

}  // namespace lcx

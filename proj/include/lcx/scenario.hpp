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

#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace lcx {

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s

/// dBm -> watts; bijective with watts_to_dbm.
double dbm_to_watts(double dbm);
double watts_to_dbm(double watts);

/// Full physical and protocol parameterization of one deployment. Defaults
/// are the reference setup used throughout the test suite: 3.5 GHz carrier,
/// -64 dBm noise, 0.1 dB/m cable attenuation, eps_r = 1.26, 3 m cable
/// height, 50 m x 20 m region, 50 slots at 1 m spacing, 4 users, 20 wall
/// scatterers, 0.5 bits/s/Hz target rate.
struct ScenarioConfig {
    double carrier_freq_hz = 3.5e9;
    double noise_power_dbm = -64.0;
    double transmit_power_dbm = 20.0;
    double attenuation_db_per_m = 0.1;   // in-cable attenuation constant
    double relative_permittivity = 1.26;
    double cable_height_m = 3.0;
    double region_x_m = 50.0;
    double region_y_m = 20.0;
    int num_slots = 50;
    double slot_spacing_m = 1.0;
    int num_users = 4;
    int num_scatterers = 20;
    double target_rate_bps_hz = 0.5;
    double wall_height_m = 3.0;  // scatterer placement height range (0, wall_height]
    std::uint64_t rng_seed = 1;

    double wavelength_m() const { return kSpeedOfLight / carrier_freq_hz; }
    double noise_power_w() const { return dbm_to_watts(noise_power_dbm); }
    double transmit_power_w() const { return dbm_to_watts(transmit_power_dbm); }
    /// Transmit-power-to-noise ratio P_t / sigma^2 in linear units.
    double snr_linear() const { return transmit_power_w() / noise_power_w(); }

    /// Throws std::invalid_argument on any violated invariant, including
    /// slots extending past the region's x-extent.
    void validate() const;
};

/// One sampled deployment: user drops, wall scatterers and their complex
/// gains. Immutable after construction and safe to share across threads.
struct ScenarioInstance {
    ScenarioConfig config;
    std::vector<Eigen::Vector3d> user_positions;       // (x, y, 0)
    std::vector<Eigen::Vector3d> scatterer_positions;  // on the four boundary walls
    std::vector<std::complex<double>> scatterer_gains;
};

/// Position of slot k (1-based): (-D_x/2 + (k-1)*spacing, 0, height).
/// Throws std::out_of_range unless 1 <= k <= num_slots.
Eigen::Vector3d slot_position(const ScenarioConfig& config, int slot_index);

/// Cable feed point (-D_x/2, 0, height); coincides with slot 1.
Eigen::Vector3d feed_position(const ScenarioConfig& config);

/// Draws users uniformly over the ground rectangle and scatterers uniformly
/// over the four boundary walls (height uniform in (0, wall_height]), with
/// i.i.d. CN(0,1) path gains. Pure: identical (config, seed) gives a
/// bit-identical instance.
ScenarioInstance sample_scenario(const ScenarioConfig& config);

/// Flat key-value config file ("key = value", '#' comments). Keys match the
/// ScenarioConfig field names; omitted keys keep their defaults, except
/// slot_spacing_m (defaults to region_x_m / num_slots) and wall_height_m
/// (defaults to cable_height_m). Unknown keys are errors.
ScenarioConfig parse_config(const std::string& text, const std::string& origin = "<string>");
ScenarioConfig load_config_file(const std::string& path);

}  // namespace lcx

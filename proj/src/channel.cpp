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

#include "lcx/channel.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace lcx {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kMinSeparation = 1e-12;  // meters; below this, geometry is degenerate

std::complex<double> unit_phasor(double phase) { return {std::cos(phase), std::sin(phase)}; }

double checked_distance(const Eigen::Vector3d& a, const Eigen::Vector3d& b, const char* what) {
    const double r = (a - b).norm();
    if (r < kMinSeparation) {
        throw std::domain_error(std::string("channel: coincident ") + what);
    }
    return r;
}

// Shared entry kernel so the serial reference and the OpenMP version are
// arithmetically identical per entry.
std::complex<double> composite_entry(const ScenarioConfig& config, const ScenarioInstance& instance,
                                     int slot_index, int user_index) {
    const Eigen::Vector3d slot = slot_position(config, slot_index);
    const Eigen::Vector3d& user = instance.user_positions[static_cast<std::size_t>(user_index)];
    const std::complex<double> direct = los_channel(config, slot, user);
    const std::complex<double> scattered = nlos_channel(config, instance, slot, user);
    return guided_channel(config, slot_index) * (direct + scattered);
}

std::complex<double> fixed_antenna_entry(const ScenarioConfig& config,
                                         const ScenarioInstance& instance, int element_index,
                                         int user_index) {
    const double lambda = config.wavelength_m();
    const double eta = lambda / (4.0 * kPi);
    const double wavenumber = 2.0 * kPi / lambda;
    const Eigen::Vector3d elem = fixed_antenna_element_position(config, element_index);
    const Eigen::Vector3d& user = instance.user_positions[static_cast<std::size_t>(user_index)];

    const double r = checked_distance(user, elem, "antenna element and user");
    std::complex<double> h = eta * unit_phasor(-wavenumber * r) / r;

    for (std::size_t l = 0; l < instance.scatterer_positions.size(); ++l) {
        const Eigen::Vector3d& scat = instance.scatterer_positions[l];
        const double r1 = checked_distance(scat, elem, "scatterer and antenna element");
        const double r2 = checked_distance(user, scat, "scatterer and user");
        h += eta * instance.scatterer_gains[l] * unit_phasor(-wavenumber * (r1 + r2)) / (r1 * r2);
    }
    return h;
}

template <typename EntryFn>
ChannelMatrix synthesize_parallel(int num_slots, int num_users, EntryFn&& entry) {
    ChannelMatrix ch;
    ch.entries.resize(num_slots, num_users);
#pragma omp parallel for collapse(2) schedule(static)
    for (int n = 0; n < num_users; ++n) {
        for (int k = 0; k < num_slots; ++k) {
            ch.entries(k, n) = entry(k + 1, n);
        }
    }
    return ch;
}

template <typename EntryFn>
ChannelMatrix synthesize_serial(int num_slots, int num_users, EntryFn&& entry) {
    ChannelMatrix ch;
    ch.entries.resize(num_slots, num_users);
    for (int n = 0; n < num_users; ++n) {
        for (int k = 0; k < num_slots; ++k) {
            ch.entries(k, n) = entry(k + 1, n);
        }
    }
    return ch;
}

}  // namespace

std::complex<double> guided_channel(const ScenarioConfig& config, int slot_index) {
    if (slot_index < 1 || slot_index > config.num_slots) {
        throw std::out_of_range("guided_channel: slot index " + std::to_string(slot_index) +
                                " outside 1.." + std::to_string(config.num_slots));
    }
    const double run = static_cast<double>(slot_index - 1) * config.slot_spacing_m;
    const double magnitude = std::pow(10.0, -config.attenuation_db_per_m * run / 20.0);
    const double phase =
        -2.0 * kPi / config.wavelength_m() * std::sqrt(config.relative_permittivity) * run;
    return magnitude * unit_phasor(phase);
}

std::complex<double> los_channel(const ScenarioConfig& config, const Eigen::Vector3d& slot_pos,
                                 const Eigen::Vector3d& user_pos) {
    const double lambda = config.wavelength_m();
    const double eta = lambda / (4.0 * kPi);
    const double r = checked_distance(user_pos, slot_pos, "slot and user");
    const double sin_theta = config.cable_height_m / r;
    return eta * unit_phasor(-2.0 * kPi / lambda * r) / r * sin_theta;
}

std::complex<double> nlos_channel(const ScenarioConfig& config, const ScenarioInstance& instance,
                                  const Eigen::Vector3d& slot_pos, const Eigen::Vector3d& user_pos) {
    const double lambda = config.wavelength_m();
    const double eta = lambda / (4.0 * kPi);
    const double wavenumber = 2.0 * kPi / lambda;

    std::complex<double> sum = 0.0;
    for (std::size_t l = 0; l < instance.scatterer_positions.size(); ++l) {
        const Eigen::Vector3d& scat = instance.scatterer_positions[l];
        const double r1 = checked_distance(scat, slot_pos, "scatterer and slot");
        const double r2 = checked_distance(user_pos, scat, "scatterer and user");
        // Downward conical pattern toward the scatterer; clamped so
        // scatterers above the cable contribute nothing.
        double sin_theta = (config.cable_height_m - scat.z()) / r1;
        sin_theta = std::min(1.0, std::max(0.0, sin_theta));
        sum += instance.scatterer_gains[l] * unit_phasor(-wavenumber * (r1 + r2)) / (r1 * r2) *
               sin_theta;
    }
    return eta * sum;
}

ChannelMatrix composite_channel(const ScenarioConfig& config, const ScenarioInstance& instance) {
    return synthesize_parallel(config.num_slots, static_cast<int>(instance.user_positions.size()),
                               [&](int k, int n) { return composite_entry(config, instance, k, n); });
}

ChannelMatrix composite_channel_reference(const ScenarioConfig& config,
                                          const ScenarioInstance& instance) {
    return synthesize_serial(config.num_slots, static_cast<int>(instance.user_positions.size()),
                             [&](int k, int n) { return composite_entry(config, instance, k, n); });
}

Eigen::Vector3d fixed_antenna_element_position(const ScenarioConfig& config, int element_index) {
    if (element_index < 1 || element_index > config.num_slots) {
        throw std::out_of_range("fixed_antenna_element_position: element index " +
                                std::to_string(element_index) + " outside 1.." +
                                std::to_string(config.num_slots));
    }
    Eigen::Vector3d p = feed_position(config);
    p.x() += static_cast<double>(element_index - 1) * 0.5 * config.wavelength_m();
    return p;
}

ChannelMatrix fixed_antenna_channel(const ScenarioConfig& config, const ScenarioInstance& instance) {
    return synthesize_parallel(
        config.num_slots, static_cast<int>(instance.user_positions.size()),
        [&](int k, int n) { return fixed_antenna_entry(config, instance, k, n); });
}

ChannelMatrix fixed_antenna_channel_reference(const ScenarioConfig& config,
                                              const ScenarioInstance& instance) {
    return synthesize_serial(
        config.num_slots, static_cast<int>(instance.user_positions.size()),
        [&](int k, int n) { return fixed_antenna_entry(config, instance, k, n); });
}

void write_channel_csv(const ChannelMatrix& channel, std::ostream& out) {
    out << "k,n,re,im\n";
    char buf[96];
    for (int k = 0; k < channel.num_slots(); ++k) {
        for (int n = 0; n < channel.num_users(); ++n) {
            const std::complex<double> h = channel.entries(k, n);
            std::snprintf(buf, sizeof(buf), "%d,%d,%.17g,%.17g\n", k + 1, n + 1, h.real(),
                          h.imag());
            out << buf;
        }
    }
}

void write_channel_csv(const ChannelMatrix& channel, const std::string& path) {
    std::ofstream out(path, std::ios::binary);  // binary keeps LF endings everywhere
    if (!out) {
        throw std::runtime_error("cannot open output file: " + path);
    }
    write_channel_csv(channel, out);
    if (!out) {
        throw std::runtime_error("error writing channel CSV: " + path);
    }
}

}  // namespace lcx

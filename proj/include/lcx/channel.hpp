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
#include <iosfwd>
#include <string>

#include <Eigen/Dense>

#include "lcx/scenario.hpp"

namespace lcx {

/// Composite feed-to-user channels, one row per slot, one column per user.
/// Immutable after construction; safe for concurrent reads.
struct ChannelMatrix {
    Eigen::MatrixXcd entries;  // K x N

    int num_slots() const { return static_cast<int>(entries.rows()); }
    int num_users() const { return static_cast<int>(entries.cols()); }
    /// Channel vector of user n (0-based column index).
    Eigen::VectorXcd user_column(int n) const { return entries.col(n); }
};

/// In-cable guided channel to slot k (1-based): amplitude decays with the
/// attenuation constant over the (k-1)*spacing run, phase advances with
/// sqrt(eps_r) times the free-space wavenumber.
std::complex<double> guided_channel(const ScenarioConfig& config, int slot_index);

/// Free-space line-of-sight term with the conical slot pattern:
/// eta * exp(-j*2*pi*r/lambda) / r * sin(theta), eta = lambda/(4*pi),
/// sin(theta) = height / r. Throws std::domain_error on coincident points.
std::complex<double> los_channel(const ScenarioConfig& config, const Eigen::Vector3d& slot_pos,
                                 const Eigen::Vector3d& user_pos);

/// Sum over scatterers of the two-hop reflected paths with the slot's
/// downward pattern toward each scatterer, sin(theta) = (d - z_l) / r1
/// clamped to [0, 1]. Throws std::domain_error on coincident geometry.
std::complex<double> nlos_channel(const ScenarioConfig& config, const ScenarioInstance& instance,
                                  const Eigen::Vector3d& slot_pos, const Eigen::Vector3d& user_pos);

/// Entry (k, n) = guided_channel(k) * (los + nlos). OpenMP-parallel over
/// entries; bit-identical to composite_channel_reference.
ChannelMatrix composite_channel(const ScenarioConfig& config, const ScenarioInstance& instance);

/// Serial reference implementation kept for testing and benchmarking.
ChannelMatrix composite_channel_reference(const ScenarioConfig& config,
                                          const ScenarioInstance& instance);

/// Element i (1-based) of the comparison uniform linear array: anchored at
/// the feed position, spaced half a wavelength along x, at cable height.
Eigen::Vector3d fixed_antenna_element_position(const ScenarioConfig& config, int element_index);

/// Channels of a K-element half-wavelength ULA at the feed-point corner with
/// isotropic elements: free-space LoS plus the same scatterer sum, both
/// without the slot pattern and without the in-cable term.
ChannelMatrix fixed_antenna_channel(const ScenarioConfig& config, const ScenarioInstance& instance);
ChannelMatrix fixed_antenna_channel_reference(const ScenarioConfig& config,
                                              const ScenarioInstance& instance);

/// CSV dump with header "k,n,re,im", 1-based indices, full double precision.
void write_channel_csv(const ChannelMatrix& channel, std::ostream& out);
void write_channel_csv(const ChannelMatrix& channel, const std::string& path);

}  // namespace lcx

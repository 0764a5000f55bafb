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

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "lcx/channel.hpp"
#include "lcx/metrics.hpp"

namespace lcx {

/// The six schemes compared by the simulation harness.
enum class SchemeId {
    kFixedAntenna,
    kConventionalLcx,
    kStaticBinary,
    kDynamicBinary,
    kStaticAperture,
    kDynamicAperture,
};

inline constexpr SchemeId kAllSchemes[] = {
    SchemeId::kFixedAntenna,   SchemeId::kConventionalLcx, SchemeId::kStaticBinary,
    SchemeId::kDynamicBinary,  SchemeId::kStaticAperture,  SchemeId::kDynamicAperture,
};

std::string scheme_name(SchemeId scheme);
std::optional<SchemeId> parse_scheme(const std::string& name);

/// All slots fully open for every user.
RateReport conventional_lcx_rates(const ChannelMatrix& channel, const ScenarioConfig& config);

/// Maximum-ratio transmission per scheduled user with full power in its
/// TDMA slot: per-user rate (1/N) log2(1 + rho ||h_n||^2).
RateReport fixed_antenna_rates(const ChannelMatrix& fixed_channel, const ScenarioConfig& config);

enum class ActivationMode { kStatic, kDynamic };

struct BinaryActivationResult {
    /// One pattern in static mode, one per user in dynamic mode; entries
    /// are exactly 0 or 1 and never all zero.
    std::vector<Eigen::VectorXd> patterns;
    RateReport report;
};

/// Greedy first-improvement bit-flip local search from the all-open
/// pattern, scanning slots in ascending order until a full pass yields no
/// improving flip. Dynamic mode searches each user's normalized SNR;
/// static mode searches the QoS-filtered sum rate with one shared pattern.
/// Deterministic for identical inputs.
BinaryActivationResult binary_activation_optimize(const ChannelMatrix& channel,
                                                  const ScenarioConfig& config,
                                                  ActivationMode mode);

/// Single-user dynamic-mode search, exposed for oracle tests.
Eigen::VectorXd binary_pattern_for_user(const Eigen::VectorXcd& h);

}  // namespace lcx

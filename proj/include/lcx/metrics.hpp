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
#include <vector>

#include <Eigen/Dense>

#include "lcx/scenario.hpp"

namespace lcx {

/// Aperture coefficient vector, one entry per slot, each in [0, 1].
using ApertureVector = Eigen::VectorXd;

/// Smallest ||alpha||^2 accepted by the rate computations; excludes the
/// all-closed configuration and keeps the power normalization finite.
inline constexpr double kAlphaNormFloor = 1e-8;

/// Per-user rates with the QoS filter applied: the sum counts only users at
/// or above the target rate, outage is the fraction below it.
struct RateReport {
    Eigen::VectorXd per_user_rate;  // bits/s/Hz
    std::vector<bool> qos_met;
    double sum_rate_qos_filtered = 0.0;
    double outage_fraction = 0.0;
};

/// h_n^T alpha. Throws std::invalid_argument on dimension mismatch.
std::complex<double> effective_channel(const Eigen::VectorXcd& h, const ApertureVector& alpha);

/// |h_n^T alpha|^2 / ||alpha||^2, the rate-determining metric; invariant to
/// positive scaling of alpha. Throws std::domain_error when ||alpha||^2
/// falls below kAlphaNormFloor.
double normalized_snr(const Eigen::VectorXcd& h, const ApertureVector& alpha);

/// TDMA rate with the shared aperture vector: (1/N) log2(1 + rho * snr).
double static_rate(const Eigen::VectorXcd& h, const ApertureVector& alpha,
                   const ScenarioConfig& config);

/// Same expression with the per-user aperture vector of the user's slot.
double dynamic_rate(const Eigen::VectorXcd& h, const ApertureVector& alpha_n,
                    const ScenarioConfig& config);

/// Normalized-SNR level equivalent to the target rate under the 1/N TDMA
/// prelog: (2^(N * R_min) - 1) * sigma^2 / P_t.
double qos_threshold(const ScenarioConfig& config);

/// Applies the QoS filter and outage count to a vector of per-user rates.
RateReport build_report(const Eigen::VectorXd& rates, const ScenarioConfig& config);

}  // namespace lcx

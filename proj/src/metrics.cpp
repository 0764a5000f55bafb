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

#include "lcx/metrics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace lcx {

std::complex<double> effective_channel(const Eigen::VectorXcd& h, const ApertureVector& alpha) {
    if (h.size() != alpha.size()) {
        throw std::invalid_argument("effective_channel: dimension mismatch, " +
                                    std::to_string(h.size()) + " vs " +
                                    std::to_string(alpha.size()));
    }
    std::complex<double> sum = 0.0;
    for (Eigen::Index k = 0; k < h.size(); ++k) {
        sum += alpha[k] * h[k];
    }
    return sum;
}

double normalized_snr(const Eigen::VectorXcd& h, const ApertureVector& alpha) {
    const double norm_sq = alpha.squaredNorm();
    if (norm_sq < kAlphaNormFloor) {
        throw std::domain_error("normalized_snr: ||alpha||^2 = " + std::to_string(norm_sq) +
                                " below the aperture norm floor 1e-8");
    }
    return std::norm(effective_channel(h, alpha)) / norm_sq;
}

double static_rate(const Eigen::VectorXcd& h, const ApertureVector& alpha,
                   const ScenarioConfig& config) {
    const double rho = config.snr_linear();
    return std::log2(1.0 + rho * normalized_snr(h, alpha)) / static_cast<double>(config.num_users);
}

double dynamic_rate(const Eigen::VectorXcd& h, const ApertureVector& alpha_n,
                    const ScenarioConfig& config) {
    return static_rate(h, alpha_n, config);
}

double qos_threshold(const ScenarioConfig& config) {
    if (config.target_rate_bps_hz < 0.0) {
        throw std::invalid_argument("qos_threshold: negative target rate");
    }
    const double bits = static_cast<double>(config.num_users) * config.target_rate_bps_hz;
    return std::expm1(bits * std::log(2.0)) / config.snr_linear();
}

RateReport build_report(const Eigen::VectorXd& rates, const ScenarioConfig& config) {
    RateReport report;
    report.per_user_rate = rates;
    report.qos_met.resize(static_cast<std::size_t>(rates.size()));
    int misses = 0;
    double sum = 0.0;
    for (Eigen::Index n = 0; n < rates.size(); ++n) {
        const bool met = rates[n] >= config.target_rate_bps_hz;
        report.qos_met[static_cast<std::size_t>(n)] = met;
        if (met) {
            sum += rates[n];
        } else {
            ++misses;
        }
    }
    report.sum_rate_qos_filtered = sum;
    report.outage_fraction =
        rates.size() == 0 ? 0.0 : static_cast<double>(misses) / static_cast<double>(rates.size());
    return report;
}

}  // namespace lcx

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

#include "lcx/baselines.hpp"

#include <cmath>
#include <stdexcept>

namespace lcx {

namespace {

// Scale-aware acceptance threshold for normalized-SNR improvements.
constexpr double kFlipTol = 1e-10;

double rate_from_snr(double snr, const ScenarioConfig& config) {
    return std::log2(1.0 + config.snr_linear() * snr) / static_cast<double>(config.num_users);
}

}  // namespace

std::string scheme_name(SchemeId scheme) {
    switch (scheme) {
        case SchemeId::kFixedAntenna: return "FixedAntenna";
        case SchemeId::kConventionalLcx: return "ConventionalLcx";
        case SchemeId::kStaticBinary: return "StaticBinary";
        case SchemeId::kDynamicBinary: return "DynamicBinary";
        case SchemeId::kStaticAperture: return "StaticAperture";
        case SchemeId::kDynamicAperture: return "DynamicAperture";
    }
    throw std::invalid_argument("scheme_name: unknown scheme id");
}

std::optional<SchemeId> parse_scheme(const std::string& name) {
    for (SchemeId scheme : kAllSchemes) {
        if (scheme_name(scheme) == name) return scheme;
    }
    return std::nullopt;
}

RateReport conventional_lcx_rates(const ChannelMatrix& channel, const ScenarioConfig& config) {
    const ApertureVector all_open = ApertureVector::Ones(channel.num_slots());
    Eigen::VectorXd rates(channel.num_users());
    for (int n = 0; n < channel.num_users(); ++n) {
        rates[n] = static_rate(channel.user_column(n), all_open, config);
    }
    return build_report(rates, config);
}

RateReport fixed_antenna_rates(const ChannelMatrix& fixed_channel, const ScenarioConfig& config) {
    Eigen::VectorXd rates(fixed_channel.num_users());
    for (int n = 0; n < fixed_channel.num_users(); ++n) {
        rates[n] = rate_from_snr(fixed_channel.user_column(n).squaredNorm(), config);
    }
    return build_report(rates, config);
}

Eigen::VectorXd binary_pattern_for_user(const Eigen::VectorXcd& h) {
    const Eigen::Index num_slots = h.size();
    Eigen::VectorXd pattern = Eigen::VectorXd::Ones(num_slots);
    std::complex<double> sum = h.sum();
    int active = static_cast<int>(num_slots);
    double snr = std::norm(sum) / static_cast<double>(active);
    const double tol = kFlipTol * h.squaredNorm();

    bool changed = true;
    while (changed) {
        changed = false;
        for (Eigen::Index k = 0; k < num_slots; ++k) {
            const bool opening = pattern[k] == 0.0;
            if (!opening && active == 1) continue;  // never all-zero
            const std::complex<double> cand_sum = opening ? sum + h[k] : sum - h[k];
            const int cand_active = opening ? active + 1 : active - 1;
            const double cand_snr = std::norm(cand_sum) / static_cast<double>(cand_active);
            if (cand_snr > snr + tol) {
                pattern[k] = opening ? 1.0 : 0.0;
                sum = cand_sum;
                active = cand_active;
                snr = cand_snr;
                changed = true;
            }
        }
    }
    return pattern;
}

namespace {

BinaryActivationResult optimize_static_binary(const ChannelMatrix& channel,
                                              const ScenarioConfig& config) {
    const int num_slots = channel.num_slots();
    const int num_users = channel.num_users();

    Eigen::VectorXd pattern = Eigen::VectorXd::Ones(num_slots);
    Eigen::VectorXcd sums(num_users);
    for (int n = 0; n < num_users; ++n) sums[n] = channel.user_column(n).sum();
    int active = num_slots;

    auto filtered_sum_rate = [&](const Eigen::VectorXcd& s, int m) {
        double total = 0.0;
        for (int n = 0; n < num_users; ++n) {
            const double rate = rate_from_snr(std::norm(s[n]) / static_cast<double>(m), config);
            if (rate >= config.target_rate_bps_hz) total += rate;
        }
        return total;
    };

    double objective = filtered_sum_rate(sums, active);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int k = 0; k < num_slots; ++k) {
            const bool opening = pattern[k] == 0.0;
            if (!opening && active == 1) continue;
            Eigen::VectorXcd cand_sums = sums;
            for (int n = 0; n < num_users; ++n) {
                cand_sums[n] += (opening ? 1.0 : -1.0) * channel.entries(k, n);
            }
            const int cand_active = opening ? active + 1 : active - 1;
            const double cand_obj = filtered_sum_rate(cand_sums, cand_active);
            if (cand_obj > objective + kFlipTol) {
                pattern[k] = opening ? 1.0 : 0.0;
                sums = cand_sums;
                active = cand_active;
                objective = cand_obj;
                changed = true;
            }
        }
    }

    BinaryActivationResult result;
    result.patterns = {pattern};
    Eigen::VectorXd rates(num_users);
    for (int n = 0; n < num_users; ++n) {
        rates[n] = static_rate(channel.user_column(n), pattern, config);
    }
    result.report = build_report(rates, config);
    return result;
}

BinaryActivationResult optimize_dynamic_binary(const ChannelMatrix& channel,
                                               const ScenarioConfig& config) {
    BinaryActivationResult result;
    result.patterns.resize(static_cast<std::size_t>(channel.num_users()));
    Eigen::VectorXd rates(channel.num_users());
    for (int n = 0; n < channel.num_users(); ++n) {
        const Eigen::VectorXcd h = channel.user_column(n);
        Eigen::VectorXd pattern = binary_pattern_for_user(h);
        rates[n] = dynamic_rate(h, pattern, config);
        result.patterns[static_cast<std::size_t>(n)] = std::move(pattern);
    }
    result.report = build_report(rates, config);
    return result;
}

}  // namespace

BinaryActivationResult binary_activation_optimize(const ChannelMatrix& channel,
                                                  const ScenarioConfig& config,
                                                  ActivationMode mode) {
    return mode == ActivationMode::kStatic ? optimize_static_binary(channel, config)
                                           : optimize_dynamic_binary(channel, config);
}

}  // namespace lcx

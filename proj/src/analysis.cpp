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

#include "lcx/analysis.hpp"

#include <cmath>
#include <stdexcept>

namespace lcx {

namespace {

void check_binary(const ApertureVector& alpha_bin) {
    bool any_active = false;
    for (Eigen::Index k = 0; k < alpha_bin.size(); ++k) {
        if (alpha_bin[k] != 0.0 && alpha_bin[k] != 1.0) {
            throw std::invalid_argument("strict_improvement_check: pattern entry " +
                                        std::to_string(k + 1) + " is not binary");
        }
        any_active = any_active || alpha_bin[k] == 1.0;
    }
    if (!any_active) {
        throw std::invalid_argument("strict_improvement_check: all-zero activation pattern");
    }
}

}  // namespace

double coherence_factor(const Eigen::VectorXcd& h) {
    const double power_sum = h.squaredNorm();
    if (power_sum <= 0.0) {
        throw std::domain_error("coherence_factor: all-zero channel");
    }
    const std::complex<double> coherent = h.sum();
    return std::norm(coherent) / (static_cast<double>(h.size()) * power_sum);
}

std::pair<double, double> cross_term_expansion(const Eigen::VectorXcd& h) {
    const double sum_sq = h.squaredNorm();
    double cross = 0.0;
    for (Eigen::Index i = 0; i < h.size(); ++i) {
        for (Eigen::Index j = i + 1; j < h.size(); ++j) {
            // |h_i||h_j| cos(phi_i - phi_j) = Re{h_i * conj(h_j)}
            cross += 2.0 * (h[i] * std::conj(h[j])).real();
        }
    }
    return {sum_sq, cross};
}

ImprovementCertificate strict_improvement_check(const Eigen::VectorXcd& h,
                                                const ApertureVector& alpha_bin) {
    if (h.size() != alpha_bin.size()) {
        throw std::invalid_argument("strict_improvement_check: dimension mismatch");
    }
    check_binary(alpha_bin);

    const std::complex<double> composite = effective_channel(h, alpha_bin);
    const double norm_sq = alpha_bin.squaredNorm();
    const double threshold = std::norm(composite) / norm_sq;
    const double margin = kStrictMargin * h.squaredNorm();

    // Closing pass first, then opening, both in ascending slot order.
    for (Eigen::Index k = 0; k < alpha_bin.size(); ++k) {
        if (alpha_bin[k] != 1.0) continue;
        const double projection = (composite * std::conj(h[k])).real();
        if (projection < threshold - margin) {
            return {PerturbationKind::kCloseActive, static_cast<int>(k + 1), projection, threshold};
        }
    }
    for (Eigen::Index k = 0; k < alpha_bin.size(); ++k) {
        if (alpha_bin[k] != 0.0) continue;
        const double projection = (composite * std::conj(h[k])).real();
        if (projection > margin) {
            return {PerturbationKind::kOpenInactive, static_cast<int>(k + 1), projection, 0.0};
        }
    }
    return {};
}

ApertureVector apply_perturbation(const ApertureVector& alpha_bin,
                                  const ImprovementCertificate& certificate, double tau) {
    if (certificate.kind == PerturbationKind::kNone) {
        throw std::invalid_argument("apply_perturbation: certificate carries no direction");
    }
    if (!(tau > 0.0 && tau < 1.0)) {
        throw std::invalid_argument("apply_perturbation: tau must lie in (0, 1), got " +
                                    std::to_string(tau));
    }
    const Eigen::Index k = certificate.slot - 1;
    if (k < 0 || k >= alpha_bin.size()) {
        throw std::out_of_range("apply_perturbation: certificate slot out of range");
    }
    ApertureVector alpha = alpha_bin;
    if (certificate.kind == PerturbationKind::kCloseActive) {
        alpha[k] -= tau;
    } else {
        alpha[k] += tau;
    }
    return alpha;
}

double perturbation_derivative(const Eigen::VectorXcd& h, const ApertureVector& alpha_bin,
                               int slot, PerturbationKind kind) {
    if (kind == PerturbationKind::kNone) {
        throw std::invalid_argument("perturbation_derivative: no direction");
    }
    const Eigen::Index k = slot - 1;
    if (k < 0 || k >= h.size()) {
        throw std::out_of_range("perturbation_derivative: slot out of range");
    }
    const std::complex<double> composite = effective_channel(h, alpha_bin);
    const double norm_sq = alpha_bin.squaredNorm();
    const double projection = (composite * std::conj(h[k])).real();
    if (kind == PerturbationKind::kCloseActive) {
        return 2.0 * (std::norm(composite) - norm_sq * projection) / (norm_sq * norm_sq);
    }
    return 2.0 * projection / norm_sq;
}

AdaptiveTauResult improve_with_adaptive_tau(const Eigen::VectorXcd& h,
                                            const ApertureVector& alpha_bin,
                                            const ImprovementCertificate& certificate) {
    const double base_snr = normalized_snr(h, alpha_bin);
    AdaptiveTauResult result;
    double tau = 0.5;
    for (int i = 0; i < 60; ++i) {
        const ApertureVector alpha = apply_perturbation(alpha_bin, certificate, tau);
        const double snr = normalized_snr(h, alpha);
        if (snr > base_snr) {
            result.alpha = alpha;
            result.tau = tau;
            result.snr = snr;
            result.improved = true;
            return result;
        }
        tau *= 0.5;
    }
    result.alpha = alpha_bin;
    result.snr = base_snr;
    return result;
}

double rate_gain_bound(const Eigen::VectorXcd& h) { return -std::log2(coherence_factor(h)); }

}  // namespace lcx

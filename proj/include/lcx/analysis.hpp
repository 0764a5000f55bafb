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
#include <utility>

#include <Eigen/Dense>

#include "lcx/metrics.hpp"

namespace lcx {

enum class PerturbationKind { kCloseActive, kOpenInactive, kNone };

/// Witness that a single-slot aperture perturbation of a binary pattern
/// strictly improves the normalized SNR. `projection` is the in-phase
/// projection Re{(h^T alpha) * conj(h_k)}; `threshold` is what it is
/// compared against: |h^T alpha|^2 / ||alpha||^2 when closing an active
/// slot, 0 when opening an inactive one.
struct ImprovementCertificate {
    PerturbationKind kind = PerturbationKind::kNone;
    int slot = -1;  // 1-based; -1 when kind == kNone
    double projection = 0.0;
    double threshold = 0.0;
};

/// Relative margin used for the strict-inequality checks; scaled by
/// ||h||^2 so the classification is invariant to the channel's physical
/// magnitude.
inline constexpr double kStrictMargin = 1e-9;

/// |sum_k h_k|^2 / (K * sum_k |h_k|^2) in (0, 1]; measures constructive
/// combining under full activation. Throws std::domain_error for an
/// all-zero channel.
double coherence_factor(const Eigen::VectorXcd& h);

/// Splits |sum h_k|^2 into (sum |h_k|^2, 2 * sum_{i<j} |h_i||h_j|
/// cos(phi_i - phi_j)); the two parts add back to the coherent power.
std::pair<double, double> cross_term_expansion(const Eigen::VectorXcd& h);

/// Scans active slots (ascending k) for a strictly-below-threshold
/// projection, then inactive slots (ascending k) for a strictly positive
/// one, with margin kStrictMargin * ||h||^2. Returns the first certificate
/// found; kind == kNone when no strict improvement direction exists,
/// including the degenerate h^T alpha = 0 case.
ImprovementCertificate strict_improvement_check(const Eigen::VectorXcd& h,
                                                const ApertureVector& alpha_bin);

/// alpha_bin -/+ tau * e_k according to the certificate; box feasibility
/// holds by construction for tau in (0, 1). Throws std::invalid_argument
/// when the certificate carries no improvement direction.
ApertureVector apply_perturbation(const ApertureVector& alpha_bin,
                                  const ImprovementCertificate& certificate, double tau);

/// First derivative of gamma(alpha(tau)) at tau = 0 for the single-slot
/// variation named by (slot, kind); the closed forms from the perturbation
/// analysis of the two cases.
double perturbation_derivative(const Eigen::VectorXcd& h, const ApertureVector& alpha_bin,
                               int slot, PerturbationKind kind);

struct AdaptiveTauResult {
    ApertureVector alpha;
    double tau = 0.0;
    double snr = 0.0;
    bool improved = false;
};

/// Halves tau from 0.5 until the perturbed normalized SNR strictly exceeds
/// the binary pattern's value; guaranteed to terminate when the certificate
/// was issued with positive margin.
AdaptiveTauResult improve_with_adaptive_tau(const Eigen::VectorXcd& h,
                                            const ApertureVector& alpha_bin,
                                            const ImprovementCertificate& certificate);

/// High-SNR upper bound on the per-user rate gain of aperture adjustment
/// over full activation, -log2(coherence_factor), in bits without the 1/N
/// TDMA prelog.
double rate_gain_bound(const Eigen::VectorXcd& h);

}  // namespace lcx

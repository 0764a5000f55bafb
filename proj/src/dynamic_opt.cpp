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

#include "lcx/dynamic_opt.hpp"

#include <cmath>
#include <stdexcept>

namespace lcx {

ApertureVector closed_form_alpha(const Eigen::VectorXd& a_vec, double b_scalar) {
    if (!(b_scalar > 0.0)) {
        throw std::domain_error("closed_form_alpha: b must be positive, got " +
                                std::to_string(b_scalar));
    }
    ApertureVector alpha(a_vec.size());
    for (Eigen::Index k = 0; k < a_vec.size(); ++k) {
        alpha[k] = std::min(1.0, std::max(0.0, a_vec[k] / b_scalar));
    }
    return alpha;
}

DynamicUserResult optimize_dynamic_user(const Eigen::VectorXcd& h, const ScenarioConfig& config,
                                        const DynamicOptions& options) {
    const double gamma_min = qos_threshold(config);

    DynamicUserResult result;
    result.alpha = ApertureVector::Ones(h.size());

    if (h.squaredNorm() == 0.0) {
        // Degenerate zero channel: rate is zero for any aperture pattern.
        result.snr = 0.0;
        result.qos_feasible = result.snr >= gamma_min;
        result.converged = true;
        result.trace.record(0, 0.0, 0.0, 0.0, 0.0);
        return result;
    }

    double snr = normalized_snr(h, result.alpha);
    result.trace.record(0, snr, snr, 0.0, 0.0);

    DynamicState state;
    state.alpha_n = result.alpha;

    for (int t = 1; t <= options.max_iters; ++t) {
        const std::complex<double> beta =
            effective_channel(h, state.alpha_n) / state.alpha_n.squaredNorm();
        state.beta = beta;
        state.b_scalar = std::norm(beta);
        if (state.b_scalar <= 0.0) {
            // beta = 0 happens only when the composite channel cancels
            // exactly; the surrogate is flat there, keep the iterate.
            result.converged = true;
            break;
        }
        state.a_vec = (Eigen::VectorXd)(beta * h.conjugate()).real();
        ApertureVector next = closed_form_alpha(state.a_vec, state.b_scalar);
        if (next.squaredNorm() < kAlphaNormFloor) {
            // All-zero clamp output; retain the previous nonzero iterate.
            result.converged = true;
            break;
        }
        state.alpha_n = next;
        state.iteration = t;

        const double next_snr = normalized_snr(h, state.alpha_n);
        const double surrogate = 2.0 * state.a_vec.dot(state.alpha_n) -
                                 state.b_scalar * state.alpha_n.squaredNorm();
        result.trace.record(t, next_snr, surrogate, 0.0, 1.0);
        result.iterations = t;

        const double improvement = next_snr - snr;
        snr = next_snr;
        if (improvement <= options.rel_tol * std::max(next_snr, 1e-300)) {
            result.converged = true;
            break;
        }
    }

    result.alpha = state.alpha_n;
    result.snr = snr;
    result.qos_feasible = snr >= gamma_min;
    return result;
}

std::vector<DynamicUserResult> optimize_dynamic(const ChannelMatrix& channel,
                                                const ScenarioConfig& config,
                                                const DynamicOptions& options) {
    const int num_users = channel.num_users();
    std::vector<DynamicUserResult> results(static_cast<std::size_t>(num_users));
#pragma omp parallel for schedule(static)
    for (int n = 0; n < num_users; ++n) {
        results[static_cast<std::size_t>(n)] =
            optimize_dynamic_user(channel.user_column(n), config, options);
    }
    return results;
}

}  // namespace lcx

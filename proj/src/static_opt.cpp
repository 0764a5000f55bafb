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

#include "lcx/static_opt.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace lcx {

namespace {

constexpr double kFeasTol = 1e-9;  // scaled constraint violation accepted as feasible

ApertureVector clamp01(ApertureVector alpha) {
    for (Eigen::Index k = 0; k < alpha.size(); ++k) {
        alpha[k] = std::min(1.0, std::max(0.0, alpha[k]));
    }
    return alpha;
}

// Norm-floor projection, active only when violated.
void project_norm_floor(ApertureVector& alpha) {
    const double norm_sq = alpha.squaredNorm();
    if (norm_sq >= kAlphaNormFloor) return;
    if (norm_sq == 0.0) {
        alpha.setConstant(std::sqrt(kAlphaNormFloor / static_cast<double>(alpha.size())));
    } else {
        alpha *= std::sqrt(kAlphaNormFloor / norm_sq);
    }
}

double true_sum_rate(const ChannelMatrix& channel, const ScenarioConfig& config,
                     const ApertureVector& alpha) {
    double sum = 0.0;
    for (int n = 0; n < channel.num_users(); ++n) {
        sum += static_rate(channel.user_column(n), alpha, config);
    }
    return sum;
}

}  // namespace

double sca_weight(double f_val, double rho) {
    if (!(f_val >= 0.0)) {
        throw std::invalid_argument("sca_weight: operating point must be nonnegative");
    }
    if (!(rho > 0.0)) {
        throw std::invalid_argument("sca_weight: rho must be positive");
    }
    return rho / (std::log(2.0) * (1.0 + rho * f_val));
}

double qt_surrogate(const Eigen::VectorXcd& h, const ApertureVector& alpha,
                    std::complex<double> beta) {
    return 2.0 * (std::conj(beta) * effective_channel(h, alpha)).real() -
           std::norm(beta) * alpha.squaredNorm();
}

std::complex<double> beta_update(const Eigen::VectorXcd& h, const ApertureVector& alpha) {
    const double norm_sq = alpha.squaredNorm();
    if (norm_sq < kAlphaNormFloor) {
        throw std::domain_error("beta_update: ||alpha||^2 = " + std::to_string(norm_sq) +
                                " below the aperture norm floor 1e-8");
    }
    return effective_channel(h, alpha) / norm_sq;
}

SubproblemResult solve_subproblem(const ChannelMatrix& channel, StaticState& state,
                                  double gamma_min, double tol, int max_inner_iters,
                                  double multiplier_cap) {
    const int num_slots = channel.num_slots();
    const int num_users = channel.num_users();
    if (state.weights.size() != num_users || state.betas.size() != num_users) {
        throw std::invalid_argument("solve_subproblem: state dimensions do not match channel");
    }
    if (state.alpha.size() != num_slots) {
        throw std::invalid_argument("solve_subproblem: aperture length does not match channel");
    }
    if (state.multipliers.size() != num_users) {
        state.multipliers = Eigen::VectorXd::Zero(num_users);
    }

    // Channel power scale; constraints are normalized by it so the dual
    // cap and tolerances are unit-free.
    double scale = 0.0;
    for (int n = 0; n < num_users; ++n) {
        scale = std::max(scale, channel.user_column(n).squaredNorm());
    }
    if (scale <= 0.0) scale = 1.0;

    // Per-user surrogate data in normalized units.
    std::vector<Eigen::VectorXd> a_hat(static_cast<std::size_t>(num_users));
    Eigen::VectorXd b_hat(num_users);
    Eigen::VectorXd c = Eigen::VectorXd::Zero(num_slots);
    double d = 0.0;
    for (int n = 0; n < num_users; ++n) {
        const Eigen::VectorXcd h = channel.user_column(n);
        const std::complex<double> beta = state.betas[n];
        const Eigen::VectorXd a = (beta * h.conjugate()).real();
        a_hat[static_cast<std::size_t>(n)] = a / scale;
        b_hat[n] = std::norm(beta) / scale;
        c += 2.0 * state.weights[n] * a;
        d += state.weights[n] * std::norm(beta);
    }

    SubproblemResult result;
    result.alpha = state.alpha;
    if (d <= 0.0) {
        // All betas zero (zero composite channels): surrogate is flat.
        return result;
    }

    const bool with_qos = gamma_min > 0.0;
    const double gamma_hat = gamma_min / scale;
    Eigen::VectorXd mu = with_qos ? state.multipliers : Eigen::VectorXd::Zero(num_users);

    auto g_hat = [&](const ApertureVector& alpha, int n) {
        return 2.0 * a_hat[static_cast<std::size_t>(n)].dot(alpha) -
               b_hat[n] * alpha.squaredNorm();
    };
    auto max_violation = [&](const ApertureVector& alpha) {
        double v = 0.0;
        for (int n = 0; n < num_users; ++n) v = std::max(v, gamma_hat - g_hat(alpha, n));
        return v;
    };

    ApertureVector alpha = state.alpha;
    int inner_used = 0;

    auto inner_solve = [&]() {
        // Projected-gradient ascent on the Lagrangian, fixed step
        // 1/(2 L_curv) with L_curv = 2 (d + sum mu_n b_n).
        Eigen::VectorXd grad_lin = c;
        double curv = d;
        for (int n = 0; n < num_users; ++n) {
            grad_lin += 2.0 * mu[n] * a_hat[static_cast<std::size_t>(n)];
            curv += mu[n] * b_hat[n];
        }
        const double l_curv = 2.0 * curv;
        const double step = 1.0 / (2.0 * l_curv);
        while (inner_used < max_inner_iters) {
            ++inner_used;
            ApertureVector next = clamp01(alpha + step * (grad_lin - 2.0 * curv * alpha));
            project_norm_floor(next);
            const double residual = (next - alpha).lpNorm<Eigen::Infinity>();
            alpha = next;
            result.kkt_residual = residual;
            if (residual <= tol) break;
        }
    };

    if (!with_qos) {
        inner_solve();
        result.alpha = alpha;
        result.inner_iterations = inner_used;
        state.alpha = alpha;
        return result;
    }

    double dual_step = 1.0;
    double prev_violation = -1.0;
    const int max_dual_iters = 100;
    for (int it = 0; it < max_dual_iters; ++it) {
        inner_solve();
        const double violation = max_violation(alpha);
        if (violation <= kFeasTol) {
            result.feasible = true;
            break;
        }
        if (mu.maxCoeff() >= multiplier_cap || inner_used >= max_inner_iters ||
            it + 1 == max_dual_iters) {
            result.feasible = false;
            break;
        }
        if (prev_violation >= 0.0) {
            if (violation > prev_violation) {
                dual_step *= 0.5;
            } else if (violation > 0.25 * prev_violation) {
                dual_step *= 2.0;  // slow progress, push harder
            }
        }
        prev_violation = violation;
        for (int n = 0; n < num_users; ++n) {
            mu[n] = std::min(multiplier_cap,
                             std::max(0.0, mu[n] + dual_step * (gamma_hat - g_hat(alpha, n))));
        }
    }

    result.alpha = alpha;
    result.inner_iterations = inner_used;
    state.alpha = alpha;
    state.multipliers = mu;
    return result;
}

namespace {

StaticResult run_sca(const ChannelMatrix& channel, const ScenarioConfig& config,
                     const StaticOptions& options, double gamma_min) {
    const int num_slots = channel.num_slots();
    const int num_users = channel.num_users();
    const double rho = config.snr_linear();

    double scale = 0.0;
    for (int n = 0; n < num_users; ++n) {
        scale = std::max(scale, channel.user_column(n).squaredNorm());
    }
    if (scale <= 0.0) scale = 1.0;

    StaticState state;
    state.alpha = ApertureVector::Ones(num_slots);
    state.multipliers = Eigen::VectorXd::Zero(num_users);

    StaticResult result;
    ApertureVector alpha = state.alpha;
    double objective = true_sum_rate(channel, config, alpha);

    auto qos_violation = [&](const ApertureVector& a) {
        double v = 0.0;
        for (int n = 0; n < num_users; ++n) {
            v = std::max(v, gamma_min - normalized_snr(channel.user_column(n), a));
        }
        return v;
    };

    {
        double tight_surrogate = 0.0;
        for (int n = 0; n < num_users; ++n) {
            const double f = normalized_snr(channel.user_column(n), alpha);
            tight_surrogate += sca_weight(f, rho) * f;
        }
        result.trace.record(0, objective, tight_surrogate, qos_violation(alpha), 0.0);
    }

    for (int t = 1; t <= options.max_outer_iters; ++t) {
        state.weights.resize(num_users);
        state.betas.resize(num_users);
        for (int n = 0; n < num_users; ++n) {
            const Eigen::VectorXcd h = channel.user_column(n);
            state.weights[n] = sca_weight(normalized_snr(h, alpha), rho);
            state.betas[n] = beta_update(h, alpha);
        }
        state.alpha = alpha;
        state.iteration = t;

        const SubproblemResult sub =
            solve_subproblem(channel, state, gamma_min, options.subproblem_tol,
                             options.max_inner_iters, options.multiplier_cap);
        if (!sub.feasible) {
            break;  // QoS unattainable for the current surrogate
        }

        // Damped acceptance: take the largest halved step along the
        // candidate direction that does not decrease the true objective.
        const ApertureVector direction = sub.alpha - alpha;
        double step = 1.0;
        bool accepted = false;
        ApertureVector accepted_alpha = alpha;
        double accepted_obj = objective;
        for (int i = 0; i < 40; ++i) {
            ApertureVector trial = alpha + step * direction;
            if (trial.squaredNorm() >= kAlphaNormFloor) {
                const double trial_obj = true_sum_rate(channel, config, trial);
                if (trial_obj >= objective - 1e-12 * std::max(1.0, std::abs(objective))) {
                    accepted = true;
                    accepted_alpha = trial;
                    accepted_obj = trial_obj;
                    break;
                }
            }
            step *= 0.5;
        }
        if (!accepted) {
            result.converged = true;  // no ascent along the candidate direction
            break;
        }

        alpha = accepted_alpha;
        double surrogate = 0.0;
        for (int n = 0; n < num_users; ++n) {
            surrogate +=
                state.weights[n] * qt_surrogate(channel.user_column(n), alpha, state.betas[n]);
        }
        result.trace.record(t, accepted_obj, surrogate, qos_violation(alpha), step);
        result.iterations = t;

        const double improvement = accepted_obj - objective;
        objective = accepted_obj;
        if (improvement <= options.rel_tol * std::max(objective, 1e-12)) {
            result.converged = true;
            break;
        }
    }

    result.alpha = alpha;
    result.qos_feasible = qos_violation(alpha) <= kFeasTol * scale;
    return result;
}

}  // namespace

StaticResult optimize_static(const ChannelMatrix& channel, const ScenarioConfig& config,
                             const StaticOptions& options) {
    const double gamma_min = qos_threshold(config);
    StaticResult result = run_sca(channel, config, options, gamma_min);
    if (gamma_min > 0.0 && !result.qos_feasible) {
        // QoS unattainable (or not reached monotonically): rerun without the
        // constraints; outage is accounted for downstream in the report.
        result = run_sca(channel, config, options, 0.0);
        result.used_fallback = true;
        double scale = 0.0;
        for (int n = 0; n < channel.num_users(); ++n) {
            scale = std::max(scale, channel.user_column(n).squaredNorm());
        }
        double violation = 0.0;
        for (int n = 0; n < channel.num_users(); ++n) {
            violation = std::max(
                violation, gamma_min - normalized_snr(channel.user_column(n), result.alpha));
        }
        result.qos_feasible = violation <= kFeasTol * std::max(scale, 1.0);
    }
    return result;
}

}  // namespace lcx

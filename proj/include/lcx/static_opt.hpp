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

#include <Eigen/Dense>

#include "lcx/channel.hpp"
#include "lcx/metrics.hpp"
#include "lcx/optimizer_trace.hpp"

namespace lcx {

/// Iterate of the shared-aperture solver. `multipliers` are the QoS dual
/// estimates of the subproblem solver, kept across outer iterations as a
/// warm start; they live in channel-normalized units (constraints divided
/// by the largest per-user channel power).
struct StaticState {
    ApertureVector alpha;
    Eigen::VectorXd weights;      // omega_n, positive
    Eigen::VectorXcd betas;       // auxiliary variables beta_n
    Eigen::VectorXd multipliers;  // nonnegative QoS duals
    int iteration = 0;
};

struct StaticOptions {
    int max_outer_iters = 50;
    double rel_tol = 1e-4;         // relative sum-rate increase to stop
    int max_inner_iters = 5000;    // projected-gradient budget per subproblem
    double subproblem_tol = 1e-6;  // KKT residual (aperture units)
    double multiplier_cap = 1e6;   // dual divergence => infeasible
};

/// Linearization weight of the concave rate term at the current operating
/// point: rho / (ln 2 * (1 + rho * f)).
double sca_weight(double f_val, double rho);

/// Quadratic-transform minorizer g(alpha, beta) = 2 Re{conj(beta) h^T alpha}
/// - |beta|^2 ||alpha||^2; equals the normalized SNR at beta = beta*(alpha)
/// and never exceeds it.
double qt_surrogate(const Eigen::VectorXcd& h, const ApertureVector& alpha,
                    std::complex<double> beta);

/// Closed-form maximizer of the surrogate over beta: h^T alpha / ||alpha||^2.
/// Throws std::domain_error when ||alpha||^2 is below the aperture floor.
std::complex<double> beta_update(const Eigen::VectorXcd& h, const ApertureVector& alpha);

struct SubproblemResult {
    ApertureVector alpha;
    bool feasible = true;
    int inner_iterations = 0;
    double kkt_residual = 0.0;
};

/// Maximizes sum_n weights_n * g_n(alpha, betas_n) over the box subject to
/// g_n >= gamma_min for all n (constraints dropped when gamma_min == 0).
/// With a_n = Re{conj(beta_n) h_n} and b_n = |beta_n|^2 the objective is
/// the isotropic concave quadratic c^T alpha - d ||alpha||^2, handled by a
/// dual (augmented-Lagrangian style) outer loop on the QoS constraints with
/// inner projected-gradient ascent at fixed step 1/(2 L_curv),
/// L_curv = 2 (d + sum_n mu_n b_n). Starts from state.alpha; updates
/// state.multipliers in place. feasible == false when the duals diverge
/// beyond the cap, i.e. the QoS targets are unattainable for the current
/// surrogate.
SubproblemResult solve_subproblem(const ChannelMatrix& channel, StaticState& state,
                                  double gamma_min, double tol, int max_inner_iters = 5000,
                                  double multiplier_cap = 1e6);

struct StaticResult {
    ApertureVector alpha;
    OptimizerTrace trace;
    bool qos_feasible = false;  // final point meets every user's QoS level
    bool used_fallback = false; // reran without QoS constraints
    bool converged = false;
    int iterations = 0;
};

/// Shared-aperture sum-rate maximization: starting from the all-open
/// pattern, iterates weight and auxiliary-variable updates with the convex
/// subproblem until the sum-rate increase falls below rel_tol. Candidate
/// steps are damped when needed so the recorded objective trace never
/// decreases. If the QoS targets prove unattainable, the whole optimization
/// reruns without them and the returned report marks qos_feasible = false.
StaticResult optimize_static(const ChannelMatrix& channel, const ScenarioConfig& config,
                             const StaticOptions& options = {});

}  // namespace lcx

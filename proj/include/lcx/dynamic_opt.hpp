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

#include "lcx/channel.hpp"
#include "lcx/metrics.hpp"
#include "lcx/optimizer_trace.hpp"

namespace lcx {

/// Working state of the per-user alternating solver.
struct DynamicState {
    ApertureVector alpha_n;
    std::complex<double> beta = 0.0;
    Eigen::VectorXd a_vec;   // Re{conj(beta) * h_n}
    double b_scalar = 0.0;   // |beta|^2
    int iteration = 0;
};

struct DynamicOptions {
    int max_iters = 500;
    double rel_tol = 1e-8;  // relative improvement of the normalized SNR
};

struct DynamicUserResult {
    ApertureVector alpha;
    OptimizerTrace trace;
    double snr = 0.0;
    bool qos_feasible = false;
    bool converged = false;
    int iterations = 0;
};

/// Componentwise clamp of a_k / b to [0, 1], the exact maximizer of the
/// separable concave surrogate over the box. Throws std::domain_error for
/// b <= 0.
ApertureVector closed_form_alpha(const Eigen::VectorXd& a_vec, double b_scalar);

/// Alternates the auxiliary update beta = h^T alpha / ||alpha||^2 with the
/// clamped closed-form aperture update, starting from the all-open pattern.
/// The normalized SNR ascends monotonically; an all-zero clamp output
/// (possible only in degenerate cases) terminates with the previous
/// iterate. qos_feasible reports snr >= qos_threshold(config) at the end.
DynamicUserResult optimize_dynamic_user(const Eigen::VectorXcd& h, const ScenarioConfig& config,
                                        const DynamicOptions& options = {});

/// Independent per-user solves, one per channel column; order-independent.
std::vector<DynamicUserResult> optimize_dynamic(const ChannelMatrix& channel,
                                                const ScenarioConfig& config,
                                                const DynamicOptions& options = {});

}  // namespace lcx

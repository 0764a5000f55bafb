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

#include "lcx/verify.hpp"

#include <cmath>
#include <complex>
#include <sstream>

#include <Eigen/Dense>

#include "lcx/analysis.hpp"
#include "lcx/channel.hpp"
#include "lcx/dynamic_opt.hpp"
#include "lcx/metrics.hpp"
#include "lcx/rng.hpp"
#include "lcx/scenario.hpp"
#include "lcx/static_opt.hpp"

namespace lcx {

namespace {

ScenarioConfig instance_config(std::uint64_t seed, int num_slots, int num_users) {
    ScenarioConfig cfg;
    cfg.num_slots = num_slots;
    cfg.slot_spacing_m = cfg.region_x_m / num_slots;
    cfg.num_users = num_users;
    cfg.rng_seed = seed;
    return cfg;
}

double exhaustive_binary_max(const Eigen::VectorXcd& h) {
    const int num_slots = static_cast<int>(h.size());
    double best = 0.0;
    for (unsigned mask = 1; mask < (1u << num_slots); ++mask) {
        std::complex<double> sum = 0.0;
        int active = 0;
        for (int k = 0; k < num_slots; ++k) {
            if (mask & (1u << k)) {
                sum += h[k];
                ++active;
            }
        }
        best = std::max(best, std::norm(sum) / static_cast<double>(active));
    }
    return best;
}

CheckResult check_dominance(std::uint64_t seed) {
    CheckResult res{"proposition 1 (feasible-set dominance)", true, ""};
    const int instances = 100;
    int worst_index = -1;
    double worst_gap = 0.0;
    for (int i = 0; i < instances; ++i) {
        const ScenarioConfig cfg = instance_config(seed + static_cast<std::uint64_t>(i), 10, 1);
        const ScenarioInstance inst = sample_scenario(cfg);
        Eigen::VectorXcd h = composite_channel(cfg, inst).user_column(0);
        h /= h.norm();  // the optimizer's iterates are invariant to channel scale
        const double continuous = optimize_dynamic_user(h, cfg).snr;
        const double binary = exhaustive_binary_max(h);
        const double gap = binary - continuous;
        if (gap > worst_gap) {
            worst_gap = gap;
            worst_index = i;
        }
    }
    std::ostringstream detail;
    detail << instances << " instances, worst binary-minus-continuous gap " << worst_gap;
    if (worst_gap > 1e-6) {
        res.pass = false;
        detail << " (instance " << worst_index << ")";
    }
    res.detail = detail.str();
    return res;
}

CheckResult check_strict_improvement(std::uint64_t seed) {
    CheckResult res{"proposition 2 (strict improvement)", true, ""};
    const int target_pairs = 500;
    Rng rng(seed ^ 0x5bd1e995u);
    int fired = 0;
    int improved = 0;
    int sign_matches = 0;
    int attempts = 0;
    while (fired < target_pairs && attempts < target_pairs * 50) {
        ++attempts;
        const int num_slots = 4 + static_cast<int>(rng.next_u64() % 9);  // 4..12
        Eigen::VectorXcd h(num_slots);
        for (int k = 0; k < num_slots; ++k) h[k] = rng.complex_normal();
        ApertureVector pattern(num_slots);
        bool any = false;
        for (int k = 0; k < num_slots; ++k) {
            pattern[k] = rng.uniform01() < 0.5 ? 1.0 : 0.0;
            any = any || pattern[k] == 1.0;
        }
        if (!any) pattern[0] = 1.0;

        const ImprovementCertificate cert = strict_improvement_check(h, pattern);
        if (cert.kind == PerturbationKind::kNone) continue;
        ++fired;

        if (improve_with_adaptive_tau(h, pattern, cert).improved) ++improved;

        const double predicted = perturbation_derivative(h, pattern, cert.slot, cert.kind);
        const double tau_fd = 1e-6;
        const double fd =
            (normalized_snr(h, apply_perturbation(pattern, cert, tau_fd)) -
             normalized_snr(h, pattern)) /
            tau_fd;
        if ((predicted > 0.0) == (fd > 0.0)) ++sign_matches;
    }
    std::ostringstream detail;
    detail << improved << "/" << fired << " perturbations improved, " << sign_matches << "/"
           << fired << " derivative signs";
    res.detail = detail.str();
    res.pass = fired == target_pairs && improved == fired && sign_matches >= fired - 1;
    return res;
}

CheckResult check_gain_bound(std::uint64_t seed) {
    CheckResult res{"proposition 3 (high-SNR gain bound)", true, ""};
    const int instances = 200;
    int ok = 0;
    double worst_excess = -1e300;
    for (int i = 0; i < instances; ++i) {
        ScenarioConfig cfg = instance_config(seed + 7000 + static_cast<std::uint64_t>(i), 50, 1);
        cfg.transmit_power_dbm = cfg.noise_power_dbm + 80.0;  // P_t / sigma^2 = 1e8
        const ScenarioInstance inst = sample_scenario(cfg);
        const Eigen::VectorXcd h = composite_channel(cfg, inst).user_column(0);
        const double rho = cfg.snr_linear();
        const double gamma_opt = optimize_dynamic_user(h, cfg).snr;
        const double gamma_ones = normalized_snr(h, ApertureVector::Ones(h.size()));
        const double gain = std::log2(1.0 + rho * gamma_opt) - std::log2(1.0 + rho * gamma_ones);
        const double bound = rate_gain_bound(h);
        worst_excess = std::max(worst_excess, gain - bound);
        if (gain >= -1e-9 && gain <= bound + 0.05) ++ok;
    }
    std::ostringstream detail;
    detail << ok << "/" << instances << " channels within bound, worst gain-minus-bound "
           << worst_excess << " bits";
    res.detail = detail.str();
    res.pass = ok == instances;
    return res;
}

CheckResult check_qt_exactness(std::uint64_t seed) {
    CheckResult res{"quadratic transform exactness", true, ""};
    Rng rng(seed ^ 0x9e3779b9u);
    const int samples = 1000;
    int ok = 0;
    for (int i = 0; i < samples; ++i) {
        const int num_slots = 2 + static_cast<int>(rng.next_u64() % 63);
        Eigen::VectorXcd h(num_slots);
        for (int k = 0; k < num_slots; ++k) h[k] = rng.complex_normal();
        ApertureVector alpha(num_slots);
        for (int k = 0; k < num_slots; ++k) alpha[k] = rng.uniform01();
        if (alpha.squaredNorm() < kAlphaNormFloor) alpha[0] = 1.0;

        const double f = normalized_snr(h, alpha);
        const std::complex<double> beta_opt = beta_update(h, alpha);
        const double g_opt = qt_surrogate(h, alpha, beta_opt);
        bool good = std::abs(g_opt - f) <= 1e-10 * std::max(f, 1e-300);
        for (int j = 0; good && j < 100; ++j) {
            const std::complex<double> beta = beta_opt + rng.complex_normal() *
                                                             (std::abs(beta_opt) + 1.0);
            good = qt_surrogate(h, alpha, beta) <= f + 1e-12 * std::max(1.0, f);
        }
        if (good) ++ok;
    }
    std::ostringstream detail;
    detail << ok << "/" << samples << " samples exact and dominated";
    res.detail = detail.str();
    res.pass = ok == samples;
    return res;
}

}  // namespace

std::vector<CheckResult> run_proposition_checks(std::uint64_t seed) {
    return {
        check_dominance(seed),
        check_strict_improvement(seed),
        check_gain_bound(seed),
        check_qt_exactness(seed),
    };
}

}  // namespace lcx

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
//
// Compares the OpenMP channel-synthesis and trial kernels against their
// serial references: wall time, speedup, and bit-exactness of the results.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>

#include <omp.h>

#include "lcx/channel.hpp"
#include "lcx/harness.hpp"
#include "lcx/scenario.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

template <typename Fn>
double time_best_of(int repeats, Fn&& fn) {
    double best = 1e300;
    for (int i = 0; i < repeats; ++i) {
        const auto start = Clock::now();
        fn();
        best = std::min(best, seconds_since(start));
    }
    return best;
}

int run_channel_bench(bool quick) {
    lcx::ScenarioConfig cfg;
    cfg.num_slots = quick ? 64 : 200;
    cfg.slot_spacing_m = cfg.region_x_m / cfg.num_slots;
    cfg.num_users = quick ? 32 : 256;
    cfg.num_scatterers = quick ? 16 : 64;
    cfg.rng_seed = 99;
    const lcx::ScenarioInstance inst = lcx::sample_scenario(cfg);

    const int repeats = quick ? 2 : 5;
    lcx::ChannelMatrix serial;
    lcx::ChannelMatrix parallel;
    const double t_serial =
        time_best_of(repeats, [&] { serial = lcx::composite_channel_reference(cfg, inst); });
    const double t_parallel =
        time_best_of(repeats, [&] { parallel = lcx::composite_channel(cfg, inst); });

    const bool identical = serial.entries == parallel.entries;
    std::printf("channel synthesis  K=%-4d N=%-4d L=%-3d  serial %8.3f ms  omp %8.3f ms  "
                "speedup %.2fx  %s\n",
                cfg.num_slots, cfg.num_users, cfg.num_scatterers, 1e3 * t_serial,
                1e3 * t_parallel, t_serial / t_parallel, identical ? "bit-exact" : "MISMATCH");
    return identical ? 0 : 1;
}

int run_trial_bench(bool quick) {
    lcx::SweepSpec spec;
    spec.base.rng_seed = 7;
    spec.variable = lcx::SweepVariable::kTransmitPowerDbm;
    spec.values = {20.0};
    spec.trials = quick ? 8 : 64;
    spec.schemes = {lcx::SchemeId::kConventionalLcx, lcx::SchemeId::kDynamicBinary,
                    lcx::SchemeId::kDynamicAperture, lcx::SchemeId::kStaticAperture};

    const int max_threads = omp_get_max_threads();

    omp_set_num_threads(1);
    lcx::SweepResult serial;
    const auto t0 = Clock::now();
    serial = lcx::run_sweep(spec);
    const double t_serial = seconds_since(t0);

    omp_set_num_threads(max_threads);
    lcx::SweepResult parallel;
    const auto t1 = Clock::now();
    parallel = lcx::run_sweep(spec);
    const double t_parallel = seconds_since(t1);

    bool identical = serial.rows.size() == parallel.rows.size();
    for (std::size_t i = 0; identical && i < serial.rows.size(); ++i) {
        identical = serial.rows[i].mean_sum_rate == parallel.rows[i].mean_sum_rate &&
                    serial.rows[i].mean_outage == parallel.rows[i].mean_outage;
    }
    std::printf("monte-carlo trials n=%-4d               1 thread %7.3f s  %d threads %7.3f s  "
                "speedup %.2fx  %s\n",
                spec.trials, t_serial, max_threads, t_parallel, t_serial / t_parallel,
                identical ? "bit-exact" : "MISMATCH");
    return identical ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    const bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
    int rc = 0;
    rc |= run_channel_bench(quick);
    rc |= run_trial_bench(quick);
    return rc;
}

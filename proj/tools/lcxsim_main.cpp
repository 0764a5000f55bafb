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

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <omp.h>

#include <CLI11.hpp>

#include "lcx/channel.hpp"
#include "lcx/dynamic_opt.hpp"
#include "lcx/harness.hpp"
#include "lcx/optimizer_trace.hpp"
#include "lcx/scenario.hpp"
#include "lcx/static_opt.hpp"
#include "lcx/verify.hpp"

namespace {

// Exit codes: 0 success, 1 config error, 2 runtime/optimizer failure,
// 3 verification failure.
constexpr int kExitOk = 0;
constexpr int kExitConfigError = 1;
constexpr int kExitRuntimeError = 2;
constexpr int kExitVerifyFailure = 3;

std::vector<lcx::SchemeId> parse_scheme_list(const std::string& csv) {
    std::vector<lcx::SchemeId> schemes;
    std::istringstream in(csv);
    std::string token;
    while (std::getline(in, token, ',')) {
        const auto b = token.find_first_not_of(" \t");
        const auto e = token.find_last_not_of(" \t");
        token = (b == std::string::npos) ? std::string() : token.substr(b, e - b + 1);
        if (token.empty()) continue;
        const auto scheme = lcx::parse_scheme(token);
        if (!scheme) {
            throw std::invalid_argument("unknown scheme '" + token +
                                        "'; expected one of FixedAntenna, ConventionalLcx, "
                                        "StaticBinary, DynamicBinary, StaticAperture, "
                                        "DynamicAperture");
        }
        schemes.push_back(*scheme);
    }
    if (schemes.empty()) {
        throw std::invalid_argument("empty scheme list");
    }
    return schemes;
}

int run_simulate(const std::string& config_path, const std::string& sweep_path,
                 const std::string& out_path, std::optional<std::uint64_t> seed,
                 std::optional<int> trials, const std::string& schemes_csv, bool verbose) {
    lcx::ScenarioConfig base = lcx::load_config_file(config_path);
    if (seed) base.rng_seed = *seed;
    const std::vector<lcx::SchemeId> schemes = parse_scheme_list(schemes_csv);

    lcx::SweepSpec spec = lcx::load_sweep_file(sweep_path, base, schemes);
    if (trials) spec.trials = *trials;
    spec.validate();

    if (verbose) {
        // Optimizer convergence traces of the first trial of the first
        // sweep value, dumped to stderr so --out stays clean.
        const lcx::ScenarioConfig cfg =
            lcx::apply_sweep_value(spec.base, spec.variable, spec.values.front());
        lcx::ScenarioConfig seeded = cfg;
        seeded.rng_seed = spec.base.rng_seed;
        const lcx::ScenarioInstance inst = lcx::sample_scenario(seeded);
        const lcx::ChannelMatrix channel = lcx::composite_channel(seeded, inst);
        std::cerr << "# static aperture trace (first trial)\n";
        lcx::write_trace_csv(lcx::optimize_static(channel, seeded).trace, std::cerr);
        std::cerr << "# dynamic aperture trace, user 1 (first trial)\n";
        lcx::write_trace_csv(lcx::optimize_dynamic_user(channel.user_column(0), seeded).trace,
                             std::cerr);
    }

    const lcx::SweepResult result = lcx::run_sweep(spec);
    lcx::emit_csv(result.rows, out_path);

    int error_count = 0;
    for (const auto& per_value : result.raw) {
        for (const auto& trial : per_value) {
            error_count += static_cast<int>(trial.errors.size());
        }
    }
    if (error_count > 0) {
        std::cerr << "warning: " << error_count << " scheme evaluations failed\n";
        return kExitRuntimeError;
    }
    std::cout << "wrote " << result.rows.size() << " rows to " << out_path << "\n";
    return kExitOk;
}

int run_verify(std::optional<std::uint64_t> seed) {
    const std::uint64_t s = seed.value_or(1);
    const auto checks = lcx::run_proposition_checks(s);
    bool all_pass = true;
    for (const auto& check : checks) {
        std::cout << (check.pass ? "[PASS] " : "[FAIL] ") << check.name << ": " << check.detail
                  << "\n";
        all_pass = all_pass && check.pass;
    }
    return all_pass ? kExitOk : kExitVerifyFailure;
}

int run_channel_dump(const std::string& config_path, const std::string& out_path,
                     std::optional<std::uint64_t> seed) {
    lcx::ScenarioConfig cfg = lcx::load_config_file(config_path);
    if (seed) cfg.rng_seed = *seed;
    const lcx::ScenarioInstance instance = lcx::sample_scenario(cfg);
    const lcx::ChannelMatrix channel = lcx::composite_channel(cfg, instance);
    lcx::write_channel_csv(channel, out_path);
    std::cout << "wrote " << channel.num_slots() * channel.num_users() << " entries to "
              << out_path << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"LCX pinching-antenna downlink simulator"};
    app.require_subcommand(1);

    std::string config_path;
    std::string sweep_path;
    std::string out_path;
    std::string schemes_csv =
        "FixedAntenna,ConventionalLcx,StaticBinary,DynamicBinary,StaticAperture,DynamicAperture";
    std::optional<std::uint64_t> seed;
    std::optional<int> trials;
    std::optional<int> threads;
    bool verbose = false;

    CLI::App* simulate = app.add_subcommand("simulate", "run one sweep and emit a CSV table");
    simulate->add_option("--config", config_path, "scenario config file")->required();
    simulate->add_option("--sweep", sweep_path, "sweep spec file")->required();
    simulate->add_option("--out", out_path, "output CSV path")->required();
    simulate->add_option("--seed", seed, "seed base (overrides config rng_seed)");
    simulate->add_option("--trials", trials, "trials per sweep value (overrides sweep file)");
    simulate->add_option("--schemes", schemes_csv, "comma-separated scheme list");
    simulate->add_option("--threads", threads, "worker threads");
    simulate->add_flag("-v,--verbose", verbose, "dump first-trial optimizer traces to stderr");

    CLI::App* verify = app.add_subcommand("verify", "run the proposition property suites");
    verify->add_option("--seed", seed, "seed for the random checks");
    verify->add_option("--threads", threads, "worker threads");

    CLI::App* dump = app.add_subcommand("channel-dump", "write one channel matrix as CSV");
    dump->add_option("--config", config_path, "scenario config file")->required();
    dump->add_option("--out", out_path, "output CSV path")->required();
    dump->add_option("--seed", seed, "seed (overrides config rng_seed)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (threads) {
            if (*threads < 1) throw std::invalid_argument("--threads must be >= 1");
            omp_set_num_threads(*threads);
        }
        if (simulate->parsed()) {
            return run_simulate(config_path, sweep_path, out_path, seed, trials, schemes_csv,
                                verbose);
        }
        if (verify->parsed()) {
            return run_verify(seed);
        }
        if (dump->parsed()) {
            return run_channel_dump(config_path, out_path, seed);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::out_of_range& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntimeError;
    }
    return kExitOk;
}

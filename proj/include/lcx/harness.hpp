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

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lcx/baselines.hpp"
#include "lcx/metrics.hpp"
#include "lcx/scenario.hpp"

namespace lcx {

enum class SweepVariable { kTransmitPowerDbm, kTargetRate, kRegionYM, kNumUsers };

std::string sweep_variable_name(SweepVariable variable);

/// Returns the base config with the swept field replaced. num_users values
/// must be positive integers.
ScenarioConfig apply_sweep_value(ScenarioConfig base, SweepVariable variable, double value);

/// One experiment axis: the swept variable, its ordered values, the number
/// of Monte-Carlo trials per value (seeds shared across values), and the
/// schemes to evaluate on each sampled instance.
struct SweepSpec {
    SweepVariable variable = SweepVariable::kTransmitPowerDbm;
    std::vector<double> values;
    int trials = 200;
    ScenarioConfig base;
    std::vector<SchemeId> schemes;

    /// Throws std::invalid_argument unless values are nonempty and strictly
    /// monotone and trials >= 1.
    void validate() const;
};

/// Per-trial evaluation of every requested scheme on one shared instance.
struct TrialResult {
    std::uint64_t seed = 0;
    double sweep_value = 0.0;
    std::map<SchemeId, RateReport> reports;
    std::map<SchemeId, std::string> errors;  // optimizer failures, trial not aborted
};

struct SweepRow {
    SweepVariable variable;
    double value;
    SchemeId scheme;
    double mean_sum_rate;
    double mean_outage;
    int trials;
    std::uint64_t seed_base;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    std::vector<std::vector<TrialResult>> raw;  // [value_index][trial_index]
};

/// Samples one instance from (config, seed), synthesizes the channel
/// matrices once, and evaluates every requested scheme on them.
TrialResult run_trial(const ScenarioConfig& config, std::uint64_t seed,
                      const std::vector<SchemeId>& schemes);

/// Runs `trials` trials per sweep value with seeds base.rng_seed + t
/// (common random numbers across values), in parallel across (value, trial)
/// pairs, and aggregates mean QoS-filtered sum rate and mean outage per
/// scheme. Aggregation happens after a deterministic join, so results do
/// not depend on thread count or scheduling order.
SweepResult run_sweep(const SweepSpec& spec);

/// Writes "sweep_variable,sweep_value,scheme,mean_sum_rate,mean_outage,
/// trials,seed_base" plus one row per (value, scheme), 9 significant
/// digits, UTF-8 with LF line endings.
void emit_csv(const std::vector<SweepRow>& rows, const std::string& path);
std::string csv_to_string(const std::vector<SweepRow>& rows);

/// Flat key-value sweep file: `variable` (transmit_power_dbm | target_rate
/// | region_y_m | num_users), `values` (comma list), `trials`. Unknown keys
/// are errors; schemes and base config come from the caller.
SweepSpec load_sweep_file(const std::string& path, const ScenarioConfig& base,
                          const std::vector<SchemeId>& schemes);
SweepSpec parse_sweep(const std::string& text, const ScenarioConfig& base,
                      const std::vector<SchemeId>& schemes,
                      const std::string& origin = "<string>");

}  // namespace lcx

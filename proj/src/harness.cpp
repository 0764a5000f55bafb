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

#include "lcx/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "lcx/channel.hpp"
#include "lcx/dynamic_opt.hpp"
#include "lcx/static_opt.hpp"

namespace lcx {

std::string sweep_variable_name(SweepVariable variable) {
    switch (variable) {
        case SweepVariable::kTransmitPowerDbm: return "transmit_power_dbm";
        case SweepVariable::kTargetRate: return "target_rate";
        case SweepVariable::kRegionYM: return "region_y_m";
        case SweepVariable::kNumUsers: return "num_users";
    }
    throw std::invalid_argument("sweep_variable_name: unknown variable");
}

ScenarioConfig apply_sweep_value(ScenarioConfig base, SweepVariable variable, double value) {
    switch (variable) {
        case SweepVariable::kTransmitPowerDbm:
            base.transmit_power_dbm = value;
            break;
        case SweepVariable::kTargetRate:
            base.target_rate_bps_hz = value;
            break;
        case SweepVariable::kRegionYM:
            base.region_y_m = value;
            break;
        case SweepVariable::kNumUsers: {
            const double rounded = std::round(value);
            if (rounded != value || rounded < 1.0) {
                throw std::invalid_argument("num_users sweep value must be a positive integer, got " +
                                            std::to_string(value));
            }
            base.num_users = static_cast<int>(rounded);
            break;
        }
    }
    base.validate();
    return base;
}

void SweepSpec::validate() const {
    if (values.empty()) {
        throw std::invalid_argument("SweepSpec: values must be nonempty");
    }
    bool increasing = true;
    bool decreasing = true;
    for (std::size_t i = 1; i < values.size(); ++i) {
        increasing = increasing && values[i] > values[i - 1];
        decreasing = decreasing && values[i] < values[i - 1];
    }
    if (values.size() > 1 && !increasing && !decreasing) {
        throw std::invalid_argument("SweepSpec: values must be strictly monotone");
    }
    if (trials < 1) {
        throw std::invalid_argument("SweepSpec: trials must be >= 1");
    }
    if (schemes.empty()) {
        throw std::invalid_argument("SweepSpec: at least one scheme required");
    }
    base.validate();
    for (double v : values) {
        apply_sweep_value(base, variable, v);  // throws on invalid value
    }
}

TrialResult run_trial(const ScenarioConfig& config, std::uint64_t seed,
                      const std::vector<SchemeId>& schemes) {
    TrialResult result;
    result.seed = seed;

    ScenarioConfig cfg = config;
    cfg.rng_seed = seed;
    const ScenarioInstance instance = sample_scenario(cfg);

    const bool needs_lcx = std::any_of(schemes.begin(), schemes.end(),
                                       [](SchemeId s) { return s != SchemeId::kFixedAntenna; });
    const bool needs_fixed = std::any_of(schemes.begin(), schemes.end(),
                                         [](SchemeId s) { return s == SchemeId::kFixedAntenna; });
    ChannelMatrix lcx_channel;
    ChannelMatrix fixed_channel;
    if (needs_lcx) lcx_channel = composite_channel(cfg, instance);
    if (needs_fixed) fixed_channel = fixed_antenna_channel(cfg, instance);

    for (SchemeId scheme : schemes) {
        try {
            switch (scheme) {
                case SchemeId::kFixedAntenna:
                    result.reports[scheme] = fixed_antenna_rates(fixed_channel, cfg);
                    break;
                case SchemeId::kConventionalLcx:
                    result.reports[scheme] = conventional_lcx_rates(lcx_channel, cfg);
                    break;
                case SchemeId::kStaticBinary:
                    result.reports[scheme] =
                        binary_activation_optimize(lcx_channel, cfg, ActivationMode::kStatic).report;
                    break;
                case SchemeId::kDynamicBinary:
                    result.reports[scheme] =
                        binary_activation_optimize(lcx_channel, cfg, ActivationMode::kDynamic).report;
                    break;
                case SchemeId::kStaticAperture: {
                    const StaticResult opt = optimize_static(lcx_channel, cfg);
                    Eigen::VectorXd rates(lcx_channel.num_users());
                    for (int n = 0; n < lcx_channel.num_users(); ++n) {
                        rates[n] = static_rate(lcx_channel.user_column(n), opt.alpha, cfg);
                    }
                    result.reports[scheme] = build_report(rates, cfg);
                    break;
                }
                case SchemeId::kDynamicAperture: {
                    const auto users = optimize_dynamic(lcx_channel, cfg);
                    Eigen::VectorXd rates(lcx_channel.num_users());
                    for (int n = 0; n < lcx_channel.num_users(); ++n) {
                        rates[n] = dynamic_rate(lcx_channel.user_column(n),
                                                users[static_cast<std::size_t>(n)].alpha, cfg);
                    }
                    result.reports[scheme] = build_report(rates, cfg);
                    break;
                }
            }
        } catch (const std::exception& e) {
            result.errors[scheme] = e.what();
        }
    }
    return result;
}

SweepResult run_sweep(const SweepSpec& spec) {
    spec.validate();
    const int num_values = static_cast<int>(spec.values.size());
    const int trials = spec.trials;

    std::vector<ScenarioConfig> configs;
    configs.reserve(static_cast<std::size_t>(num_values));
    for (double v : spec.values) {
        configs.push_back(apply_sweep_value(spec.base, spec.variable, v));
    }

    SweepResult result;
    result.raw.assign(static_cast<std::size_t>(num_values),
                      std::vector<TrialResult>(static_cast<std::size_t>(trials)));

#pragma omp parallel for collapse(2) schedule(dynamic)
    for (int vi = 0; vi < num_values; ++vi) {
        for (int t = 0; t < trials; ++t) {
            TrialResult trial;
            try {
                trial = run_trial(configs[static_cast<std::size_t>(vi)],
                                  spec.base.rng_seed + static_cast<std::uint64_t>(t), spec.schemes);
            } catch (const std::exception& e) {
                trial.seed = spec.base.rng_seed + static_cast<std::uint64_t>(t);
                for (SchemeId scheme : spec.schemes) trial.errors[scheme] = e.what();
            }
            trial.sweep_value = spec.values[static_cast<std::size_t>(vi)];
            result.raw[static_cast<std::size_t>(vi)][static_cast<std::size_t>(t)] =
                std::move(trial);
        }
    }

    for (int vi = 0; vi < num_values; ++vi) {
        for (SchemeId scheme : spec.schemes) {
            double sum_rate = 0.0;
            double sum_outage = 0.0;
            int count = 0;
            for (const TrialResult& trial : result.raw[static_cast<std::size_t>(vi)]) {
                const auto it = trial.reports.find(scheme);
                if (it == trial.reports.end()) continue;
                sum_rate += it->second.sum_rate_qos_filtered;
                sum_outage += it->second.outage_fraction;
                ++count;
            }
            SweepRow row{};
            row.variable = spec.variable;
            row.value = spec.values[static_cast<std::size_t>(vi)];
            row.scheme = scheme;
            row.mean_sum_rate = count > 0 ? sum_rate / count : std::nan("");
            row.mean_outage = count > 0 ? sum_outage / count : std::nan("");
            row.trials = trials;
            row.seed_base = spec.base.rng_seed;
            result.rows.push_back(row);
        }
    }
    return result;
}

std::string csv_to_string(const std::vector<SweepRow>& rows) {
    std::string out = "sweep_variable,sweep_value,scheme,mean_sum_rate,mean_outage,trials,seed_base\n";
    char buf[256];
    for (const SweepRow& row : rows) {
        std::snprintf(buf, sizeof(buf), "%s,%.9g,%s,%.9g,%.9g,%d,%llu\n",
                      sweep_variable_name(row.variable).c_str(), row.value,
                      scheme_name(row.scheme).c_str(), row.mean_sum_rate, row.mean_outage,
                      row.trials, static_cast<unsigned long long>(row.seed_base));
        out += buf;
    }
    return out;
}

void emit_csv(const std::vector<SweepRow>& rows, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open output file: " + path);
    }
    out << csv_to_string(rows);
    if (!out) {
        throw std::runtime_error("error writing CSV: " + path);
    }
}

namespace {

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, ',')) {
        const auto b = cur.find_first_not_of(" \t");
        const auto e = cur.find_last_not_of(" \t");
        parts.push_back(b == std::string::npos ? std::string() : cur.substr(b, e - b + 1));
    }
    return parts;
}

}  // namespace

SweepSpec parse_sweep(const std::string& text, const ScenarioConfig& base,
                      const std::vector<SchemeId>& schemes, const std::string& origin) {
    SweepSpec spec;
    spec.base = base;
    spec.schemes = schemes;

    bool have_variable = false;
    bool have_values = false;

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t\r");
        line = line.substr(first, last - first + 1);

        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument(origin + ":" + std::to_string(lineno) +
                                        ": expected 'key = value'");
        }
        std::string key = line.substr(0, eq);
        std::string value = line.substr(eq + 1);
        auto trim = [](std::string& s) {
            const auto b = s.find_first_not_of(" \t");
            const auto e = s.find_last_not_of(" \t");
            s = (b == std::string::npos) ? std::string() : s.substr(b, e - b + 1);
        };
        trim(key);
        trim(value);

        if (key == "variable") {
            if (value == "transmit_power_dbm") spec.variable = SweepVariable::kTransmitPowerDbm;
            else if (value == "target_rate") spec.variable = SweepVariable::kTargetRate;
            else if (value == "region_y_m") spec.variable = SweepVariable::kRegionYM;
            else if (value == "num_users") spec.variable = SweepVariable::kNumUsers;
            else
                throw std::invalid_argument(origin + ":" + std::to_string(lineno) +
                                            ": unknown sweep variable '" + value + "'");
            have_variable = true;
        } else if (key == "values") {
            for (const std::string& part : split_commas(value)) {
                try {
                    std::size_t pos = 0;
                    spec.values.push_back(std::stod(part, &pos));
                    if (pos != part.size()) throw std::invalid_argument("trailing characters");
                } catch (const std::exception&) {
                    throw std::invalid_argument(origin + ":" + std::to_string(lineno) +
                                                ": bad sweep value '" + part + "'");
                }
            }
            have_values = true;
        } else if (key == "trials") {
            try {
                std::size_t pos = 0;
                spec.trials = std::stoi(value, &pos);
                if (pos != value.size()) throw std::invalid_argument("trailing characters");
            } catch (const std::exception&) {
                throw std::invalid_argument(origin + ":" + std::to_string(lineno) +
                                            ": bad trials value '" + value + "'");
            }
        } else {
            throw std::invalid_argument(origin + ":" + std::to_string(lineno) +
                                        ": unknown key '" + key + "'");
        }
    }
    if (!have_variable || !have_values) {
        throw std::invalid_argument(origin + ": sweep file needs 'variable' and 'values'");
    }
    spec.validate();
    return spec;
}

SweepSpec load_sweep_file(const std::string& path, const ScenarioConfig& base,
                          const std::vector<SchemeId>& schemes) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open sweep file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_sweep(buf.str(), base, schemes, path);
}

}  // namespace lcx

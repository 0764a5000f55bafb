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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lcx/scenario.hpp"

using namespace lcx;

TEST_CASE("dBm conversion round-trips") {
    CHECK(dbm_to_watts(30.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(dbm_to_watts(0.0) == doctest::Approx(1e-3).epsilon(1e-14));
    for (double dbm : {-64.0, -10.0, 0.0, 17.5, 40.0}) {
        CHECK(watts_to_dbm(dbm_to_watts(dbm)) == doctest::Approx(dbm).epsilon(1e-12));
    }
    CHECK_THROWS_AS(watts_to_dbm(0.0), std::domain_error);
}

TEST_CASE("derived quantities") {
    ScenarioConfig cfg;
    CHECK(cfg.wavelength_m() == doctest::Approx(299792458.0 / 3.5e9).epsilon(1e-15));
    CHECK(cfg.noise_power_w() == doctest::Approx(std::pow(10.0, -9.4)).epsilon(1e-12));
    CHECK(cfg.snr_linear() == doctest::Approx(dbm_to_watts(20.0) / dbm_to_watts(-64.0)));
}

TEST_CASE("slot positions") {
    ScenarioConfig cfg;  // D_x = 50, spacing 1, height 3
    const Eigen::Vector3d s1 = slot_position(cfg, 1);
    CHECK(s1.x() == doctest::Approx(-25.0));
    CHECK(s1.y() == 0.0);
    CHECK(s1.z() == doctest::Approx(3.0));

    const Eigen::Vector3d s2 = slot_position(cfg, 2);
    CHECK(s2.x() == doctest::Approx(-24.0));

    const Eigen::Vector3d s50 = slot_position(cfg, 50);
    CHECK(s50.x() == doctest::Approx(24.0));

    CHECK_THROWS_AS(slot_position(cfg, 0), std::out_of_range);
    CHECK_THROWS_AS(slot_position(cfg, 51), std::out_of_range);
}

TEST_CASE("feed position and slot 1 coincide") {
    ScenarioConfig cfg;
    CHECK(feed_position(cfg) == slot_position(cfg, 1));

    ScenarioConfig small;
    small.region_x_m = 10.0;
    small.cable_height_m = 1.0;
    small.num_slots = 5;
    small.slot_spacing_m = 2.0;
    const Eigen::Vector3d f = feed_position(small);
    CHECK(f.x() == doctest::Approx(-5.0));
    CHECK(f.z() == doctest::Approx(1.0));
}

TEST_CASE("config validation") {
    ScenarioConfig cfg;
    CHECK_NOTHROW(cfg.validate());

    ScenarioConfig bad = cfg;
    bad.region_x_m = 0.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    bad = cfg;
    bad.num_slots = 60;  // 59 m of slots in a 50 m region
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    bad = cfg;
    bad.relative_permittivity = 0.9;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    bad = cfg;
    bad.num_users = 0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("sampling is deterministic in (config, seed)") {
    ScenarioConfig cfg;
    cfg.rng_seed = 7;
    const ScenarioInstance a = sample_scenario(cfg);
    const ScenarioInstance b = sample_scenario(cfg);
    REQUIRE(a.user_positions.size() == b.user_positions.size());
    for (std::size_t i = 0; i < a.user_positions.size(); ++i) {
        CHECK(a.user_positions[i] == b.user_positions[i]);
    }
    REQUIRE(a.scatterer_positions.size() == b.scatterer_positions.size());
    for (std::size_t i = 0; i < a.scatterer_positions.size(); ++i) {
        CHECK(a.scatterer_positions[i] == b.scatterer_positions[i]);
        CHECK(a.scatterer_gains[i] == b.scatterer_gains[i]);
    }

    ScenarioConfig other = cfg;
    other.rng_seed = 8;
    const ScenarioInstance c = sample_scenario(other);
    CHECK(a.user_positions[0] != c.user_positions[0]);
}

TEST_CASE("degenerate scatterer count") {
    ScenarioConfig cfg;
    cfg.num_scatterers = 0;
    const ScenarioInstance inst = sample_scenario(cfg);
    CHECK(inst.scatterer_positions.empty());
    CHECK(inst.scatterer_gains.empty());
}

TEST_CASE("users fill the ground rectangle") {
    ScenarioConfig cfg;
    cfg.num_users = 1000;
    cfg.rng_seed = 11;
    const ScenarioInstance inst = sample_scenario(cfg);

    Eigen::Vector3d mean = Eigen::Vector3d::Zero();
    for (const auto& p : inst.user_positions) {
        CHECK(p.x() >= -25.0);
        CHECK(p.x() <= 25.0);
        CHECK(p.y() >= -10.0);
        CHECK(p.y() <= 10.0);
        CHECK(p.z() == 0.0);
        mean += p;
    }
    mean /= 1000.0;
    // 3 sigma of the mean of 1000 uniform draws
    const double tol_x = 3.0 * (50.0 / std::sqrt(12.0)) / std::sqrt(1000.0);
    const double tol_y = 3.0 * (20.0 / std::sqrt(12.0)) / std::sqrt(1000.0);
    CHECK(std::abs(mean.x()) < tol_x);
    CHECK(std::abs(mean.y()) < tol_y);
    CHECK(mean.z() == 0.0);
}

TEST_CASE("scatterers sit on the boundary walls") {
    ScenarioConfig cfg;
    cfg.num_scatterers = 500;
    cfg.rng_seed = 21;
    const ScenarioInstance inst = sample_scenario(cfg);
    for (const auto& p : inst.scatterer_positions) {
        const bool on_x_wall = p.x() == -25.0 || p.x() == 25.0;
        const bool on_y_wall = p.y() == -10.0 || p.y() == 10.0;
        CHECK((on_x_wall || on_y_wall));
        CHECK(p.z() > 0.0);
        CHECK(p.z() <= cfg.wall_height_m);
    }
    for (const auto& g : inst.scatterer_gains) {
        CHECK(std::isfinite(g.real()));
        CHECK(std::isfinite(g.imag()));
    }
}

TEST_CASE("user x-coordinates pass a KS uniformity test") {
    ScenarioConfig cfg;
    cfg.num_users = 10000;
    cfg.rng_seed = 31;
    const ScenarioInstance inst = sample_scenario(cfg);

    std::vector<double> xs;
    xs.reserve(inst.user_positions.size());
    for (const auto& p : inst.user_positions) xs.push_back(p.x());
    std::sort(xs.begin(), xs.end());

    const double n = static_cast<double>(xs.size());
    double d_stat = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double cdf = (xs[i] + 25.0) / 50.0;
        const double lo = static_cast<double>(i) / n;
        const double hi = static_cast<double>(i + 1) / n;
        d_stat = std::max({d_stat, std::abs(cdf - lo), std::abs(cdf - hi)});
    }
    // asymptotic critical value at significance 0.01
    CHECK(d_stat < 1.6276 / std::sqrt(n));
}

TEST_CASE("config file parsing") {
    const std::string text =
        "# reference deployment\n"
        "carrier_freq_hz = 3.5e9\n"
        "noise_power_dbm = -64\n"
        "transmit_power_dbm = 20\n"
        "num_slots = 25\n"
        "region_x_m = 50\n"
        "num_users = 2\n"
        "rng_seed = 99\n";
    const ScenarioConfig cfg = parse_config(text);
    CHECK(cfg.num_slots == 25);
    CHECK(cfg.num_users == 2);
    CHECK(cfg.rng_seed == 99);
    // spacing defaults to region_x / num_slots when not given
    CHECK(cfg.slot_spacing_m == doctest::Approx(2.0));
    // wall height defaults to the cable height
    CHECK(cfg.wall_height_m == doctest::Approx(cfg.cable_height_m));

    CHECK_THROWS_AS(parse_config("bogus_key = 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_config("num_slots = ten\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_config("num_slots = 5\nnum_slots = 6\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_config("region_x_m = 0\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_config("no equals sign here\n"), std::invalid_argument);
    CHECK_THROWS_AS(load_config_file("/nonexistent/path.cfg"), std::invalid_argument);

    // explicit spacing survives
    const ScenarioConfig spaced = parse_config("num_slots = 10\nslot_spacing_m = 3\n");
    CHECK(spaced.slot_spacing_m == doctest::Approx(3.0));
}

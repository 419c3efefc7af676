/*
   Copyright 2026 The vanet-outage Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "vanet/analysis.hpp"
#include "vanet/montecarlo.hpp"

#include <doctest.h>

#include <cmath>

using namespace vanet;

namespace {

const CachingParams kDefaults = CachingParams::defaults();

/// Speeds such that u = v tau / r is U[0, 1] at tau = 1 s.
CachingParams unit_displacement()
{
    auto p = kDefaults;
    p.v_min_ms = 0.0;
    p.v_max_ms = p.range_m;
    return p;
}

bool within_3se(double p_hat, double p, std::uint64_t n)
{
    return std::abs(p_hat - p) <= 3.0 * std::sqrt(p * (1 - p) / static_cast<double>(n));
}

} // namespace

TEST_CASE("Wilson interval")
{
    const auto e = wilson_estimate(50, 100);
    CHECK(e.p_hat == 0.5);
    CHECK(e.ci_lower == doctest::Approx(0.4038).epsilon(1e-3));
    CHECK(e.ci_upper == doctest::Approx(0.5962).epsilon(1e-3));
    const auto all = wilson_estimate(1000, 1000);
    CHECK(all.p_hat == 1.0);
    CHECK(all.ci_upper == 1.0);
    CHECK(all.ci_lower < 1.0);
    CHECK_THROWS_AS(wilson_estimate(3, 2), std::invalid_argument);
}

TEST_CASE("zero horizon and zero overlap are exact")
{
    const auto rf = builtin_model(ModelSpec::random_full(), kDefaults);
    TrialConfig cfg;
    cfg.n_trials = 100000;
    const auto reach = estimate_p_neigh(rf, kDefaults, 0.0, cfg);
    CHECK(reach.p_hat == 1.0);
    CHECK(reach.ci_half_width <= 4.0 / cfg.n_trials);
    CHECK(estimate_p_outage(rf, kDefaults, 0.0, cfg).p_hat == 1.0);

    auto none = kDefaults;
    none.gamma = 0.0;
    CHECK(estimate_p_outage(builtin_model(ModelSpec::random_full(), none), none, 5.0, cfg).p_hat == 1.0);
}

TEST_CASE("quarter-circle target")
{
    const auto p = unit_displacement();
    const auto vf = builtin_model(ModelSpec::vehicular_full(), p);
    const auto e = estimate_p_neigh(vf, p, 1.0);
    CHECK(within_3se(e.p_hat, kPi / 4, e.n));
    CHECK(e.successes == static_cast<std::uint64_t>(std::llround(e.p_hat * e.n)));
}

TEST_CASE("outage estimate matches the closed-form composition")
{
    const auto vf = builtin_model(ModelSpec::vehicular_full(), kDefaults);
    const auto e = estimate_p_outage(vf, kDefaults, 10.0);
    CHECK(within_3se(e.p_hat, 0.43371967723903565, e.n));

    const auto rf = builtin_model(ModelSpec::random_full(), kDefaults);
    const auto [u_min, u_max] = normalized_speed_bounds(kDefaults, 10.0);
    const double reach = p_neigh_quadrature(rf, u_min, u_max);
    CHECK(within_3se(estimate_p_neigh(rf, kDefaults, 10.0).p_hat, reach, 1'000'000));
}

TEST_CASE("results do not depend on the partition count")
{
    const auto rf = builtin_model(ModelSpec::random_full(), kDefaults);
    TrialConfig cfg;
    cfg.n_trials = 123457;
    cfg.seed = 99;
    const auto base = estimate_p_outage(rf, kDefaults, 7.5, cfg);
    for (std::uint64_t parts : {2u, 3u, 4u, 16u, 31u, 1000u}) {
        cfg.n_partitions = parts;
        const auto e = estimate_p_outage(rf, kDefaults, 7.5, cfg);
        CHECK(e.successes == base.successes);
        CHECK(e.p_hat == base.p_hat);
    }
    cfg.n_partitions = 1;
    cfg.seed = 100;
    CHECK(estimate_p_outage(rf, kDefaults, 7.5, cfg).successes != base.successes);
}

TEST_CASE("Wilson interval coverage")
{
    const auto p = unit_displacement();
    const auto vf = builtin_model(ModelSpec::vehicular_full(), p);
    int covered = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        TrialConfig cfg;
        cfg.n_trials = 20000;
        cfg.seed = seed;
        const auto e = estimate_p_neigh(vf, p, 1.0, cfg);
        covered += e.ci_lower <= kPi / 4 && kPi / 4 <= e.ci_upper;
    }
    CHECK(covered >= 90);
}

TEST_CASE("Monte Carlo curve")
{
    const auto grid = TauGrid::uniform(0.0, 30.0, 5.0);
    const auto vf = builtin_model(ModelSpec::vehicular_full(), kDefaults);
    TrialConfig cfg;
    cfg.n_trials = 200000;
    const auto mc = mc_outage_curve(vf, kDefaults, grid, cfg);
    const auto exact = outage_curve(vf, kDefaults, grid, Method::closed_form);
    REQUIRE(mc.points.size() == grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const auto& p = mc.points[i];
        CHECK(p.method == Method::monte_carlo);
        REQUIRE(p.ci_half_width.has_value());
        CHECK(p.p_outage == doctest::Approx(1 - p.p_find).epsilon(1e-15));
        CHECK(within_3se(p.p_outage, exact.points[i].p_outage, cfg.n_trials));
    }
    CHECK(mc.points[0].p_outage == 1.0);

    const auto again = mc_outage_curve(vf, kDefaults, grid, cfg);
    for (std::size_t i = 0; i < grid.size(); ++i)
        CHECK(again.points[i].p_outage == mc.points[i].p_outage);
}

TEST_CASE("trial config validation")
{
    TrialConfig cfg;
    cfg.n_trials = 0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.n_trials = 10;
    cfg.n_partitions = 11;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

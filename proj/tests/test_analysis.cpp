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
#include <stdexcept>

using namespace vanet;

namespace {

const CachingParams kDefaults = CachingParams::defaults();

MobilityModel model(const ModelSpec& s)
{
    return builtin_model(s, kDefaults);
}

// Values from tests/oracles/pneigh_oracle.py: the reach x-interval
// integrated over (u, theta), independent of the exit-distance route.
constexpr double kRandomFullTau2 = 0.965916524273434;
constexpr double kRandomFullTau10 = 0.781134766353570;
constexpr double kRandomFullTau30 = 0.254758288944231;
constexpr double kSectorPi8Tau10 = 0.815117351768085;
constexpr double kLimitedPi4Tau10 = 0.511374167541110;
constexpr double kLiteral01 = 0.45071584712271411591;
constexpr double kLiteral0106 = 0.48126153566815672229;
constexpr double kVehicularTau10 = 0.80897188965859625281;

} // namespace

TEST_CASE("conditional reach probability")
{
    CHECK(p_neigh_conditional(0.0, 1.0, 2.0) == 1.0);
    CHECK(p_neigh_conditional(0.5, 0.5, 0.4) == 0.0);
    CHECK(p_neigh_conditional(0.5, 0.5, 0.5) == 1.0);
    CHECK(p_neigh_conditional(0.0, 1.0, 0.25) == 0.25);
    CHECK(p_neigh_conditional(0.2, 0.4, 0.1) == 0.0);
}

TEST_CASE("vehicular closed form")
{
    CHECK(std::abs(p_neigh_vehicular_closed(0.0, 1.0) - kPi / 4) <= 1e-15);
    CHECK(p_neigh_vehicular_closed(0.6, 0.6) == doctest::Approx(0.8).epsilon(1e-15));
    CHECK(p_neigh_vehicular_closed(1.5, 1.5) == 0.0);
    const auto [u_min, u_max] = normalized_speed_bounds(kDefaults, 10.0);
    CHECK(std::abs(p_neigh_vehicular_closed(u_min, u_max) - kVehicularTau10) <= 1e-14);
    // Beyond the disk the mass contributes zero while the density keeps its width.
    CHECK(std::abs(p_neigh_vehicular_closed(0.0, 2.0) - kPi / 8) <= 1e-15);
    CHECK_THROWS_AS(p_neigh_vehicular_closed(0.5, 0.2), std::invalid_argument);
}

TEST_CASE("quadrature on the freeway model matches the closed form")
{
    const auto vf = model(ModelSpec::vehicular_full());
    QuadratureSettings tight;
    tight.abs_tol = 1e-9;
    CHECK(std::abs(p_neigh_quadrature(vf, 0.0, 1.0, tight) - kPi / 4) <= 1e-9);
    const auto [u_min, u_max] = normalized_speed_bounds(kDefaults, 10.0);
    CHECK(std::abs(p_neigh_quadrature(vf, u_min, u_max, tight) - kVehicularTau10) <= 1e-9);

    const QuadratureSettings def;
    for (double um : {0.1, 0.25, 0.5, 0.75, 1.0, 1.5}) {
        CAPTURE(um);
        CHECK(std::abs(p_neigh_quadrature(vf, 0.1 * um, um, def) - p_neigh_vehicular_closed(0.1 * um, um)) <=
              10 * def.abs_tol);
    }
}

TEST_CASE("quadrature matches the independent region oracle")
{
    const auto rf = model(ModelSpec::random_full());
    const QuadratureSettings s;
    auto at = [&](const MobilityModel& m, double tau) {
        const auto [u_min, u_max] = normalized_speed_bounds(kDefaults, tau);
        return p_neigh_quadrature(m, u_min, u_max, s);
    };
    CHECK(std::abs(at(rf, 2.0) - kRandomFullTau2) <= 1e-7);
    CHECK(std::abs(at(rf, 10.0) - kRandomFullTau10) <= 1e-7);
    CHECK(std::abs(at(rf, 30.0) - kRandomFullTau30) <= 1e-7);
    CHECK(std::abs(at(model(ModelSpec::random_sector(kPi / 2 - kPi / 8, kPi / 2 + kPi / 8, "s")), 10.0) -
                   kSectorPi8Tau10) <= 1e-7);
    CHECK(std::abs(at(model(ModelSpec::random_limited(-kPi / 4, kPi / 4, "l")), 10.0) - kLimitedPi4Tau10) <= 1e-7);
}

TEST_CASE("quadrature on the outward ray has a closed form")
{
    // theta = 0, x ~ U[0, 1]: l = 1 - x, so P(u <= l) = 1 - u for u <= 1.
    const auto lim = model(ModelSpec::random_limited(0.0, 0.0, "l"));
    CHECK(std::abs(p_neigh_quadrature(lim, 0.2, 0.6) - (1.0 - 0.4)) <= 1e-7);
    CHECK(std::abs(p_neigh_quadrature(lim, 0.5, 1.5) - 0.125) <= 1e-7);
}

TEST_CASE("quadrature edge cases")
{
    const auto rf = model(ModelSpec::random_full());
    CHECK(p_neigh_quadrature(rf, 0.0, 0.0) == 1.0);
    const MobilityModel fixed("fixed", ScalarDist::deterministic(0.5), ScalarDist::deterministic(0.0),
                              ScalarDist::deterministic(1.0));
    CHECK(p_neigh_quadrature(fixed, 0.2, 0.7) == doctest::Approx(0.6));
    const MobilityModel fixed_x("fx", ScalarDist::deterministic(0.0), ScalarDist::uniform(0.0, kTwoPi),
                                ScalarDist::deterministic(1.0));
    CHECK(p_neigh_quadrature(fixed_x, 0.0, 2.0) == doctest::Approx(0.5).epsilon(1e-7));

    QuadratureSettings starved;
    starved.abs_tol = 1e-14;
    starved.max_subdivisions = 2;
    try {
        (void)p_neigh_quadrature(rf, 0.1, 0.9, starved);
        FAIL("expected non-convergence");
    } catch (const NonConvergenceError& e) {
        CHECK(e.estimate() > 0.0);
        CHECK(e.error_bound() > starved.abs_tol);
    }
}

TEST_CASE("quadrature is monotone in tau and bounded")
{
    const auto rf = model(ModelSpec::random_full());
    double prev = 1.0;
    for (double tau = 0.0; tau <= 60.0; tau += 2.5) {
        const auto [u_min, u_max] = normalized_speed_bounds(kDefaults, tau);
        const double p = p_neigh_quadrature(rf, u_min, u_max);
        CHECK(p >= 0.0);
        CHECK(p <= 1.0);
        CHECK(p <= prev + 1e-7);
        prev = p;
    }
}

TEST_CASE("random model quadrature agrees with 1e7 Monte Carlo trials")
{
    const auto rf = model(ModelSpec::random_full());
    const auto [u_min, u_max] = normalized_speed_bounds(kDefaults, 10.0);
    const double analytic = p_neigh_quadrature(rf, u_min, u_max);
    TrialConfig cfg;
    cfg.n_trials = 10'000'000;
    cfg.seed = 20260101;
    const auto est = estimate_p_neigh(rf, kDefaults, 10.0, cfg);
    const double se = std::sqrt(analytic * (1 - analytic) / cfg.n_trials);
    CHECK(std::abs(est.p_hat - analytic) <= 3 * se);
}

TEST_CASE("narrow sector converges to the freeway closed form")
{
    const double delta = 1e-3;
    const auto s = model(ModelSpec::random_sector(kPi / 2 - delta, kPi / 2 + delta, "s"));
    for (double tau : {2.0, 10.0, 30.0}) {
        const auto [u_min, u_max] = normalized_speed_bounds(kDefaults, tau);
        CHECK(std::abs(p_neigh_quadrature(s, u_min, u_max) - p_neigh_vehicular_closed(u_min, u_max)) <= 1e-4);
    }
}

TEST_CASE("literal closed double integral")
{
    QuadratureSettings tight;
    tight.abs_tol = 1e-9;
    const auto full = p_neigh_literal_random(0.0, 1.0, tight);
    CHECK(std::abs(full.unclamped - kLiteral01) <= 1e-9);
    CHECK_FALSE(full.radicand_clamped);
    CHECK(std::abs(p_neigh_literal_random(0.1, 0.6, tight).unclamped - kLiteral0106) <= 1e-9);

    // As the displacement range shrinks to zero the literal integrand averages
    // to one half, not one: its x-interval starts at 0 instead of -1.
    CHECK(std::abs(p_neigh_literal_random(0.0, 1e-6).value - 0.5) <= 1e-6);

    const auto beyond = p_neigh_literal_random(0.5, 2.0);
    CHECK(beyond.radicand_clamped);
    CHECK(beyond.value >= 0.0);
    CHECK(beyond.value <= 1.0);
    CHECK_THROWS_AS(p_neigh_literal_random(0.3, 0.3), std::invalid_argument);
}

TEST_CASE("outage curves")
{
    const auto grid = TauGrid::uniform(0.0, 20.0, 2.0);
    const auto vf = model(ModelSpec::vehicular_full());
    const auto rf = model(ModelSpec::random_full());

    const auto closed = outage_curve(vf, kDefaults, grid, Method::closed_form);
    const auto quad = outage_curve(vf, kDefaults, grid, Method::quadrature);
    REQUIRE(closed.points.size() == grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const auto& p = closed.points[i];
        CHECK(p.tau_s == grid[i]);
        CHECK(std::abs(p.p_find - kDefaults.gamma * p.p_neigh * p.p_request) <= 1e-15);
        CHECK(std::abs(p.p_outage - (1 - p.p_find)) <= 1e-15);
        CHECK(std::abs(p.p_outage - quad.points[i].p_outage) <= 1e-7);
    }
    CHECK(closed.points[0].p_outage == 1.0);
    CHECK(outage_curve(rf, kDefaults, grid, Method::quadrature).points[0].p_outage == 1.0);

    auto no_overlap = kDefaults;
    no_overlap.gamma = 0.0;
    for (const auto& p : outage_curve(builtin_model(ModelSpec::random_full(), no_overlap), no_overlap, grid,
                                      Method::quadrature).points)
        CHECK(p.p_outage == 1.0);

    CHECK_THROWS_AS(outage_curve(rf, kDefaults, grid, Method::closed_form), std::invalid_argument);
    CHECK_THROWS_AS(outage_curve(rf, kDefaults, grid, Method::monte_carlo), std::invalid_argument);
    auto slower = kDefaults;
    slower.v_max_ms = 1.0;
    CHECK_THROWS_AS(outage_curve(rf, slower, grid, Method::quadrature), std::invalid_argument);
}

TEST_CASE("freeway outage curve is U-shaped")
{
    const auto grid = TauGrid::default_grid();
    const auto c = outage_curve(model(ModelSpec::vehicular_full()), kDefaults, grid, Method::closed_form);
    std::size_t argmin = 0;
    for (std::size_t i = 1; i < c.points.size(); ++i)
        if (c.points[i].p_outage < c.points[argmin].p_outage)
            argmin = i;
    CHECK(argmin > 0);
    CHECK(argmin + 1 < c.points.size());
    CHECK(c.points.front().p_outage > c.points[argmin].p_outage + 0.1);
    CHECK(c.points.back().p_outage > c.points[argmin].p_outage + 0.1);
}

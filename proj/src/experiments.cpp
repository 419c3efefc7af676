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

#include "vanet/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace vanet {

void Scenario::validate() const
{
    if (random_family.empty())
        throw std::invalid_argument("scenario needs at least one random model");
    if (headline >= random_family.size())
        throw std::invalid_argument("scenario headline index out of range");
    if (grid.empty())
        throw std::invalid_argument("scenario grid is empty");
    params.validate();
    for (const auto& spec : random_family)
        (void)builtin_model(spec, params);
    (void)builtin_model(vehicular, params);
}

std::vector<std::string> builtin_scenario_names()
{
    return {"fig4", "fig5", "fig6", "fig7"};
}

Scenario builtin_scenario(const std::string& name)
{
    Scenario s;
    s.name = name;
    s.params = CachingParams::defaults();
    s.grid = TauGrid::default_grid();

    if (name == "fig4") {
        s.description = "random mobility (x~U[-r,r], theta~U[0,2pi]) vs straight freeway (x~U[-r,r], theta=pi/2)";
        s.random_family = {ModelSpec::random_full("random")};
        s.vehicular = ModelSpec::vehicular_full("vehicular");
    } else if (name == "fig5") {
        s.description = "heading sector pi/2 +- delta shrinking toward the freeway axis, delta in {pi, pi/2, pi/4, pi/8, pi/16}";
        const std::pair<double, const char*> ladder[] = {
            {kPi, "random_delta_pi"},         {kPi / 2, "random_delta_pi_2"},  {kPi / 4, "random_delta_pi_4"},
            {kPi / 8, "random_delta_pi_8"}, {kPi / 16, "random_delta_pi_16"},
        };
        for (const auto& [delta, label] : ladder)
            s.random_family.push_back(ModelSpec::random_sector(0.5 * kPi - delta, 0.5 * kPi + delta, label));
        s.vehicular = ModelSpec::vehicular_full("vehicular");
    } else if (name == "fig6") {
        s.description = "limited start x~U[0,r] for both models; random heading sector 0 +- delta shrinking to the +X axis, "
                        "delta in {pi, 7pi/8, 3pi/4, pi/2, pi/4, 0}; headline theta=0";
        const std::pair<double, const char*> ladder[] = {
            {kPi, "random_delta_pi"},         {7 * kPi / 8, "random_delta_7pi_8"}, {3 * kPi / 4, "random_delta_3pi_4"},
            {kPi / 2, "random_delta_pi_2"},   {kPi / 4, "random_delta_pi_4"},      {0.0, "random_theta_0"},
        };
        for (const auto& [delta, label] : ladder)
            s.random_family.push_back(ModelSpec::random_limited(-delta, delta, label));
        s.headline = s.random_family.size() - 1;
        s.vehicular = ModelSpec::custom(ScalarDist::uniform(0.0, 1.0), ScalarDist::deterministic(0.5 * kPi), "vehicular");
    } else if (name == "fig7") {
        s.description = "random mobility (x~U[-r,r], theta~U[0,2pi]) vs 5-lane freeway, 4 m lanes (x~U[0, 20 m])";
        s.random_family = {ModelSpec::random_full("random")};
        s.vehicular = ModelSpec::vehicular_lanes(5, 4.0, "vehicular");
    } else {
        throw std::invalid_argument("unknown scenario: " + name);
    }
    return s;
}

std::string_view to_string(Engine e)
{
    return e == Engine::quadrature ? "quadrature" : "monte_carlo";
}

Engine parse_engine(std::string_view s)
{
    if (s == "quadrature")
        return Engine::quadrature;
    if (s == "monte_carlo" || s == "montecarlo" || s == "mc")
        return Engine::monte_carlo;
    throw std::invalid_argument("unknown engine: " + std::string(s));
}

namespace {

void check_same_grid(const OutageCurve& a, const OutageCurve& b)
{
    if (a.points.size() != b.points.size())
        throw std::invalid_argument("curves are on different grids");
    for (std::size_t i = 0; i < a.points.size(); ++i)
        if (a.points[i].tau_s != b.points[i].tau_s)
            throw std::invalid_argument("curves are on different grids");
}

int sign_of(double d)
{
    return (d > 0.0) - (d < 0.0);
}

struct Bracket
{
    std::size_t lo;  // last point with the old sign
    std::size_t hi;  // first point with the new sign
};

/// Sign changes of a - b, skipping exact zeros.
std::vector<Bracket> sign_changes(const OutageCurve& a, const OutageCurve& b)
{
    check_same_grid(a, b);
    std::vector<Bracket> out;
    std::optional<std::size_t> last;
    for (std::size_t i = 0; i < a.points.size(); ++i) {
        const int s = sign_of(a.points[i].p_outage - b.points[i].p_outage);
        if (s == 0)
            continue;
        if (last) {
            const int prev = sign_of(a.points[*last].p_outage - b.points[*last].p_outage);
            if (prev != s)
                out.push_back({*last, i});
        }
        last = i;
    }
    return out;
}

double diff_at(const OutageCurve& a, const OutageCurve& b, std::size_t i)
{
    return a.points[i].p_outage - b.points[i].p_outage;
}

double combined_ci(const OutageCurve& a, const OutageCurve& b, std::size_t i)
{
    const double ca = a.points[i].ci_half_width.value_or(0.0);
    const double cb = b.points[i].ci_half_width.value_or(0.0);
    return std::hypot(ca, cb);
}

ImprovementStats stats_over(const std::vector<ImprovementRecord>& records, bool region_only)
{
    ImprovementStats st;
    double sum = 0.0;
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& r : records) {
        if (region_only && !(r.p_outage_vehicular < kOutageRegionThreshold))
            continue;
        sum += r.rel_improvement;
        best = std::max(best, r.rel_improvement);
        ++st.n_points;
    }
    if (st.n_points) {
        st.avg = sum / static_cast<double>(st.n_points);
        st.max = best;
    }
    return st;
}

} // namespace

std::vector<Crossover> find_crossovers(const OutageCurve& a, const OutageCurve& b)
{
    std::vector<Crossover> out;
    for (const auto& br : sign_changes(a, b)) {
        const double d0 = diff_at(a, b, br.lo);
        const double d1 = diff_at(a, b, br.hi);
        const double t0 = a.points[br.lo].tau_s;
        const double t1 = a.points[br.hi].tau_s;
        Crossover c;
        c.tau_s = t0 + (t1 - t0) * d0 / (d0 - d1);
        c.uncertain = std::abs(d0) <= combined_ci(a, b, br.lo) || std::abs(d1) <= combined_ci(a, b, br.hi);
        out.push_back(c);
    }
    return out;
}

std::vector<Crossover> find_crossovers(const OutageCurve& a, const OutageCurve& b, const OutageFunction& fa,
                                       const OutageFunction& fb, double tol_s)
{
    if (!(tol_s > 0.0))
        throw std::invalid_argument("bisection tolerance must be positive");
    std::vector<Crossover> out;
    for (const auto& br : sign_changes(a, b)) {
        double lo = a.points[br.lo].tau_s;
        double hi = a.points[br.hi].tau_s;
        const int s_lo = sign_of(diff_at(a, b, br.lo));
        while (hi - lo >= tol_s) {
            const double mid = 0.5 * (lo + hi);
            const int s = sign_of(fa(mid) - fb(mid));
            if (s == 0) {
                lo = hi = mid;
                break;
            }
            (s == s_lo ? lo : hi) = mid;
        }
        out.push_back({0.5 * (lo + hi), false});
    }
    return out;
}

double relative_improvement(double p_outage_random, double p_outage_vehicular)
{
    if (p_outage_random == 0.0)
        return p_outage_vehicular == 0.0 ? 0.0 : -std::numeric_limits<double>::infinity();
    return (p_outage_random - p_outage_vehicular) / p_outage_random;
}

ComparisonReport compare_curves(const OutageCurve& random_curve, const OutageCurve& vehicular_curve)
{
    check_same_grid(random_curve, vehicular_curve);
    ComparisonReport rep;
    rep.random_label = random_curve.label;
    rep.vehicular_label = vehicular_curve.label;
    rep.random_curve = random_curve;
    rep.vehicular_curve = vehicular_curve;
    for (std::size_t i = 0; i < random_curve.points.size(); ++i) {
        ImprovementRecord r;
        r.tau_s = random_curve.points[i].tau_s;
        r.p_outage_random = random_curve.points[i].p_outage;
        r.p_outage_vehicular = vehicular_curve.points[i].p_outage;
        r.rel_improvement = relative_improvement(r.p_outage_random, r.p_outage_vehicular);
        rep.records.push_back(r);
    }
    rep.region = stats_over(rep.records, true);
    rep.full_grid = stats_over(rep.records, false);
    return rep;
}

ComparisonReport run_pair(const Scenario& scenario, std::size_t member, Engine engine, const EngineSettings& settings)
{
    scenario.validate();
    const auto random_model = builtin_model(scenario.random_family.at(member), scenario.params);
    const auto vehicular_model = builtin_model(scenario.vehicular, scenario.params);

    ComparisonReport rep;
    if (engine == Engine::quadrature) {
        const auto rc = outage_curve(random_model, scenario.params, scenario.grid, Method::quadrature, settings.quadrature);
        const auto vc = outage_curve(vehicular_model, scenario.params, scenario.grid, Method::quadrature, settings.quadrature);
        rep = compare_curves(rc, vc);
        auto at = [&](const MobilityModel& m) {
            return [&, m](double tau) {
                return outage_point(m, scenario.params, tau, Method::quadrature, settings.quadrature).p_outage;
            };
        };
        rep.crossovers = find_crossovers(rc, vc, at(random_model), at(vehicular_model));
    } else {
        const auto rc = mc_outage_curve(random_model, scenario.params, scenario.grid, settings.trials);
        const auto vc = mc_outage_curve(vehicular_model, scenario.params, scenario.grid, settings.trials);
        rep = compare_curves(rc, vc);
        rep.crossovers = find_crossovers(rc, vc);
    }
    rep.scenario = scenario.name;
    rep.engine = engine;
    rep.grid_description = scenario.grid.describe();
    return rep;
}

ScenarioReport run_comparison(const Scenario& scenario, Engine engine, const EngineSettings& settings)
{
    ScenarioReport out;
    out.scenario = scenario;
    out.engine = engine;
    for (std::size_t i = 0; i < scenario.random_family.size(); ++i)
        out.comparisons.push_back(run_pair(scenario, i, engine, settings));
    return out;
}

double sup_distance(const OutageCurve& a, const OutageCurve& b)
{
    check_same_grid(a, b);
    double d = 0.0;
    for (std::size_t i = 0; i < a.points.size(); ++i)
        d = std::max(d, std::abs(a.points[i].p_outage - b.points[i].p_outage));
    return d;
}

} // namespace vanet

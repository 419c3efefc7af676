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

#include "vanet/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace vanet {

namespace {

// Share of the tolerance given to each inner (x or theta) integration of an
// iterated 2-D rule.
constexpr double kInnerTolShare = 0.1;

void check_bounds(double u_min, double u_max)
{
    if (!(u_min >= 0.0) || !(u_max >= u_min))
        throw std::invalid_argument("displacement bounds must satisfy 0 <= u_min <= u_max");
}

/// Offsets x where the exit distance along (sin, cos) equals u_min or u_max:
/// the ends of the x-interval whose displaced position stays in the disk.
std::vector<double> offset_breakpoints(double u_min, double u_max, double s, double c)
{
    std::vector<double> out;
    for (double u : {u_min, u_max}) {
        const double disc = 1.0 - u * u * s * s;
        if (disc < 0.0)
            continue;
        const double r = std::sqrt(disc);
        out.push_back(-u * c - r);
        out.push_back(-u * c + r);
    }
    return out;
}

/// Headings where the exit distance from a fixed offset x0 equals u_min or
/// u_max, shifted into [lo, hi].
std::vector<double> heading_breakpoints(double x0, double u_min, double u_max, double lo, double hi)
{
    std::vector<double> out;
    if (x0 == 0.0)
        return out;
    for (double u : {u_min, u_max}) {
        if (u == 0.0)
            continue;
        const double cos_t = (1.0 - x0 * x0 - u * u) / (2.0 * x0 * u);
        if (cos_t < -1.0 || cos_t > 1.0)
            continue;
        const double a = std::acos(cos_t);
        for (double base : {a, kTwoPi - a})
            for (double t = base + kTwoPi * std::floor((lo - base) / kTwoPi); t <= hi; t += kTwoPi)
                out.push_back(t);
    }
    return out;
}

/// Mean of f over [lo, hi] with the adaptive rule run separately on each
/// piece between the given breakpoints.
template <class F>
QuadratureResult average_split(F& f, double lo, double hi, std::vector<double> breaks, double tol, int budget)
{
    if (lo == hi)
        return average_adaptive(f, lo, hi, tol, budget);
    std::erase_if(breaks, [&](double b) { return !(b > lo && b < hi); });
    std::sort(breaks.begin(), breaks.end());
    breaks.insert(breaks.begin(), lo);
    breaks.push_back(hi);

    const double width = hi - lo;
    QuadratureResult out;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        const double a = breaks[i], b = breaks[i + 1];
        if (!(b > a))
            continue;
        const auto r = integrate_adaptive(f, a, b, tol * (b - a), budget);
        out.value += r.value;
        out.error += r.error;
        out.subdivisions += r.subdivisions;
    }
    out.value /= width;
    out.error /= width;
    out.converged = out.error <= tol;
    return out;
}

} // namespace

bool OutageCurve::all_converged() const noexcept
{
    return std::all_of(points.begin(), points.end(), [](const OutagePoint& p) { return p.converged; });
}

double p_neigh_conditional(double u_min, double u_max, double l)
{
    if (u_min == u_max)
        return u_min <= l ? 1.0 : 0.0;
    return std::clamp((l - u_min) / (u_max - u_min), 0.0, 1.0);
}

QuadratureResult p_neigh_quadrature_result(const MobilityModel& model, double u_min, double u_max,
                                           const QuadratureSettings& settings)
{
    check_bounds(u_min, u_max);
    settings.validate();

    // No displacement: every trajectory stays in range.
    if (u_max == 0.0)
        return {1.0, 0.0, 0, true};

    const auto& xd = model.x();
    const auto& td = model.theta();
    const int budget = settings.max_subdivisions;

    auto over_x = [&](double s, double c, double tol) {
        auto f = [&](double x) { return p_neigh_conditional(u_min, u_max, exit_distance_sc(x, s, c)); };
        return average_split(f, xd.lo(), xd.hi(), offset_breakpoints(u_min, u_max, s, c), tol, budget);
    };

    if (xd.is_deterministic() && !td.is_deterministic()) {
        const double x0 = xd.lo();
        auto f = [&](double theta) { return p_neigh_conditional(u_min, u_max, exit_distance(x0, theta)); };
        return average_split(f, td.lo(), td.hi(), heading_breakpoints(x0, u_min, u_max, td.lo(), td.hi()),
                             settings.abs_tol, budget);
    }

    QuadratureResult out;
    if (td.is_deterministic()) {
        out = over_x(std::sin(td.lo()), std::cos(td.lo()), settings.abs_tol);
    } else {
        const double inner_tol = kInnerTolShare * settings.abs_tol;
        double worst_inner = 0.0;
        bool inner_ok = true;
        int inner_subdivisions = 0;
        auto g = [&](double theta) {
            const auto r = over_x(std::sin(theta), std::cos(theta), inner_tol);
            worst_inner = std::max(worst_inner, r.error);
            inner_ok = inner_ok && r.converged;
            inner_subdivisions += r.subdivisions;
            return r.value;
        };
        out = average_adaptive(g, td.lo(), td.hi(), (1.0 - kInnerTolShare) * settings.abs_tol, budget);
        out.error += worst_inner;
        out.subdivisions += inner_subdivisions;
        out.converged = out.converged && inner_ok && out.error <= settings.abs_tol;
    }
    return out;
}

double p_neigh_quadrature(const MobilityModel& model, double u_min, double u_max, const QuadratureSettings& settings)
{
    const auto r = p_neigh_quadrature_result(model, u_min, u_max, settings);
    if (!r.converged)
        throw NonConvergenceError(r.value, r.error);
    return std::clamp(r.value, 0.0, 1.0);
}

double p_neigh_vehicular_closed(double u_min, double u_max)
{
    check_bounds(u_min, u_max);
    if (u_min == u_max)
        return u_min <= 1.0 ? std::sqrt(1.0 - u_min * u_min) : 0.0;
    auto antiderivative = [](double u) { return 0.5 * (u * std::sqrt(1.0 - u * u) + std::asin(u)); };
    const double a = std::min(u_min, 1.0);
    const double b = std::min(u_max, 1.0);
    return std::clamp((antiderivative(b) - antiderivative(a)) / (u_max - u_min), 0.0, 1.0);
}

LiteralRandomIntegral p_neigh_literal_random(double u_min, double u_max, const QuadratureSettings& settings)
{
    check_bounds(u_min, u_max);
    if (!(u_min < u_max))
        throw std::invalid_argument("literal integral requires u_min < u_max");
    settings.validate();

    // The 1/(4 pi du) prefactor over a 2pi x du box leaves one half of the
    // box mean of the numerator.
    const double mean_tol = 2.0 * settings.abs_tol;
    const double inner_tol = kInnerTolShare * mean_tol;
    double worst_inner = 0.0;
    bool inner_ok = true;

    auto over_theta = [&](double u) {
        auto f = [u](double theta) {
            const double s = std::sin(theta);
            return std::sqrt(std::max(0.0, 1.0 - u * u * s * s)) - u * std::cos(theta);
        };
        const auto r = average_adaptive(f, 0.0, kTwoPi, inner_tol, settings.max_subdivisions);
        worst_inner = std::max(worst_inner, r.error);
        inner_ok = inner_ok && r.converged;
        return r.value;
    };
    auto r = average_adaptive(over_theta, u_min, u_max, (1.0 - kInnerTolShare) * mean_tol, settings.max_subdivisions);
    const double error = 0.5 * (r.error + worst_inner);
    const bool converged = r.converged && inner_ok && error <= settings.abs_tol;

    LiteralRandomIntegral out;
    out.unclamped = 0.5 * r.value;
    out.value = std::clamp(out.unclamped, 0.0, 1.0);
    out.error = error;
    out.radicand_clamped = u_max > 1.0;
    if (!converged)
        throw NonConvergenceError(out.unclamped, error);
    return out;
}

void check_speed_consistency(const MobilityModel& model, const CachingParams& params)
{
    const auto& v = model.speed_ms();
    if (v.lo() != params.v_min_ms || v.hi() != params.v_max_ms)
        throw std::invalid_argument("model speed distribution does not match the caching parameters");
}

OutagePoint outage_point(const MobilityModel& model, const CachingParams& params, double tau_s, Method method,
                         const QuadratureSettings& settings)
{
    params.validate();
    check_speed_consistency(model, params);
    const auto [u_min, u_max] = normalized_speed_bounds(params, tau_s);
    switch (method) {
    case Method::closed_form:
        if (!model.is_full_freeway())
            throw std::invalid_argument("closed form requires the full freeway model (theta = pi/2, x ~ U[-1, 1])");
        return OutagePoint::compose(tau_s, params, p_neigh_vehicular_closed(u_min, u_max), method);
    case Method::quadrature: {
        const auto r = p_neigh_quadrature_result(model, u_min, u_max, settings);
        auto pt = OutagePoint::compose(tau_s, params, r.value, method);
        pt.converged = r.converged;
        return pt;
    }
    case Method::monte_carlo:
        break;
    }
    throw std::invalid_argument("outage_point supports quadrature and closed_form only");
}

OutageCurve outage_curve(const MobilityModel& model, const CachingParams& params, const TauGrid& grid, Method method,
                         const QuadratureSettings& settings)
{
    if (method == Method::monte_carlo)
        throw std::invalid_argument("use mc_outage_curve for Monte Carlo curves");
    if (method == Method::closed_form && !model.is_full_freeway())
        throw std::invalid_argument("closed form requires the full freeway model (theta = pi/2, x ~ U[-1, 1])");
    params.validate();
    check_speed_consistency(model, params);
    settings.validate();

    OutageCurve curve;
    curve.label = model.label();
    curve.points.resize(grid.size());
    detail::parallel_for(grid.size(), [&](std::size_t i) {
        curve.points[i] = outage_point(model, params, grid[i], method, settings);
    });
    return curve;
}

} // namespace vanet

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

#include "vanet/core.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace vanet {

CachingParams CachingParams::defaults()
{
    CachingParams p;
    p.gamma = 0.7;
    p.lambda = 3.0;
    p.range_m = 150.0;
    p.v_min_ms = kmh_to_ms(5.0);
    p.v_max_ms = kmh_to_ms(50.0);
    return p;
}

void CachingParams::validate() const
{
    if (!(gamma >= 0.0 && gamma <= 1.0))
        throw std::invalid_argument("gamma must lie in [0, 1]");
    if (!(lambda > 0.0) || !std::isfinite(lambda))
        throw std::invalid_argument("lambda must be positive");
    if (!(range_m > 0.0) || !std::isfinite(range_m))
        throw std::invalid_argument("range must be positive");
    if (!(v_min_ms >= 0.0) || !(v_max_ms >= v_min_ms) || !std::isfinite(v_max_ms))
        throw std::invalid_argument("speed bounds must satisfy 0 <= v_min <= v_max");
}

double kmh_to_ms(double speed_kmh)
{
    if (!(speed_kmh >= 0.0))
        throw std::invalid_argument("speed must be non-negative");
    return speed_kmh * 1000.0 / 3600.0;
}

NormalizedSpeedBounds normalized_speed_bounds(const CachingParams& params, double tau_s)
{
    if (!(tau_s >= 0.0))
        throw std::invalid_argument("tau must be non-negative");
    return {params.v_min_ms * tau_s / params.range_m, params.v_max_ms * tau_s / params.range_m};
}

double request_probability(double lambda, double tau_s)
{
    return -std::expm1(-lambda * tau_s);
}

double outage_from_components(double gamma, double p_neigh, double p_request)
{
    return 1.0 - gamma * p_neigh * p_request;
}

TauGrid::TauGrid(std::vector<double> taus) : taus_(std::move(taus))
{
    for (std::size_t i = 0; i < taus_.size(); ++i) {
        if (!(taus_[i] >= 0.0) || !std::isfinite(taus_[i]))
            throw std::invalid_argument("tau values must be finite and non-negative");
        if (i > 0 && !(taus_[i] > taus_[i - 1]))
            throw std::invalid_argument("tau grid must be strictly increasing");
    }
}

TauGrid TauGrid::uniform(double tau_min, double tau_max, double step)
{
    if (!(step > 0.0))
        throw std::invalid_argument("tau step must be positive");
    if (!(tau_max >= tau_min))
        throw std::invalid_argument("tau_max must not be below tau_min");
    std::vector<double> taus;
    const auto n = static_cast<std::size_t>(std::floor((tau_max - tau_min) / step + 1e-9));
    taus.reserve(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        taus.push_back(tau_min + static_cast<double>(i) * step);
    return TauGrid(std::move(taus));
}

TauGrid TauGrid::default_grid()
{
    return uniform(0.5, 60.0, 0.5);
}

std::string TauGrid::describe() const
{
    std::ostringstream os;
    if (taus_.empty())
        return "empty tau grid";
    os << "tau in [" << taus_.front() << ", " << taus_.back() << "] s";
    if (taus_.size() > 1) {
        const double step = taus_[1] - taus_[0];
        bool uniform = true;
        for (std::size_t i = 1; i < taus_.size(); ++i)
            uniform = uniform && std::abs((taus_[i] - taus_[i - 1]) - step) <= 1e-9 * std::max(1.0, step);
        if (uniform)
            os << ", step " << step << " s";
    }
    os << " (" << taus_.size() << " points)";
    return os.str();
}

std::string_view to_string(Method m)
{
    switch (m) {
    case Method::quadrature: return "quadrature";
    case Method::closed_form: return "closed_form";
    case Method::monte_carlo: return "monte_carlo";
    }
    return "unknown";
}

Method parse_method(std::string_view s)
{
    if (s == "quadrature")
        return Method::quadrature;
    if (s == "closed_form")
        return Method::closed_form;
    if (s == "monte_carlo")
        return Method::monte_carlo;
    throw std::invalid_argument("unknown method: " + std::string(s));
}

OutagePoint OutagePoint::compose(double tau_s, const CachingParams& params, double p_neigh, Method method)
{
    OutagePoint pt;
    pt.tau_s = tau_s;
    pt.p_neigh = std::clamp(p_neigh, 0.0, 1.0);
    pt.p_request = request_probability(params.lambda, tau_s);
    pt.p_find = params.gamma * pt.p_neigh * pt.p_request;
    pt.p_outage = outage_from_components(params.gamma, pt.p_neigh, pt.p_request);
    pt.method = method;
    return pt;
}

} // namespace vanet

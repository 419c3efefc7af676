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

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vanet {

/// Model parameters of the two-node caching system. Speeds are stored in
/// m/s and the radio range in meters; everything downstream of
/// normalized_speed_bounds() works in units of the range.
struct CachingParams
{
    double gamma = 0.7;        // request overlap ratio
    double lambda = 3.0;       // requests per second
    double range_m = 150.0;    // radio range r
    double v_min_ms = 0.0;
    double v_max_ms = 0.0;

    /// gamma=0.7, lambda=3/s, r=150 m, v in [5, 50] km/h.
    static CachingParams defaults();

    /// Throws std::invalid_argument if any invariant is violated.
    void validate() const;
};

double kmh_to_ms(double speed_kmh);

struct NormalizedSpeedBounds
{
    double u_min = 0.0;
    double u_max = 0.0;
};

/// Displacement bounds v*tau/r.
NormalizedSpeedBounds normalized_speed_bounds(const CachingParams& params, double tau_s);

/// Probability of at least one Poisson arrival of rate lambda within tau.
double request_probability(double lambda, double tau_s);

/// 1 - gamma * p_neigh * p_request.
double outage_from_components(double gamma, double p_neigh, double p_request);

/// Strictly increasing, non-negative list of horizons in seconds.
class TauGrid
{
public:
    TauGrid() = default;
    explicit TauGrid(std::vector<double> taus);

    /// tau_min, tau_min + step, ... up to tau_max (inclusive, with a
    /// relative slack of 1e-9 steps so that 60.0 is not lost to rounding).
    static TauGrid uniform(double tau_min, double tau_max, double step);

    /// 0.5 s to 60 s in steps of 0.5 s.
    static TauGrid default_grid();

    const std::vector<double>& values() const noexcept { return taus_; }
    std::size_t size() const noexcept { return taus_.size(); }
    bool empty() const noexcept { return taus_.empty(); }
    double operator[](std::size_t i) const { return taus_[i]; }

    /// Human-readable description, e.g. "tau in [0.5, 60] s, step 0.5 s (120 points)".
    std::string describe() const;

private:
    std::vector<double> taus_;
};

enum class Method
{
    quadrature,
    closed_form,
    monte_carlo,
};

std::string_view to_string(Method m);
Method parse_method(std::string_view s);

struct OutagePoint
{
    double tau_s = 0.0;
    double p_neigh = 0.0;
    double p_request = 0.0;
    double p_find = 0.0;
    double p_outage = 1.0;
    Method method = Method::quadrature;
    std::optional<double> ci_half_width;
    bool converged = true;

    /// Builds an analytical point from its reach probability.
    static OutagePoint compose(double tau_s, const CachingParams& params, double p_neigh, Method method);
};

} // namespace vanet

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

#include "vanet/core.hpp"
#include "vanet/mobility.hpp"
#include "vanet/quadrature.hpp"

#include <string>
#include <vector>

namespace vanet {

struct OutageCurve
{
    std::string label;
    std::vector<OutagePoint> points;

    bool all_converged() const noexcept;
};

/// P(u <= l) for u ~ U[u_min, u_max]; a point mass when u_min == u_max.
double p_neigh_conditional(double u_min, double u_max, double l);

/// E over (x, theta) of p_neigh_conditional(u_min, u_max, exit_distance(x, theta)),
/// by iterated adaptive Gauss-Kronrod over the (x, theta) box. The inner
/// integral is split where the clamp switches (the ends of the in-disk
/// x-interval at fixed heading); the outer heading integral is purely
/// adaptive. Deterministic components drop their dimension. Does not throw
/// on non-convergence.
QuadratureResult p_neigh_quadrature_result(const MobilityModel& model, double u_min, double u_max,
                                           const QuadratureSettings& settings = {});

/// As above, clamped to [0, 1]; throws NonConvergenceError.
double p_neigh_quadrature(const MobilityModel& model, double u_min, double u_max,
                          const QuadratureSettings& settings = {});

/// Freeway closed form: (F(b) - F(a)) / (u_max - u_min) with
/// F(u) = (u sqrt(1 - u^2) + asin u) / 2 and a, b clamped to 1.
double p_neigh_vehicular_closed(double u_min, double u_max);

struct LiteralRandomIntegral
{
    double value = 0.0;      // clamped to [0, 1] for reporting
    double unclamped = 0.0;
    double error = 0.0;
    bool radicand_clamped = false;  // u_max > 1: sqrt argument goes negative for some theta
};

/// A closed double integral for the theta ~ U[0, 2pi] case,
/// with integrand (sqrt(1 - u^2 sin^2 theta) - u cos theta) / (4 pi (u_max - u_min))
/// over theta in [0, 2pi], u in [u_min, u_max], evaluated literally.
/// A negative sqrt argument (possible only for u > 1) is taken as zero.
/// Kept as a diagnostic beside p_neigh_quadrature(); requires u_min < u_max.
LiteralRandomIntegral p_neigh_literal_random(double u_min, double u_max, const QuadratureSettings& settings = {});

/// Throws std::invalid_argument unless the model's speed distribution is
/// U[v_min, v_max] of params.
void check_speed_consistency(const MobilityModel& model, const CachingParams& params);

/// One analytical outage point. method must be quadrature or closed_form;
/// closed_form requires model.is_full_freeway(). Quadrature non-convergence
/// is reported through OutagePoint::converged with the best estimate.
OutagePoint outage_point(const MobilityModel& model, const CachingParams& params, double tau_s, Method method,
                         const QuadratureSettings& settings = {});

/// Points are evaluated concurrently; the result is identical to the
/// sequential evaluation.
OutageCurve outage_curve(const MobilityModel& model, const CachingParams& params, const TauGrid& grid,
                         Method method, const QuadratureSettings& settings = {});

} // namespace vanet

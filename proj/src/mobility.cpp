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

#include "vanet/mobility.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace vanet {

ScalarDist ScalarDist::deterministic(double value)
{
    if (!std::isfinite(value))
        throw std::invalid_argument("distribution value must be finite");
    return ScalarDist(value, value);
}

ScalarDist ScalarDist::uniform(double lo, double hi)
{
    if (!std::isfinite(lo) || !std::isfinite(hi))
        throw std::invalid_argument("distribution bounds must be finite");
    if (!(lo <= hi))
        throw std::invalid_argument("uniform distribution requires lo <= hi");
    return ScalarDist(lo, hi);
}

std::string ScalarDist::describe() const
{
    std::ostringstream os;
    if (is_deterministic())
        os << lo_;
    else
        os << "U[" << lo_ << ", " << hi_ << "]";
    return os.str();
}

namespace {

ScalarDist canonical_heading(const ScalarDist& theta)
{
    if (theta.width() > kTwoPi * (1.0 + 1e-12))
        throw std::invalid_argument("heading range wider than 2pi");
    const double shift = kTwoPi * std::floor(theta.lo() / kTwoPi);
    double lo = theta.lo() - shift;
    if (lo >= kTwoPi)
        lo -= kTwoPi;
    if (theta.is_deterministic())
        return ScalarDist::deterministic(lo);
    return ScalarDist::uniform(lo, lo + std::min(theta.width(), kTwoPi));
}

} // namespace

MobilityModel::MobilityModel(std::string label, ScalarDist x, ScalarDist theta, ScalarDist speed_ms)
    : label_(std::move(label)), x_(x), theta_(canonical_heading(theta)), speed_(speed_ms)
{
    if (x_.lo() < -1.0 || x_.hi() > 1.0)
        throw std::invalid_argument("initial offset support must lie within [-1, 1]");
    if (speed_.lo() < 0.0)
        throw std::invalid_argument("speeds must be non-negative");
}

bool MobilityModel::is_full_freeway() const noexcept
{
    if (!theta_.is_deterministic())
        return false;
    const double t = theta_.lo();
    const bool along_road = std::abs(t - 0.5 * kPi) <= 1e-12 || std::abs(t - 1.5 * kPi) <= 1e-12;
    return along_road && x_.lo() == -1.0 && x_.hi() == 1.0;
}

std::string MobilityModel::describe() const
{
    std::ostringstream os;
    os << "x~" << x_.describe() << ", theta~" << theta_.describe() << " rad, v~" << speed_.describe() << " m/s";
    return os.str();
}

double exit_distance(double x, double theta)
{
    if (!(std::abs(x) <= 1.0))
        throw std::domain_error("initial offset outside the radio range");
    return exit_distance_sc(x, std::sin(theta), std::cos(theta));
}

bool in_reach(double x, double theta, double u)
{
    return u <= exit_distance(x, theta);
}

MobilitySample sample(const MobilityModel& model, Stream& rng) noexcept
{
    MobilitySample s;
    s.x = model.x().sample(rng);
    s.theta = model.theta().sample(rng);
    s.v_ms = model.speed_ms().sample(rng);
    return s;
}

ModelSpec ModelSpec::random_full(std::string label)
{
    ModelSpec s;
    s.kind = ModelKind::random_full;
    s.label = std::move(label);
    s.theta_lo = 0.0;
    s.theta_hi = kTwoPi;
    return s;
}

ModelSpec ModelSpec::random_sector(double theta_lo, double theta_hi, std::string label)
{
    ModelSpec s;
    s.kind = ModelKind::random_sector;
    s.label = std::move(label);
    s.theta_lo = theta_lo;
    s.theta_hi = theta_hi;
    return s;
}

ModelSpec ModelSpec::random_limited(double theta_lo, double theta_hi, std::string label)
{
    ModelSpec s = random_sector(theta_lo, theta_hi, std::move(label));
    s.kind = ModelKind::random_limited;
    return s;
}

ModelSpec ModelSpec::vehicular_full(std::string label)
{
    ModelSpec s;
    s.kind = ModelKind::vehicular_full;
    s.label = std::move(label);
    s.theta_lo = s.theta_hi = 0.5 * kPi;
    return s;
}

ModelSpec ModelSpec::vehicular_lanes(int n_lanes, double lane_width_m, std::string label)
{
    ModelSpec s = vehicular_full(std::move(label));
    s.kind = ModelKind::vehicular_lanes;
    s.n_lanes = n_lanes;
    s.lane_width_m = lane_width_m;
    return s;
}

ModelSpec ModelSpec::custom(ScalarDist x, ScalarDist theta, std::string label)
{
    ModelSpec s;
    s.kind = ModelKind::custom;
    s.label = std::move(label);
    s.custom_x = x;
    s.custom_theta = theta;
    return s;
}

std::string ModelSpec::describe() const
{
    std::ostringstream os;
    switch (kind) {
    case ModelKind::random_full:
        os << "random: x~U[-r, r], theta~U[0, 2pi]";
        break;
    case ModelKind::random_sector:
        os << "random sector: x~U[-r, r], theta~U[" << theta_lo << ", " << theta_hi << "] rad";
        break;
    case ModelKind::random_limited:
        os << "limited random: x~U[0, r], theta~";
        if (theta_lo == theta_hi)
            os << theta_lo + 0.0 << " rad";
        else
            os << "U[" << theta_lo << ", " << theta_hi << "] rad";
        break;
    case ModelKind::vehicular_full:
        os << "freeway: x~U[-r, r], theta=pi/2";
        break;
    case ModelKind::vehicular_lanes:
        os << "freeway lanes: x~U[0, " << n_lanes << " lanes x " << lane_width_m << " m], theta=pi/2";
        break;
    case ModelKind::custom:
        os << "custom: x~" << custom_x.describe() << " (units of r), theta~" << custom_theta.describe() << " rad";
        break;
    }
    return os.str();
}

MobilityModel builtin_model(const ModelSpec& spec, const CachingParams& params)
{
    params.validate();
    const ScalarDist speed = ScalarDist::uniform(params.v_min_ms, params.v_max_ms);
    switch (spec.kind) {
    case ModelKind::random_full:
        return MobilityModel(spec.label, ScalarDist::uniform(-1.0, 1.0), ScalarDist::uniform(0.0, kTwoPi), speed);
    case ModelKind::random_sector:
        return MobilityModel(spec.label, ScalarDist::uniform(-1.0, 1.0), ScalarDist::uniform(spec.theta_lo, spec.theta_hi), speed);
    case ModelKind::random_limited:
        return MobilityModel(spec.label, ScalarDist::uniform(0.0, 1.0), ScalarDist::uniform(spec.theta_lo, spec.theta_hi), speed);
    case ModelKind::vehicular_full:
        return MobilityModel(spec.label, ScalarDist::uniform(-1.0, 1.0), ScalarDist::deterministic(0.5 * kPi), speed);
    case ModelKind::vehicular_lanes: {
        if (spec.n_lanes < 1 || !(spec.lane_width_m > 0.0))
            throw std::invalid_argument("lane count and lane width must be positive");
        const double width = spec.n_lanes * spec.lane_width_m / params.range_m;
        if (width > 1.0)
            throw std::invalid_argument("freeway wider than the radio range");
        return MobilityModel(spec.label, ScalarDist::uniform(0.0, width), ScalarDist::deterministic(0.5 * kPi), speed);
    }
    case ModelKind::custom:
        return MobilityModel(spec.label, spec.custom_x, spec.custom_theta, speed);
    }
    throw std::invalid_argument("unknown model kind");
}

} // namespace vanet

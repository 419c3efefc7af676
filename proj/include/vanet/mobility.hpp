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
#include "vanet/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace vanet {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Deterministic(value) or Uniform(lo, hi). A uniform with lo == hi is
/// stored as deterministic.
class ScalarDist
{
public:
    ScalarDist() = default;

    static ScalarDist deterministic(double value);
    static ScalarDist uniform(double lo, double hi);

    bool is_deterministic() const noexcept { return lo_ == hi_; }
    double lo() const noexcept { return lo_; }
    double hi() const noexcept { return hi_; }
    double width() const noexcept { return hi_ - lo_; }
    double mean() const noexcept { return 0.5 * (lo_ + hi_); }

    double sample(Stream& rng) const noexcept { return is_deterministic() ? lo_ : rng.uniform(lo_, hi_); }

    bool operator==(const ScalarDist&) const = default;

    std::string describe() const;

private:
    ScalarDist(double lo, double hi) : lo_(lo), hi_(hi) {}

    double lo_ = 0.0;
    double hi_ = 0.0;
};

/// Distributions of the mobile node's normalized initial offset x (units of
/// the radio range), heading theta (radians) and speed (m/s).
///
/// Headings are canonicalized so that theta.lo() lies in [0, 2pi); a uniform
/// heading keeps its width (at most 2pi), so its support is read modulo 2pi.
class MobilityModel
{
public:
    MobilityModel(std::string label, ScalarDist x, ScalarDist theta, ScalarDist speed_ms);

    const std::string& label() const noexcept { return label_; }
    const ScalarDist& x() const noexcept { return x_; }
    const ScalarDist& theta() const noexcept { return theta_; }
    const ScalarDist& speed_ms() const noexcept { return speed_; }

    /// Deterministic heading along the road axis (pi/2 or 3pi/2) with
    /// x ~ U[-1, 1].
    bool is_full_freeway() const noexcept;

    std::string describe() const;

private:
    std::string label_;
    ScalarDist x_;
    ScalarDist theta_;
    ScalarDist speed_;
};

/// Distance the mobile node covers before leaving the unit disk, starting at
/// (x, 0) with heading theta. Throws std::domain_error when |x| > 1.
double exit_distance(double x, double theta);

/// exit_distance with the heading given by its sine and cosine; no range
/// check on x.
inline double exit_distance_sc(double x, double sin_theta, double cos_theta) noexcept
{
    const double l = std::sqrt(std::max(0.0, 1.0 - x * x * sin_theta * sin_theta)) - x * cos_theta;
    return std::clamp(l, 0.0, 2.0);
}

/// True iff a displacement u along theta keeps the node inside the disk.
bool in_reach(double x, double theta, double u);

struct MobilitySample
{
    double x = 0.0;
    double theta = 0.0;
    double v_ms = 0.0;
};

/// Draws x, theta, v in that order.
MobilitySample sample(const MobilityModel& model, Stream& rng) noexcept;

enum class ModelKind
{
    random_full,
    random_sector,
    random_limited,
    vehicular_full,
    vehicular_lanes,
    custom,
};

/// Recipe for a mobility model. The speed distribution always comes from the
/// caching parameters, and lane geometry is normalized by their range, so a
/// spec is materialized against a CachingParams by builtin_model().
struct ModelSpec
{
    ModelKind kind = ModelKind::random_full;
    std::string label;
    double theta_lo = 0.0;
    double theta_hi = 0.0;
    int n_lanes = 0;
    double lane_width_m = 0.0;
    ScalarDist custom_x;
    ScalarDist custom_theta;

    static ModelSpec random_full(std::string label = "random");
    static ModelSpec random_sector(double theta_lo, double theta_hi, std::string label);
    static ModelSpec random_limited(double theta_lo, double theta_hi, std::string label);
    static ModelSpec vehicular_full(std::string label = "vehicular");
    static ModelSpec vehicular_lanes(int n_lanes, double lane_width_m, std::string label = "vehicular");
    static ModelSpec custom(ScalarDist x, ScalarDist theta, std::string label);

    std::string describe() const;
};

MobilityModel builtin_model(const ModelSpec& spec, const CachingParams& params);

} // namespace vanet

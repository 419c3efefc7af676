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

#include "vanet/montecarlo.hpp"

#include "vanet/parallel.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace vanet {

namespace {

constexpr double kZ95 = 1.959963984540054;

struct Counts
{
    std::uint64_t reach = 0;
    std::uint64_t request = 0;
    std::uint64_t find = 0;

    Counts& operator+=(const Counts& o) noexcept
    {
        reach += o.reach;
        request += o.request;
        find += o.find;
        return *this;
    }
};

/// Reach-only trials skip the request and overlap draws.
template <bool WithRequests>
Counts run_block(const MobilityModel& model, const CachingParams& params, double tau_s, std::uint64_t seed,
                 std::uint64_t key, std::uint64_t block, std::uint64_t trials)
{
    Stream rng = Stream::derive(seed, {key, block});
    const double scale = tau_s / params.range_m;
    Counts c;
    for (std::uint64_t t = 0; t < trials; ++t) {
        const auto s = sample(model, rng);
        const double u = s.v_ms * scale;
        const bool reach = in_reach(s.x, s.theta, u);
        c.reach += reach;
        if constexpr (WithRequests) {
            const bool request = rng.exponential(params.lambda) < tau_s;
            const bool overlap = rng.bernoulli(params.gamma);
            c.request += request;
            c.find += reach && request && overlap;
        }
    }
    return c;
}

template <bool WithRequests>
Counts run_trials(const MobilityModel& model, const CachingParams& params, double tau_s, const TrialConfig& cfg)
{
    cfg.validate();
    params.validate();
    check_speed_consistency(model, params);
    if (!(tau_s >= 0.0))
        throw std::invalid_argument("tau must be non-negative");

    const std::uint64_t n_blocks = (cfg.n_trials + kTrialBlockSize - 1) / kTrialBlockSize;
    const std::uint64_t partitions = std::min(cfg.n_partitions, n_blocks);
    std::vector<Counts> partial(partitions);

    detail::parallel_for(partitions, [&](std::size_t p) {
        const std::uint64_t first = n_blocks * p / partitions;
        const std::uint64_t last = n_blocks * (p + 1) / partitions;
        Counts c;
        for (std::uint64_t b = first; b < last; ++b) {
            const std::uint64_t begin = b * kTrialBlockSize;
            const std::uint64_t trials = std::min(kTrialBlockSize, cfg.n_trials - begin);
            c += run_block<WithRequests>(model, params, tau_s, cfg.seed, cfg.stream_key, b, trials);
        }
        partial[p] = c;
    });

    Counts total;
    for (const auto& c : partial)
        total += c;
    return total;
}

} // namespace

void TrialConfig::validate() const
{
    if (n_trials < 1)
        throw std::invalid_argument("n_trials must be >= 1");
    if (n_partitions < 1 || n_partitions > n_trials)
        throw std::invalid_argument("n_partitions must lie in [1, n_trials]");
}

double Estimate::standard_error() const noexcept
{
    return n ? std::sqrt(p_hat * (1.0 - p_hat) / static_cast<double>(n)) : 0.0;
}

Estimate wilson_estimate(std::uint64_t successes, std::uint64_t n)
{
    if (n == 0 || successes > n)
        throw std::invalid_argument("invalid binomial counts");
    Estimate e;
    e.n = n;
    e.successes = successes;
    const double nd = static_cast<double>(n);
    e.p_hat = static_cast<double>(successes) / nd;
    const double z2 = kZ95 * kZ95;
    const double denom = 1.0 + z2 / nd;
    const double center = (e.p_hat + z2 / (2.0 * nd)) / denom;
    const double half = kZ95 * std::sqrt(e.p_hat * (1.0 - e.p_hat) / nd + z2 / (4.0 * nd * nd)) / denom;
    e.ci_lower = std::max(0.0, center - half);
    e.ci_upper = std::min(1.0, center + half);
    e.ci_half_width = 0.5 * (e.ci_upper - e.ci_lower);
    return e;
}

Estimate estimate_p_neigh(const MobilityModel& model, const CachingParams& params, double tau_s,
                          const TrialConfig& cfg)
{
    const auto c = run_trials<false>(model, params, tau_s, cfg);
    return wilson_estimate(c.reach, cfg.n_trials);
}

Estimate estimate_p_outage(const MobilityModel& model, const CachingParams& params, double tau_s,
                           const TrialConfig& cfg)
{
    const auto c = run_trials<true>(model, params, tau_s, cfg);
    return wilson_estimate(cfg.n_trials - c.find, cfg.n_trials);
}

OutagePoint mc_outage_point(const MobilityModel& model, const CachingParams& params, double tau_s,
                            const TrialConfig& cfg)
{
    const auto c = run_trials<true>(model, params, tau_s, cfg);
    const double n = static_cast<double>(cfg.n_trials);
    const auto outage = wilson_estimate(cfg.n_trials - c.find, cfg.n_trials);
    OutagePoint pt;
    pt.tau_s = tau_s;
    pt.p_neigh = static_cast<double>(c.reach) / n;
    pt.p_request = static_cast<double>(c.request) / n;
    pt.p_find = static_cast<double>(c.find) / n;
    pt.p_outage = outage.p_hat;
    pt.method = Method::monte_carlo;
    pt.ci_half_width = outage.ci_half_width;
    return pt;
}

OutageCurve mc_outage_curve(const MobilityModel& model, const CachingParams& params, const TauGrid& grid,
                            const TrialConfig& cfg)
{
    OutageCurve curve;
    curve.label = model.label();
    curve.points.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        TrialConfig point_cfg = cfg;
        point_cfg.stream_key = i;
        curve.points.push_back(mc_outage_point(model, params, grid[i], point_cfg));
    }
    return curve;
}

} // namespace vanet

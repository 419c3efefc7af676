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

#include "vanet/analysis.hpp"
#include "vanet/core.hpp"
#include "vanet/mobility.hpp"

#include <cstdint>

namespace vanet {

struct TrialConfig
{
    std::uint64_t n_trials = 1'000'000;
    std::uint64_t seed = 0x5eed'ca7e'0000'0001ULL;
    std::uint64_t n_partitions = 1;
    /// Extra substream key; curves give each grid point its own key.
    std::uint64_t stream_key = 0;

    void validate() const;
};

/// Trials are grouped into fixed blocks of this size; block b always draws
/// from Stream::derive(seed, {stream_key, b}). Partitions are contiguous runs
/// of whole blocks, which is what makes results independent of the
/// partition count.
inline constexpr std::uint64_t kTrialBlockSize = 4096;

struct Estimate
{
    double p_hat = 0.0;
    std::uint64_t n = 0;
    std::uint64_t successes = 0;
    double ci_lower = 0.0;  // 95% Wilson interval
    double ci_upper = 0.0;
    double ci_half_width = 0.0;

    /// sqrt(p (1 - p) / n) evaluated at the point estimate.
    double standard_error() const noexcept;
};

/// Wilson score interval at z = 1.96.
Estimate wilson_estimate(std::uint64_t successes, std::uint64_t n);

Estimate estimate_p_neigh(const MobilityModel& model, const CachingParams& params, double tau_s,
                          const TrialConfig& cfg = {});

Estimate estimate_p_outage(const MobilityModel& model, const CachingParams& params, double tau_s,
                           const TrialConfig& cfg = {});

/// One Monte Carlo outage point: p_neigh, p_request and p_find are the
/// observed fractions from the same trials, so the multiplicative
/// composition holds in expectation rather than exactly.
OutagePoint mc_outage_point(const MobilityModel& model, const CachingParams& params, double tau_s,
                            const TrialConfig& cfg = {});

/// Grid point i uses stream_key = i.
OutageCurve mc_outage_curve(const MobilityModel& model, const CachingParams& params, const TauGrid& grid,
                            const TrialConfig& cfg = {});

} // namespace vanet

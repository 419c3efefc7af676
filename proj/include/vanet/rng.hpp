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

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <limits>

namespace vanet {

/// SplitMix64 stream. Independent substreams are derived by hashing a seed
/// together with a list of keys (point index, block index, ...), so any
/// block of trials can be regenerated without replaying earlier blocks.
class Stream
{
public:
    using result_type = std::uint64_t;

    explicit Stream(std::uint64_t seed) noexcept : state_(seed) {}

    static Stream derive(std::uint64_t seed, std::initializer_list<std::uint64_t> keys) noexcept
    {
        std::uint64_t h = mix(seed ^ 0x6a09e667f3bcc909ULL);
        for (auto k : keys)
            h = mix(h ^ mix(k + kGolden));
        return Stream(h);
    }

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    result_type operator()() noexcept
    {
        state_ += kGolden;
        return mix(state_);
    }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform01() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform01(); }

    double exponential(double rate) noexcept { return -std::log1p(-uniform01()) / rate; }

    bool bernoulli(double p) noexcept { return uniform01() < p; }

private:
    static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

    static constexpr std::uint64_t mix(std::uint64_t z) noexcept
    {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

} // namespace vanet

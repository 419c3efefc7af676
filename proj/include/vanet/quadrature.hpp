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

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

namespace vanet {

struct QuadratureSettings
{
    double abs_tol = 1e-7;
    int max_subdivisions = 1 << 14;

    void validate() const
    {
        if (!(abs_tol > 0.0))
            throw std::invalid_argument("quadrature abs_tol must be positive");
        if (max_subdivisions < 1)
            throw std::invalid_argument("quadrature max_subdivisions must be >= 1");
    }
};

/// Thrown when the requested tolerance is not met within the subdivision
/// budget. Carries the best available estimate and its error bound.
class NonConvergenceError : public std::runtime_error
{
public:
    NonConvergenceError(double estimate, double error_bound)
        : std::runtime_error("quadrature did not converge: estimate " + std::to_string(estimate) +
                             ", error bound " + std::to_string(error_bound)),
          estimate_(estimate), error_bound_(error_bound)
    {
    }

    double estimate() const noexcept { return estimate_; }
    double error_bound() const noexcept { return error_bound_; }

private:
    double estimate_;
    double error_bound_;
};

struct QuadratureResult
{
    double value = 0.0;
    double error = 0.0;
    int subdivisions = 0;
    bool converged = true;
};

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1]. Odd
// indices are the Gauss nodes.
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

struct Interval
{
    double a, b, value, error;
    bool operator<(const Interval& o) const noexcept { return error < o.error; }
};

template <class F>
Interval gauss_kronrod_15(F& f, double a, double b)
{
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double kronrod = kKronrodWeights[7] * fc;
    double gauss = kGaussWeights[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kKronrodNodes[i];
        const double pair = f(center - dx) + f(center + dx);
        kronrod += kKronrodWeights[i] * pair;
        if (i % 2 == 1)
            gauss += kGaussWeights[i / 2] * pair;
    }
    kronrod *= half;
    gauss *= half;
    return {a, b, kronrod, std::abs(kronrod - gauss)};
}

} // namespace detail

/// Globally adaptive Gauss-Kronrod (7/15) integration of f over [a, b].
/// The interval with the largest error estimate is bisected until the summed
/// estimate falls below abs_tol or max_subdivisions bisections were spent.
/// Never throws on non-convergence; check QuadratureResult::converged.
template <class F>
QuadratureResult integrate_adaptive(F&& f, double a, double b, double abs_tol, int max_subdivisions)
{
    QuadratureResult out;
    if (a == b)
        return out;

    std::vector<detail::Interval> storage;
    storage.reserve(static_cast<std::size_t>(std::min(max_subdivisions, 4096)) + 1);
    std::priority_queue<detail::Interval, std::vector<detail::Interval>> heap(std::less<detail::Interval>{},
                                                                              std::move(storage));
    const auto first = detail::gauss_kronrod_15(f, a, b);
    heap.push(first);
    double total_error = first.error;

    while (total_error > abs_tol && out.subdivisions < max_subdivisions) {
        const auto worst = heap.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b))
            break;
        heap.pop();
        const auto left = detail::gauss_kronrod_15(f, worst.a, mid);
        const auto right = detail::gauss_kronrod_15(f, mid, worst.b);
        heap.push(left);
        heap.push(right);
        total_error += left.error + right.error - worst.error;
        ++out.subdivisions;
    }

    // Re-sum from scratch; the running total drifts.
    double value = 0.0;
    double error = 0.0;
    while (!heap.empty()) {
        value += heap.top().value;
        error += heap.top().error;
        heap.pop();
    }
    out.value = value;
    out.error = error;
    out.converged = error <= abs_tol;
    return out;
}

/// Mean of f over [a, b] (the integral divided by b - a), to abs_tol on the
/// mean. Degenerate intervals evaluate f once.
template <class F>
QuadratureResult average_adaptive(F&& f, double a, double b, double abs_tol, int max_subdivisions)
{
    if (a == b) {
        QuadratureResult r;
        r.value = f(a);
        return r;
    }
    const double w = b - a;
    auto r = integrate_adaptive(f, a, b, abs_tol * w, max_subdivisions);
    r.value /= w;
    r.error /= w;
    r.converged = r.error <= abs_tol;
    return r;
}

} // namespace vanet

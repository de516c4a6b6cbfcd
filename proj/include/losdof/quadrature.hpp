// SPDX-License-Identifier: Apache-2.0
//
// losdof: spatial degrees of freedom of line-of-sight links between linear arrays
// Copyright (C) 2026 The losdof Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef LOSDOF_QUADRATURE_HPP
#define LOSDOF_QUADRATURE_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

namespace losdof {

struct QuadratureResult {
    double value;
    double abs_err;
    int panels;
};

/// Thrown when a panel cannot meet its share of the tolerance within the
/// refinement depth limit. Carries the estimate accumulated so far.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(double partial, double abs_err)
        : std::runtime_error("adaptive quadrature did not converge"), partial_(partial), abs_err_(abs_err)
    {
    }
    double partial() const { return partial_; }
    double abs_err() const { return abs_err_; }

private:
    double partial_;
    double abs_err_;
};

namespace detail {

// Kronrod abscissae (descending from 1) with the 15-point Kronrod weights and
// the embedded 7-point Gauss weights (nonzero on odd indices).
extern const std::array<double, 8> kKronrodNodes;
extern const std::array<double, 8> kKronrodWeights;
extern const std::array<double, 4> kGaussWeights;

template <class F>
void gauss_kronrod_15(const F& f, double a, double b, double& kronrod, double& err)
{
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double k = kKronrodWeights[7] * fc;
    double g = kGaussWeights[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kKronrodNodes[i];
        const double sum = f(center - dx) + f(center + dx);
        k += kKronrodWeights[i] * sum;
        if (i % 2 == 1)
            g += kGaussWeights[i / 2] * sum;
    }
    kronrod = k * half;
    err = std::abs((k - g) * half);
}

} // namespace detail

/// Adaptive bisection with a 15-point Gauss-Kronrod rule per panel.
/// [a, b] is first split at the given breakpoints; each panel is halved
/// until its error estimate is below abs_tol scaled by its width share.
/// Throws QuadratureError when a panel still fails at `max_depth` halvings
/// or when more than `max_panels` panels have been evaluated.
template <class F>
QuadratureResult integrate(const F& f, double a, double b, double abs_tol,
                           std::span<const double> breakpoints = {}, int max_depth = 30,
                           long max_panels = 1000000)
{
    if (!(b >= a))
        throw std::invalid_argument("integration bounds must satisfy a <= b");
    if (b == a)
        return {0.0, 0.0, 0};

    struct Panel {
        double lo, hi;
        int depth;
    };
    std::vector<double> cuts{a};
    for (double p : breakpoints)
        if (p > a && p < b)
            cuts.push_back(p);
    cuts.push_back(b);
    std::sort(cuts.begin(), cuts.end());

    std::vector<Panel> stack;
    for (std::size_t i = cuts.size() - 1; i > 0; --i)
        stack.push_back({cuts[i - 1], cuts[i], 0});

    const double width = b - a;
    double total = 0.0, total_err = 0.0;
    int panels = 0;
    bool failed = false;
    long evaluated = 0;
    while (!stack.empty()) {
        if (++evaluated > max_panels)
            throw QuadratureError(total, total_err);
        const Panel p = stack.back();
        stack.pop_back();
        double value = 0.0, err = 0.0;
        detail::gauss_kronrod_15(f, p.lo, p.hi, value, err);
        const double share = abs_tol * (p.hi - p.lo) / width;
        if (err <= share || p.hi - p.lo <= 1e-15 * width) {
            total += value;
            total_err += err;
            ++panels;
        } else if (p.depth >= max_depth) {
            total += value;
            total_err += err;
            ++panels;
            failed = true;
        } else {
            const double mid = 0.5 * (p.lo + p.hi);
            stack.push_back({mid, p.hi, p.depth + 1});
            stack.push_back({p.lo, mid, p.depth + 1});
        }
    }
    if (failed)
        throw QuadratureError(total, total_err);
    return {total, total_err, panels};
}

/// Bisection on a bracket with f(lo) and f(hi) of opposite signs (or zero).
/// Stops when the bracket is below rel_tol relative to its midpoint.
template <class F>
double bisect_root(const F& f, double lo, double hi, double rel_tol = 1e-13)
{
    double flo = f(lo);
    if (flo == 0.0)
        return lo;
    const double fhi = f(hi);
    if (fhi == 0.0)
        return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw std::invalid_argument("bisect_root needs a sign change");
    for (int it = 0; it < 300; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (hi - lo <= rel_tol * std::abs(mid) || mid <= lo || mid >= hi)
            break;
        const double fm = f(mid);
        if (fm == 0.0)
            return mid;
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace losdof

#endif

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

#include "losdof/regions.hpp"

#include "losdof/bandwidth.hpp"
#include "losdof/parallel.hpp"
#include "losdof/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace losdof {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void check_lengths(double source_length, double half_length)
{
    if (!(source_length > 0.0) || !(half_length > 0.0))
        throw std::invalid_argument("array lengths must be positive");
}

void check_theta(double theta, bool open)
{
    if (!std::isfinite(theta) || theta < 0.0 || theta > kPi)
        throw std::invalid_argument("polar angle must lie in [0, pi]");
    if (open && (theta == 0.0 || theta == kPi))
        throw std::invalid_argument("polar angle must lie in (0, pi)");
}

BandwidthSummary extrema_for(Axis dir, const ArrayAssembly& assembly)
{
    switch (dir) {
    case Axis::X: return extrema_x(assembly);
    case Axis::Y: return extrema_y(assembly);
    case Axis::Z: return extrema_z(assembly);
    case Axis::Generic: break;
    }
    throw std::invalid_argument("region boundaries are defined for the x, y and z directions");
}

// Extremum summary at distance r, or nothing where the receive array would
// touch the source line.
std::optional<BandwidthSummary> summary_at(Axis dir, double theta, double source_length,
                                           double half_length, double r)
{
    try {
        return extrema_for(dir, ArrayAssembly(source_length, half_length, r, theta));
    } catch (const std::domain_error&) {
        return std::nullopt;
    }
}

double scan_upper(double source_length, double half_length, double k)
{
    const DistanceThreshold r0 = r0_threshold(source_length, half_length);
    const double base = std::max(r0.exact.value_or(r0.approx), 2.0 * half_length * source_length / k);
    return 4.0 * base;
}

std::vector<double> log_grid(double lo, double hi, int points)
{
    if (!(lo > 0.0) || !(hi > lo) || points < 2)
        throw std::invalid_argument("invalid root scan window");
    std::vector<double> grid(points);
    const double ratio = std::log(hi / lo);
    for (int i = 0; i < points; ++i)
        grid[i] = lo * std::exp(ratio * i / (points - 1));
    grid.back() = hi;
    return grid;
}

// Outermost crossing of h from >= 0 (inside) to < 0 (outside).
template <class H>
std::optional<double> outermost_root(const H& h, double r_min, double r_max, int points)
{
    double top = r_max;
    double h_top = h(top);
    for (int i = 0; i < 64 && std::isfinite(h_top) && h_top >= 0.0; ++i) {
        top *= 2.0;
        h_top = h(top);
    }
    if (!std::isfinite(h_top) || h_top >= 0.0)
        return std::nullopt;

    const std::vector<double> grid = log_grid(r_min, top, points);
    double outer = top;
    for (int i = points - 2; i >= 0; --i) {
        const double hv = h(grid[i]);
        if (!std::isfinite(hv))
            continue;
        if (hv >= 0.0)
            return bisect_root(h, grid[i], outer);
        outer = grid[i];
    }
    return std::nullopt;
}

} // namespace

DistanceThreshold r0_threshold(double source_length, double half_length)
{
    check_lengths(source_length, half_length);
    DistanceThreshold out{std::nullopt, 2.0 * half_length * source_length};
    const double radicand = 4.0 * half_length * half_length - 0.25;
    if (radicand > 0.0)
        out.exact = source_length * std::sqrt(radicand);
    return out;
}

std::optional<double> rz_boresight(double source_length, double half_length, double k0)
{
    check_lengths(source_length, half_length);
    if (!(k0 > 0.0))
        throw std::invalid_argument("K0 must be positive");
    const double radicand = 4.0 * half_length * half_length / (k0 * k0) - 0.25;
    if (!(radicand > 0.0))
        return std::nullopt;
    return source_length * std::sqrt(radicand);
}

double fraunhofer_distance(double source_length)
{
    if (!(source_length > 0.0))
        throw std::invalid_argument("source length must be positive");
    return source_length * source_length;
}

double smr_residual(Axis dir, double theta, double source_length, double half_length, double k0, double r)
{
    const ArrayAssembly assembly(source_length, half_length, r, theta);
    if (dir == Axis::Y)
        return extrema_y(assembly).w_max - 2.0 * k0 / half_length;
    return extrema_for(dir, assembly).w_max - k0 / (2.0 * half_length);
}

double ncsmr_residual(Axis dir, double theta, double source_length, double half_length, double dk, double r)
{
    return extrema_for(dir, ArrayAssembly(source_length, half_length, r, theta)).w_range - dk / half_length;
}

std::optional<double> smr_boundary(Axis dir, double theta, double source_length, double half_length,
                                   double k0, const RootScan& scan)
{
    if (dir != Axis::X && dir != Axis::Z)
        throw std::invalid_argument("smr_boundary handles the x and z directions");
    check_lengths(source_length, half_length);
    check_theta(theta, false);
    if (!(k0 > 0.0))
        throw std::invalid_argument("K0 must be positive");
    // On the source axis the bandwidth vanishes everywhere off the source.
    if (theta == 0.0 || theta == kPi)
        return std::nullopt;

    const double target = k0 / (2.0 * half_length);
    if (target >= 2.0)
        return std::nullopt;
    const auto h = [&](double r) {
        const auto s = summary_at(dir, theta, source_length, half_length, r);
        return s ? s->w_max - target : kNaN;
    };
    const double r_max = scan.r_max > 0.0 ? scan.r_max : scan_upper(source_length, half_length, k0);
    return outermost_root(h, scan.r_min, r_max, scan.points);
}

std::optional<double> smr_boundary_y(double theta, double source_length, double half_length, double k0,
                                     const RootScan& scan)
{
    check_lengths(source_length, half_length);
    check_theta(theta, true);
    if (!(k0 > 0.0))
        throw std::invalid_argument("K0 must be positive");

    const double target = 2.0 * k0 / half_length;
    if (target >= 2.0)
        return std::nullopt;
    const auto h = [&](double r) {
        const auto s = summary_at(Axis::Y, theta, source_length, half_length, r);
        return s ? s->w_max - target : kNaN;
    };
    const double r_max = scan.r_max > 0.0 ? scan.r_max : scan_upper(source_length, half_length, k0);
    return outermost_root(h, scan.r_min, r_max, scan.points);
}

std::vector<double> ncsmr_boundary(Axis dir, double theta, double source_length, double half_length,
                                   double dk, const RootScan& scan)
{
    if (dir != Axis::X && dir != Axis::Z)
        throw std::invalid_argument("ncsmr_boundary handles the x and z directions");
    check_lengths(source_length, half_length);
    check_theta(theta, true);
    if (!(dk > 0.0))
        throw std::invalid_argument("dK must be positive");

    const double target = dk / half_length;
    const auto h = [&](double r) {
        const auto s = summary_at(dir, theta, source_length, half_length, r);
        return s ? s->w_range - target : kNaN;
    };
    const double r_max = scan.r_max > 0.0 ? scan.r_max : scan_upper(source_length, half_length, 1.0);
    const std::vector<double> grid = log_grid(scan.r_min, r_max, scan.points);

    std::vector<double> roots;
    double prev_r = grid[0];
    double prev_h = h(prev_r);
    for (std::size_t i = 1; i < grid.size(); ++i) {
        const double hv = h(grid[i]);
        if (std::isfinite(prev_h) && std::isfinite(hv)) {
            if (hv == 0.0)
                roots.push_back(grid[i]);
            else if (prev_h != 0.0 && (prev_h > 0.0) != (hv > 0.0))
                roots.push_back(bisect_root(h, prev_r, grid[i]));
        }
        prev_r = grid[i];
        prev_h = hv;
    }
    return roots;
}

RegionCurve boundary_curve(Axis dir, RegionKind kind, std::span<const double> thetas,
                           double source_length, double half_length, double threshold, unsigned threads,
                           const RootScan& scan)
{
    for (std::size_t i = 0; i < thetas.size(); ++i) {
        check_theta(thetas[i], false);
        if (i > 0 && !(thetas[i] > thetas[i - 1]))
            throw std::invalid_argument("theta grid must be strictly increasing");
    }
    if (kind == RegionKind::NCSMR && dir == Axis::Y)
        throw std::invalid_argument("the whole e_y region is non-constant-bandwidth; use the SMR kind");
    if (dir == Axis::Generic)
        throw std::invalid_argument("region boundaries are defined for the x, y and z directions");

    RegionCurve curve{dir, kind, threshold, std::vector<RegionSample>(thetas.size())};
    parallel_for(thetas.size(), threads, [&](std::size_t i) {
        const double theta = thetas[i];
        RegionSample& sample = curve.samples[i];
        sample.theta = theta;
        if (kind == RegionKind::NCSMR) {
            if (theta > 0.0 && theta < kPi)
                sample.radii = ncsmr_boundary(dir, theta, source_length, half_length, threshold, scan);
            return;
        }
        std::optional<double> r;
        if (dir == Axis::Y) {
            if (theta > 0.0 && theta < kPi)
                r = smr_boundary_y(theta, source_length, half_length, threshold, scan);
        } else {
            r = smr_boundary(dir, theta, source_length, half_length, threshold, scan);
        }
        if (r)
            sample.radii.push_back(*r);
    });
    return curve;
}

} // namespace losdof

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

#include "losdof/verify.hpp"

#include "losdof/bandwidth.hpp"
#include "losdof/dof.hpp"
#include "losdof/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace losdof {

namespace {

double relative_gap(double a, double b)
{
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

struct Tracker {
    CheckResult result;

    void observe(double violation)
    {
        result.worst = std::max(result.worst, violation);
        ++result.samples;
    }
    CheckResult finish()
    {
        result.passed = result.worst <= result.tolerance;
        return result;
    }
};

Tracker tracker(std::string name, double tolerance)
{
    return Tracker{CheckResult{std::move(name), false, 0.0, tolerance, 0}};
}

} // namespace

std::vector<CheckResult> run_verification(std::uint64_t seed, int draws, const SweepRanges& ranges)
{
    if (draws < 1)
        throw std::invalid_argument("need at least one draw");

    std::mt19937_64 rng(seed);
    const auto log_uniform = [&](double lo, double hi) {
        return std::exp(std::uniform_real_distribution<double>(std::log(lo), std::log(hi))(rng));
    };
    const auto uniform = [&](double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); };

    Tracker extrema = tracker("extrema-vs-dense-scan", 1e-8);
    Tracker sandwich = tracker("k-lower<=k-exact<=k-upper", kDefaultQuadratureTolerance);
    Tracker mirror = tracker("mirror-identities", 1e-12);
    Tracker generic = tracker("closed-form-vs-generic-search", 1e-9);

    for (int i = 0; i < draws; ++i) {
        const double length = log_uniform(ranges.source_length_min, ranges.source_length_max);
        const double rho = log_uniform(ranges.half_length_min, ranges.half_length_max);
        const double r = log_uniform(ranges.distance_min, ranges.distance_max);
        double theta = uniform(0.0, kPi);
        while (theta == 0.0)
            theta = uniform(0.0, kPi);
        const ArrayAssembly assembly(length, rho, r, theta);
        const LinkGeometry& link = assembly.link();

        for (Axis axis : {Axis::X, Axis::Y, Axis::Z}) {
            const BandwidthSummary closed = bandwidth_extrema(assembly, ReceiveDirection::along(axis));
            const oracle::ScanExtrema scan = oracle::axis_extrema(assembly, axis);
            extrema.observe(std::max(std::abs(closed.w_max - scan.max), std::abs(closed.w_min - scan.min)));

            const KNumberReport k = k_number(assembly, ReceiveDirection::along(axis));
            sandwich.observe(std::max({k.k_lower - k.k_exact, k.k_exact - k.k_upper, 0.0}));
        }

        const LinkGeometry flipped = link.mirrored();
        const double z = uniform(-rho, rho);
        const double x = uniform(-std::min(link.lateral(), rho), rho);
        const double y = uniform(-rho, rho);
        mirror.observe(relative_gap(bandwidth_z(z, link), bandwidth_z(-z, flipped)));
        mirror.observe(relative_gap(bandwidth_x(x, link), bandwidth_x(x, flipped)));
        mirror.observe(relative_gap(bandwidth_y(y, link), bandwidth_y(y, flipped)));
        mirror.observe(relative_gap(bandwidth_y(y, link), bandwidth_y(-y, link)));

        generic.observe(std::abs(bandwidth_z(z, link) - bandwidth_generic(z, Vec3::UnitZ(), link)));
        generic.observe(std::abs(bandwidth_x(x, link) - bandwidth_generic(x, Vec3::UnitX(), link)));
        generic.observe(std::abs(bandwidth_y(y, link) - bandwidth_generic(y, Vec3::UnitY(), link)));
    }
    return {extrema.finish(), sandwich.finish(), mirror.finish(), generic.finish()};
}

} // namespace losdof

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

#include "losdof/bandwidth.hpp"
#include "losdof/oracle.hpp"
#include "losdof/regions.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

using namespace losdof;
using doctest::Approx;

TEST_CASE("direction cosine")
{
    CHECK(direction_cosine(3.0, 4.0) == Approx(0.6));
    CHECK(direction_cosine(0.0, 2.0) == 0.0);
    CHECK(direction_cosine(5.0, 0.0) == 1.0);
    CHECK(direction_cosine(-5.0, 1.0) == -direction_cosine(5.0, 1.0));
    CHECK_THROWS_AS(direction_cosine(0.0, 0.0), std::domain_error);
}

TEST_CASE("w_z")
{
    const double r0 = *r0_threshold(400.0, 20.0).exact;
    CHECK(bandwidth_z(0.0, LinkGeometry(400.0, r0, kPi / 2)) == Approx(0.025).epsilon(1e-13));

    const LinkGeometry link(400.0, 1000.0, kPi / 3);
    CHECK(bandwidth_z(10.0, link) == Approx(bandwidth_generic(10.0, Vec3::UnitZ(), link)).epsilon(1e-12));
    CHECK(std::abs(bandwidth_z(10.0, link) -
                   oracle::bandwidth_brute_force(10.0 * Vec3::UnitZ(), Vec3::UnitZ(), link.source_center(),
                                                 Vec3::UnitZ(), 400.0)) < 1e-9);
    for (double z : {-20.0, -3.0, 0.0, 7.5, 20.0})
        CHECK(bandwidth_z(z, link) == bandwidth_z(-z, link.mirrored()));
}

TEST_CASE("w_x")
{
    const LinkGeometry broadside(400.0, 300.0, kPi / 2);
    CHECK(bandwidth_x(0.0, broadside) == Approx(1.0 - 300.0 / std::sqrt(300.0 * 300.0 + 200.0 * 200.0)));
    CHECK(bandwidth_x(0.0, broadside) == Approx(0.16795).epsilon(1e-4));
    CHECK(std::abs(bandwidth_x(0.0, broadside) - bandwidth_generic(0.0, Vec3::UnitX(), broadside)) < 1e-9);

    const LinkGeometry link(400.0, 1000.0, 0.6);
    for (double x : {-15.0, 0.0, 12.0})
        CHECK(bandwidth_x(x, link) == bandwidth_x(x, link.mirrored()));

    // Branch boundary |cos theta| = L / (2 r): near offset 0 on both sides.
    const double theta = std::acos(200.0 / 1000.0);
    const LinkGeometry edge(400.0, 1000.0, theta);
    const LinkGeometry inside(400.0, 1000.0, theta + 1e-9);
    const LinkGeometry outside(400.0, 1000.0, theta - 1e-9);
    CHECK(bandwidth_x(3.0, inside) == Approx(bandwidth_x(3.0, outside)).epsilon(1e-6));
    CHECK(bandwidth_x(3.0, edge) == Approx(bandwidth_x(3.0, outside)).epsilon(1e-6));

    CHECK_THROWS_AS(bandwidth_x(-2000.0, link), std::domain_error);
}

TEST_CASE("w_y")
{
    const LinkGeometry link(400.0, 100.0, kPi / 2);
    CHECK(bandwidth_y(0.0, link) == 0.0);
    for (double y : {0.5, 5.0, 20.0})
        CHECK(bandwidth_y(-y, link) == bandwidth_y(y, link));
    CHECK(std::abs(bandwidth_y(20.0, link) - bandwidth_generic(20.0, Vec3::UnitY(), link)) < 1e-9);
    const LinkGeometry off(400.0, 900.0, 0.3);
    CHECK(bandwidth_y(7.0, off) == bandwidth_y(7.0, off.mirrored()));
}

TEST_CASE("generic bandwidth")
{
    const LinkGeometry link(400.0, 600.0, 1.1);
    for (double l : {-20.0, -4.0, 0.0, 9.0, 20.0}) {
        CHECK(bandwidth_generic(l, Vec3::UnitZ(), link) == Approx(bandwidth_z(l, link)).epsilon(1e-10));
        // Negating v moves the point to -l and negates g(t): same spread at
        // the mirrored receive position.
        CHECK(bandwidth_generic(-l, -Vec3::UnitZ(), link) == Approx(bandwidth_z(l, link)).epsilon(1e-10));
    }

    // Tilted direction: bounded by w_z + w_x, and the brute-force scan agrees.
    for (double tilt : {0.2, 0.7, 1.3}) {
        const Vec3 v(std::sin(tilt), 0.0, std::cos(tilt));
        for (double l : {-15.0, 0.0, 15.0}) {
            const double w = bandwidth_generic(l, v, link);
            const Vec3 p = l * v;
            CHECK(w <= bandwidth_z(p.z(), link) + bandwidth_x(p.x(), link) + 1e-12);
            const double brute =
                oracle::bandwidth_brute_force(p, v, link.source_center(), Vec3::UnitZ(), 400.0, 100001);
            CHECK(std::abs(w - brute) < 1e-8);
            CHECK(w >= brute - 1e-15);
        }
    }

    CHECK_THROWS_AS(bandwidth_at_point(Vec3(0, 0, 5), Vec3::UnitX(), Vec3::Zero(), Vec3::UnitZ(), 20.0),
                    std::domain_error);
}

TEST_CASE("extrema closed forms")
{
    SUBCASE("z at boresight")
    {
        const ArrayAssembly a(400.0, 20.0, *r0_threshold(400.0, 20.0).exact, kPi / 2);
        const BandwidthSummary s = extrema_z(a);
        CHECK(s.w_max == Approx(0.025).epsilon(1e-13));
        CHECK(2 * 20.0 * s.w_max == Approx(1.0).epsilon(1e-13));
        CHECK(s.argmax_location == 0.0);
        CHECK(s.w_max == Approx(2 * direction_cosine(200.0, a.link().lateral())));
    }
    SUBCASE("x with the perpendicular on the source")
    {
        const ArrayAssembly a(400.0, 20.0, 300.0, 1.5);
        const LinkGeometry& link = a.link();
        const BandwidthSummary s = extrema_x(a);
        CHECK(s.w_max == Approx(1.0 - direction_cosine(link.lateral() - 20.0, link.far_offset())));
        CHECK(s.w_min == Approx(1.0 - direction_cosine(link.lateral() + 20.0, link.far_offset())));
        CHECK(s.effective_interval.lo == -20.0);
    }
    SUBCASE("x0 formula")
    {
        CHECK(peak_offset_x(2.0, 1.0, 0.5) == Approx(0.4869).epsilon(1e-3));
        CHECK_THROWS_AS(peak_offset_x(1.0, 0.0, 0.5), std::domain_error);
    }
    SUBCASE("y at r = 100")
    {
        const ArrayAssembly a(400.0, 20.0, 100.0, kPi / 2);
        const BandwidthSummary s = extrema_y(a);
        const oracle::ScanExtrema scan = oracle::axis_extrema(a, Axis::Y);
        CHECK(s.w_min == 0.0);
        CHECK(s.w_max == s.w_range);
        CHECK(std::abs(s.w_max - scan.max) < 1e-8);
        CHECK(s.w_max == bandwidth_y(20.0, a.link()));
    }
    SUBCASE("y peak inside the interval")
    {
        const ArrayAssembly a(40.0, 80.0, 20.0, 1.0);
        const BandwidthSummary s = extrema_y(a);
        CHECK(s.argmax_location < 80.0);
        const oracle::ScanExtrema scan = oracle::axis_extrema(a, Axis::Y);
        CHECK(std::abs(s.w_max - scan.max) < 1e-8);
        CHECK(s.w_max > bandwidth_y(80.0, a.link()));
    }
}

TEST_CASE("randomized extrema properties")
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const auto log_uniform = [&](double lo, double hi) { return lo * std::pow(hi / lo, unit(rng)); };
    for (int i = 0; i < 200; ++i) {
        const ArrayAssembly a(log_uniform(10, 1e3), log_uniform(1, 1e2), log_uniform(10, 1e5),
                              kPi * (0.001 + 0.998 * unit(rng)));
        for (Axis axis : {Axis::X, Axis::Y, Axis::Z}) {
            const BandwidthSummary s = bandwidth_extrema(a, ReceiveDirection::along(axis));
            CHECK(0.0 <= s.w_min);
            CHECK(s.w_min <= s.w_max);
            CHECK(s.w_max <= 2.0);
            CHECK(s.w_range == s.w_max - s.w_min);
            CHECK(s.effective_interval.contains(s.argmax_location));
            const oracle::ScanExtrema scan = oracle::axis_extrema(a, axis, 10000);
            CHECK(std::abs(s.w_max - scan.max) < 1e-8);
            CHECK(std::abs(s.w_min - scan.min) < 1e-8);
        }
    }
}

TEST_CASE("peak z bandwidth decreases with lateral distance")
{
    double prev = 3.0;
    for (double d = 1.0; d < 1e5; d *= 1.3) {
        const double w = peak_bandwidth_z(LinkGeometry(400.0, d, kPi / 2));
        CHECK(w < prev);
        prev = w;
    }
}

TEST_CASE("generic extrema agree with the axis closed forms")
{
    const ArrayAssembly a(400.0, 20.0, 800.0, 1.2);
    const BandwidthSummary g = extrema_generic(a, Vec3::UnitZ());
    const BandwidthSummary z = extrema_z(a);
    CHECK(g.w_max == Approx(z.w_max).epsilon(1e-9));
    CHECK(g.w_min == Approx(z.w_min).epsilon(1e-9));
}

TEST_CASE("far-field warning")
{
    CHECK(far_field_warning(LinkGeometry(10.0, 9.0, 1.0)));
    CHECK_FALSE(far_field_warning(LinkGeometry(10.0, 10.0, 1.0)));
}

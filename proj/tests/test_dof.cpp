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

#include "losdof/dof.hpp"
#include "losdof/oracle.hpp"
#include "losdof/regions.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

using namespace losdof;
using doctest::Approx;

TEST_CASE("adaptive quadrature")
{
    const QuadratureResult q = integrate([](double x) { return std::sin(x); }, 0.0, kPi, 1e-12);
    CHECK(q.value == Approx(2.0).epsilon(1e-12));
    CHECK(q.abs_err <= 1e-12);

    const double cut[] = {0.3};
    const auto kink = [](double x) { return std::abs(x - 0.3); };
    CHECK(integrate(kink, 0.0, 1.0, 1e-12, cut).value == Approx(0.045 + 0.245).epsilon(1e-12));
    CHECK(integrate(kink, 0.0, 1.0, 1e-10).value == Approx(0.29).epsilon(1e-9));

    CHECK(integrate([](double) { return 1.0; }, 2.0, 2.0, 1e-8).value == 0.0);
    CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 1.0, 0.0, 1e-8), std::invalid_argument);

    // An integrable singularity cannot meet the tolerance within the depth limit.
    try {
        integrate([](double x) { return 1.0 / std::sqrt(std::abs(x)) + std::sin(1e4 * x); }, -1.0, 1.0, 1e-14, {},
                  6);
        FAIL("expected a QuadratureError");
    } catch (const QuadratureError& e) {
        CHECK(std::isfinite(e.partial()));
    }
}

TEST_CASE("quadrature panel budget")
{
    const auto wiggle = [](double x) { return std::sin(1e6 * x); };
    CHECK_THROWS_AS(integrate(wiggle, 0.0, 1.0, 1e-10, {}, 30, 100), QuadratureError);
    CHECK_NOTHROW(integrate(wiggle, 0.0, 1.0, 1e-10));
}

TEST_CASE("bisection")
{
    CHECK(bisect_root([](double x) { return x * x - 2.0; }, 0.0, 2.0) == Approx(std::sqrt(2.0)).epsilon(1e-13));
    CHECK_THROWS_AS(bisect_root([](double x) { return x * x + 1.0; }, -1.0, 1.0), std::invalid_argument);
}

TEST_CASE("K number at R0 boresight")
{
    const double r0 = *r0_threshold(400.0, 20.0).exact;
    const KNumberReport k = k_number(ArrayAssembly(400.0, 20.0, r0, kPi / 2), ReceiveDirection::z());
    CHECK(k.k_upper == Approx(1.0).epsilon(1e-13));
    CHECK(k.k_exact == Approx(1.0).epsilon(0.01));
    CHECK(k.k_lower <= k.k_exact);
    CHECK(k.k_exact <= k.k_upper);
    CHECK(k.warnings.empty());
}

TEST_CASE("K number matches the trapezoid oracle")
{
    const ArrayAssembly a(400.0, 20.0, 200.0, kPi / 2);
    const double q = k_number(a, ReceiveDirection::z()).k_exact;
    const double t =
        oracle::trapezoid([&](double z) { return bandwidth_z(z, a.link()); }, -20.0, 20.0, 1000000);
    CHECK(std::abs(q - t) < 1e-6);
}

TEST_CASE("K number for Y vanishes with the array")
{
    double prev = INFINITY;
    for (double rho : {10.0, 1.0, 0.1, 0.01, 0.001}) {
        const double k = k_number(ArrayAssembly(400.0, rho, 500.0, 1.0), ReceiveDirection::y()).k_exact;
        CHECK(k < prev);
        prev = k;
    }
    CHECK(prev < 1e-6);
}

TEST_CASE("bounds and linear approximation")
{
    const ArrayAssembly a(400.0, 20.0, 900.0, 0.8);
    CHECK(k_bounds(a, ReceiveDirection::y()).lower == 0.0);
    const BandwidthSummary y = extrema_y(a);
    CHECK(k_linear(a, ReceiveDirection::y()) == Approx(0.5 * 20.0 * y.w_max));

    const KBounds b = k_bounds(a, ReceiveDirection::z());
    CHECK(k_linear(a, ReceiveDirection::z()) == Approx(0.5 * (b.lower + b.upper)));

    // Truncated e_x interval: exact and full-aperture variants differ.
    const ArrayAssembly close(400.0, 20.0, 30.0, 0.3);
    CHECK(close.link().lateral() < 20.0);
    const KBounds exact = k_bounds(close, ReceiveDirection::x(), IntervalMode::Exact);
    const KBounds full = k_bounds(close, ReceiveDirection::x(), IntervalMode::FullAperture);
    CHECK(exact.upper < full.upper);
    CHECK(full.upper == Approx(40.0 * extrema_x(close).w_max));
    const KNumberReport k = k_number(close, ReceiveDirection::x());
    CHECK(k.warnings.size() == 1);

    // Constant-bandwidth limit.
    const ArrayAssembly far(400.0, 20.0, 1e6, kPi / 2);
    CHECK(k_linear(far, ReceiveDirection::z()) == Approx(40.0 * peak_bandwidth_z(far.link())).epsilon(1e-6));
}

TEST_CASE("collinear overlap is rejected")
{
    CHECK_THROWS_AS(k_number(ArrayAssembly(400.0, 20.0, 150.0, 0.0), ReceiveDirection::z()), std::invalid_argument);
    const KNumberReport apart = k_number(ArrayAssembly(400.0, 20.0, 300.0, 0.0), ReceiveDirection::z());
    CHECK(apart.k_exact == 0.0);
    CHECK_NOTHROW(k_number(ArrayAssembly(400.0, 20.0, 150.0, 0.0), ReceiveDirection::x()));
}

TEST_CASE("far-field warning in the report")
{
    const KNumberReport k = k_number(ArrayAssembly(4.0, 1.0, 8.0, kPi / 2), ReceiveDirection::z());
    REQUIRE(k.warnings.size() == 1);
    CHECK(k.warnings[0].find("far-field") != std::string::npos);
}

TEST_CASE("sandwich and midpoint bound on random draws")
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const auto log_uniform = [&](double lo, double hi) { return lo * std::pow(hi / lo, unit(rng)); };
    for (int i = 0; i < 500; ++i) {
        const ArrayAssembly a(log_uniform(10, 1e3), log_uniform(1, 1e2), log_uniform(10, 1e5),
                              kPi * (0.001 + 0.998 * unit(rng)));
        for (Axis axis : {Axis::X, Axis::Y, Axis::Z}) {
            const KNumberReport k = k_number(a, ReceiveDirection::along(axis));
            const double slack = k.quadrature_abs_err + 1e-12;
            CHECK(k.k_lower <= k.k_exact + slack);
            CHECK(k.k_exact <= k.k_upper + slack);
            CHECK(std::abs(k.k_linear - k.k_exact) <= 0.5 * (k.k_upper - k.k_lower) + 1e-6);
        }
    }
}

TEST_CASE("generic direction reversal")
{
    const ArrayAssembly a(400.0, 20.0, 700.0, 1.0);
    const Vec3 v = Vec3(0.3, -0.5, 0.8).normalized();
    const double k1 = k_number(a, ReceiveDirection::generic(v)).k_exact;
    const double k2 = k_number(a, ReceiveDirection::generic(-v)).k_exact;
    CHECK(k1 == Approx(k2).epsilon(1e-8));
    CHECK(k_number(a, ReceiveDirection::generic(Vec3::UnitZ())).k_exact ==
          Approx(k_number(a, ReceiveDirection::z()).k_exact).epsilon(1e-8));
}

TEST_CASE("parallel-array formula")
{
    CHECK(k_parallel(400.0, 40.0, 16000.0) == Approx(1.0));
    CHECK(k_parallel(10.0, 10.0, 100.0) == Approx(1.0));
    CHECK(k_parallel(30.0, 60.0, 900.0) == Approx(3.0 * k_parallel(10.0, 20.0, 300.0)));
    CHECK_THROWS_AS(k_parallel(1.0, 1.0, 0.0), std::invalid_argument);
    CHECK(k_parallel_warning(400.0, 40.0, 3000.0));
    CHECK_FALSE(k_parallel_warning(400.0, 40.0, 16000.0));
}

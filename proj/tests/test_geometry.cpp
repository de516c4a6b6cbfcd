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

#include "losdof/geometry.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

using namespace losdof;
using doctest::Approx;

TEST_CASE("arctan_star")
{
    CHECK(arctan_star(0.0) == 0.0);
    CHECK(arctan_star(1.0) == Approx(kPi / 4));
    CHECK(arctan_star(-1.0) == Approx(3 * kPi / 4));
    CHECK_THROWS_AS(arctan_star(std::numeric_limits<double>::infinity()), std::invalid_argument);
    CHECK_THROWS_AS(arctan_star(std::nan("")), std::invalid_argument);

    // Increasing on each half-line, covering (0, pi) overall.
    double prev = arctan_star(1e-6);
    for (double x = 1e-3; x < 1e6; x *= 1.5) {
        const double v = arctan_star(x);
        CHECK(v > prev);
        CHECK(v < kPi / 2);
        prev = v;
    }
    prev = arctan_star(-1e6);
    CHECK(prev > kPi / 2);
    for (double x = -1e5; x < -1e-6; x /= 1.5) {
        const double v = arctan_star(x);
        CHECK(v > prev);
        CHECK(v < kPi);
        prev = v;
    }
}

TEST_CASE("sign_star")
{
    CHECK(sign_star(0.0) == 0);
    CHECK(sign_star(-3.2) == -1);
    CHECK(sign_star(1e-300) == 1);
    CHECK_THROWS_AS(sign_star(std::numeric_limits<double>::infinity()), std::invalid_argument);
}

TEST_CASE("link geometry derived offsets")
{
    const LinkGeometry link(400.0, 1000.0, kPi / 3);
    CHECK(link.lateral() == Approx(1000.0 * std::sin(kPi / 3)));
    CHECK(link.axial() == Approx(500.0));
    CHECK(link.upper_offset() == Approx(700.0));
    CHECK(link.lower_offset() == Approx(300.0));
    CHECK(link.far_offset() == Approx(700.0));
    CHECK(link.near_offset() == Approx(300.0));
    CHECK_FALSE(link.perpendicular_hits_source());
    CHECK(link.upper_offset() > link.lower_offset());
    CHECK(link.far_offset() > link.near_offset());

    const LinkGeometry broadside(400.0, 300.0, kPi / 2);
    CHECK(broadside.axial() == 0.0);
    CHECK(broadside.lateral() == 300.0);
    CHECK(broadside.perpendicular_hits_source());

    const LinkGeometry endfire(400.0, 300.0, kPi);
    CHECK(endfire.lateral() == 0.0);
    CHECK(endfire.axial() == -300.0);

    CHECK(link.source_center().isApprox(Vec3(-link.lateral(), 0.0, -500.0)));
}

TEST_CASE("link geometry rejects invalid input")
{
    CHECK_THROWS_AS(LinkGeometry(0.0, 10.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(LinkGeometry(10.0, -1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(LinkGeometry(10.0, 10.0, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(LinkGeometry(10.0, 10.0, 4.0), std::invalid_argument);
    CHECK_THROWS_AS(ArrayAssembly(10.0, 0.0, 10.0, 1.0), std::invalid_argument);
}

TEST_CASE("mirrored link negates the axial offset exactly")
{
    const LinkGeometry link(123.4, 567.8, 0.7);
    const LinkGeometry m = link.mirrored();
    CHECK(m.axial() == -link.axial());
    CHECK(m.lateral() == link.lateral());
    CHECK(m.polar_angle() == Approx(kPi - 0.7));
}

TEST_CASE("receive directions")
{
    CHECK(ReceiveDirection::x().unit() == Vec3::UnitX());
    CHECK(ReceiveDirection::along(Axis::Y).unit() == Vec3::UnitY());
    CHECK(ReceiveDirection::z().axis() == Axis::Z);
    CHECK_THROWS_AS(ReceiveDirection::along(Axis::Generic), std::invalid_argument);
    CHECK_THROWS_AS(ReceiveDirection::generic(Vec3(1.0, 1.0, 0.0)), std::invalid_argument);
    CHECK_NOTHROW(ReceiveDirection::generic(Vec3(1.0, 1.0, 0.0).normalized()));
    CHECK(parse_axis("x") == Axis::X);
    CHECK_THROWS_AS(parse_axis("w"), std::invalid_argument);
}

TEST_CASE("vertical scene transform")
{
    ScenePlacement scene;
    scene.mode = SceneMode::Vertical;
    scene.source_height = 400.0;

    SUBCASE("collinear")
    {
        scene.rx_x = 100.0;
        const SceneLocal local = vertical_scene_to_local(scene, 0.0);
        CHECK(local.angle == 0.0);
        CHECK(local.params.assembly.link().polar_angle() == Approx(std::atan(100.0 / 400.0)));
        CHECK(local.projections.x() == Approx(scene.rx_length));
        CHECK(local.projections.z() == 0.0);
    }
    SUBCASE("on the y axis")
    {
        scene.rx_y = 100.0;
        const SceneLocal local = vertical_scene_to_local(scene, kPi / 2);
        CHECK(local.angle == Approx(kPi / 2));
        CHECK(local.projections.x() == Approx(scene.rx_length));
    }
    SUBCASE("3-4-5")
    {
        scene.rx_x = 3.0;
        scene.rx_y = 4.0;
        const SceneLocal local = vertical_scene_to_local(scene, 1.0);
        CHECK(local.angle == Approx(std::acos(0.6)));
        CHECK(local.params.assembly.link().distance() == Approx(std::sqrt(25.0 + 400.0 * 400.0)));
    }
    SUBCASE("origin is flagged")
    {
        const SceneLocal local = vertical_scene_to_local(scene, 0.3);
        CHECK(local.degenerate);
        CHECK(local.angle == 0.0);
        CHECK(local.params.assembly.link().polar_angle() == 0.0);
    }
    SUBCASE("co-rotation leaves the local geometry unchanged")
    {
        const double radius = 250.0;
        for (double alpha : {0.1, 0.5, 1.0, 2.0}) {
            scene.rx_x = radius * std::cos(alpha);
            scene.rx_y = radius * std::sin(alpha);
            const SceneLocal local = vertical_scene_to_local(scene, alpha + 0.4 > kPi ? kPi : alpha + 0.4);
            CHECK(local.params.assembly.link().distance() == Approx(std::hypot(radius, 400.0)));
            CHECK(local.params.assembly.link().polar_angle() == Approx(std::atan(radius / 400.0)));
            CHECK(local.params.orientation.isApprox(Vec3(std::cos(0.4), -std::sin(0.4), 0.0), 1e-12));
        }
    }
    SUBCASE("validation")
    {
        scene.source_height = 150.0;
        CHECK_THROWS_AS(vertical_scene_to_local(scene, 0.0), std::invalid_argument);
        scene.source_height = 400.0;
        scene.rx_y = -1.0;
        CHECK_THROWS_AS(vertical_scene_to_local(scene, 0.0), std::invalid_argument);
        scene.rx_y = 0.0;
        CHECK_THROWS_AS(vertical_scene_to_local(scene, 3.5), std::invalid_argument);
    }
}

TEST_CASE("horizontal scene transform")
{
    ScenePlacement scene;
    scene.mode = SceneMode::Horizontal;
    scene.source_height = 400.0;

    SUBCASE("x = 0 is boresight")
    {
        scene.rx_y = 300.0;
        CHECK(horizontal_scene_to_local(scene, 0.4).params.assembly.link().polar_angle() == kPi / 2);
    }
    SUBCASE("phi = 0 projects onto e_z")
    {
        scene.rx_x = 200.0;
        scene.rx_y = 100.0;
        const SceneLocal local = horizontal_scene_to_local(scene, 0.0);
        CHECK(local.projections.z() == Approx(scene.rx_length));
        CHECK(local.projections.x() == Approx(0.0));
        CHECK(local.projections.y() == Approx(0.0));
    }
    SUBCASE("receiver under the source line")
    {
        scene.rx_x = 50.0;
        const SceneLocal local = horizontal_scene_to_local(scene, kPi / 2);
        CHECK(local.angle == Approx(kPi / 2));
        CHECK(local.projections.x() == Approx(0.0).epsilon(1e-12));
        CHECK(local.projections.y() == Approx(scene.rx_length));
    }
    SUBCASE("projections and mirror in x")
    {
        for (double x : {-900.0, -100.0, 30.0, 700.0})
            for (double y : {0.0, 150.0, 2000.0})
                for (double phi : {0.0, 0.3, 1.2, kPi / 2, 2.9}) {
                    scene.rx_x = x;
                    scene.rx_y = y;
                    const SceneLocal a = horizontal_scene_to_local(scene, phi);
                    CHECK(a.projections.squaredNorm() == Approx(scene.rx_length * scene.rx_length).epsilon(1e-10));
                    CHECK(a.params.orientation.norm() == Approx(1.0).epsilon(1e-12));
                    scene.rx_x = -x;
                    const SceneLocal b = horizontal_scene_to_local(scene, phi);
                    CHECK(a.params.assembly.link().polar_angle() + b.params.assembly.link().polar_angle() ==
                          Approx(kPi));
                }
    }
}

TEST_CASE("world layout matches the local receive direction")
{
    // The local orientation, mapped back through the world frames, is the
    // ground direction (cos phi, sin phi, 0).
    ScenePlacement scene;
    scene.mode = SceneMode::Horizontal;
    scene.rx_x = 300.0;
    scene.rx_y = 800.0;
    const double phi = 0.9;
    const WorldLayout w = world_layout(scene, phi);
    const SceneLocal local = horizontal_scene_to_local(scene, phi);
    const double r2 = std::hypot(scene.rx_y, scene.source_height);
    const Vec3 ex(0.0, scene.rx_y / r2, -scene.source_height / r2);
    const Vec3 ey(0.0, scene.source_height / r2, scene.rx_y / r2);
    const Vec3 ez = Vec3::UnitX();
    const Vec3 v = local.params.orientation;
    CHECK((v.x() * ex + v.y() * ey + v.z() * ez).isApprox(w.rx_axis, 1e-12));
}

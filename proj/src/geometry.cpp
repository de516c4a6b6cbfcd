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

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace losdof {

namespace {

void require_finite(double value, const char* what)
{
    if (!std::isfinite(value))
        throw std::invalid_argument(std::string(what) + " must be finite");
}

void check_phi(double phi)
{
    require_finite(phi, "orientation angle");
    if (phi < 0.0 || phi > kPi)
        throw std::invalid_argument("orientation angle must lie in [0, pi]");
}

} // namespace

LinkGeometry::LinkGeometry(double source_length, double distance, double polar_angle)
    : length_(source_length), distance_(distance), theta_(polar_angle)
{
    require_finite(source_length, "source length");
    require_finite(distance, "distance");
    require_finite(polar_angle, "polar angle");
    if (source_length <= 0.0)
        throw std::invalid_argument("source length must be positive");
    if (distance <= 0.0)
        throw std::invalid_argument("distance must be positive");
    if (polar_angle < 0.0 || polar_angle > kPi)
        throw std::invalid_argument("polar angle must lie in [0, pi]");

    // Exact values at the endfire and boresight angles keep d and r cos(theta)
    // free of the ~1e-16 residue of sin(pi) and cos(pi/2).
    if (polar_angle == 0.0 || polar_angle == kPi) {
        lateral_ = 0.0;
        axial_ = polar_angle == 0.0 ? distance : -distance;
    } else if (polar_angle == 0.5 * kPi) {
        lateral_ = distance;
        axial_ = 0.0;
    } else {
        lateral_ = distance * std::sin(polar_angle);
        axial_ = distance * std::cos(polar_angle);
    }
}

LinkGeometry LinkGeometry::mirrored() const
{
    // Reflect the stored offsets rather than re-deriving them from pi - theta,
    // which is not representable and would perturb the axial offset.
    LinkGeometry out = *this;
    out.theta_ = kPi - theta_;
    out.axial_ = -axial_;
    return out;
}

ArrayAssembly::ArrayAssembly(const LinkGeometry& link, double half_length)
    : link_(link), rho_(half_length)
{
    require_finite(half_length, "receive half-length");
    if (half_length <= 0.0)
        throw std::invalid_argument("receive half-length must be positive");
}

ArrayAssembly ArrayAssembly::with_distance(double distance) const
{
    return ArrayAssembly(LinkGeometry(link_.source_length(), distance, link_.polar_angle()), rho_);
}

ArrayAssembly ArrayAssembly::with_half_length(double half_length) const
{
    return ArrayAssembly(link_, half_length);
}

std::string to_string(Axis axis)
{
    switch (axis) {
    case Axis::X: return "x";
    case Axis::Y: return "y";
    case Axis::Z: return "z";
    case Axis::Generic: return "generic";
    }
    return "?";
}

Axis parse_axis(const std::string& name)
{
    if (name == "x" || name == "X") return Axis::X;
    if (name == "y" || name == "Y") return Axis::Y;
    if (name == "z" || name == "Z") return Axis::Z;
    if (name == "generic") return Axis::Generic;
    throw std::invalid_argument("unknown receive direction '" + name + "'");
}

ReceiveDirection ReceiveDirection::along(Axis axis)
{
    switch (axis) {
    case Axis::X: return x();
    case Axis::Y: return y();
    case Axis::Z: return z();
    case Axis::Generic: break;
    }
    throw std::invalid_argument("a generic direction needs an explicit unit vector");
}

ReceiveDirection ReceiveDirection::generic(const Vec3& unit)
{
    if (!unit.allFinite())
        throw std::invalid_argument("orientation vector must be finite");
    if (std::abs(unit.norm() - 1.0) > 1e-12)
        throw std::invalid_argument("orientation vector must have unit norm");
    return ReceiveDirection(Axis::Generic, unit);
}

double arctan_star(double x)
{
    require_finite(x, "arctan_star argument");
    return (x < 0.0 ? kPi : 0.0) + std::atan(x);
}

int sign_star(double x)
{
    require_finite(x, "sign_star argument");
    return (x > 0.0) - (x < 0.0);
}

void ScenePlacement::validate() const
{
    require_finite(source_length, "source length");
    require_finite(source_height, "source height");
    require_finite(rx_x, "receive x");
    require_finite(rx_y, "receive y");
    require_finite(rx_length, "receive length");
    if (source_length <= 0.0)
        throw std::invalid_argument("source length must be positive");
    if (rx_length <= 0.0)
        throw std::invalid_argument("receive length must be positive");
    if (source_height <= 0.0)
        throw std::invalid_argument("source height must be positive");
    if (mode == SceneMode::Vertical && source_height <= 0.5 * source_length)
        throw std::invalid_argument("vertical source must clear the ground (height > L/2)");
    if (rx_y < 0.0)
        throw std::invalid_argument("receive center must lie in the y'' >= 0 half-plane");
}

SceneLocal vertical_scene_to_local(const ScenePlacement& scene, double phi)
{
    if (scene.mode != SceneMode::Vertical)
        throw std::invalid_argument("scene is not in vertical mode");
    scene.validate();
    check_phi(phi);

    const double r1 = std::hypot(scene.rx_x, scene.rx_y);
    const double r = std::hypot(r1, scene.source_height);
    const double theta = arctan_star(r1 / scene.source_height);

    SceneLocal out{
        AssemblyParams{ArrayAssembly(scene.source_length, 0.5 * scene.rx_length, r, theta), Vec3::UnitX()},
        0.0, Vec3::Zero(), false};
    if (r1 > 0.0) {
        out.angle = std::acos(std::clamp(scene.rx_x / r1, -1.0, 1.0));
    } else {
        out.degenerate = true;
    }

    // Local frame: e_x along the ground line from the source foot to the
    // receiver, e_z = -z'' so that theta = arctan*(r1 / h), e_y = e_z x e_x.
    const double delta = phi - out.angle;
    out.params.orientation = Vec3(std::cos(delta), -std::sin(delta), 0.0);
    out.projections = Vec3(scene.rx_length * std::abs(std::cos(delta)),
                           scene.rx_length * std::abs(std::sin(delta)), 0.0);
    return out;
}

SceneLocal horizontal_scene_to_local(const ScenePlacement& scene, double phi)
{
    if (scene.mode != SceneMode::Horizontal)
        throw std::invalid_argument("scene is not in horizontal mode");
    scene.validate();
    check_phi(phi);

    const double h = scene.source_height;
    const double r2 = std::hypot(scene.rx_y, h);
    const double r = std::hypot(r2, scene.rx_x);
    const double theta = scene.rx_x == 0.0 ? 0.5 * kPi : arctan_star(r2 / scene.rx_x);
    const double psi = std::acos(std::clamp(scene.rx_y / r2, -1.0, 1.0));

    const double s = std::sin(phi);
    const Vec3 v(s * std::cos(psi), s * std::sin(psi), std::cos(phi));
    return SceneLocal{
        AssemblyParams{ArrayAssembly(scene.source_length, 0.5 * scene.rx_length, r, theta), v},
        psi,
        Vec3(scene.rx_length * s * std::cos(psi), scene.rx_length * s * std::sin(psi),
             scene.rx_length * std::abs(std::cos(phi))),
        false};
}

SceneLocal scene_to_local(const ScenePlacement& scene, double phi)
{
    return scene.mode == SceneMode::Vertical ? vertical_scene_to_local(scene, phi)
                                             : horizontal_scene_to_local(scene, phi);
}

WorldLayout world_layout(const ScenePlacement& scene, double phi)
{
    WorldLayout w;
    w.source_center = Vec3(0.0, 0.0, scene.source_height);
    w.source_axis = scene.mode == SceneMode::Vertical ? Vec3::UnitZ() : Vec3::UnitX();
    w.rx_center = Vec3(scene.rx_x, scene.rx_y, 0.0);
    w.rx_axis = Vec3(std::cos(phi), std::sin(phi), 0.0);
    return w;
}

} // namespace losdof

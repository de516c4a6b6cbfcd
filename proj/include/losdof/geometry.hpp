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

#ifndef LOSDOF_GEOMETRY_HPP
#define LOSDOF_GEOMETRY_HPP

#include <Eigen/Core>

#include <cmath>
#include <numbers>
#include <string>

namespace losdof {

using Vec3 = Eigen::Vector3d;

inline constexpr double kPi = std::numbers::pi;

// All lengths are in wavelengths, all angles in radians.

/// Source array length, distance from the source center to the receive
/// center, and polar angle of that connecting line measured from the source
/// axis. The receiving coordinate system has its origin at the receive
/// center, e_z parallel to the source, e_x in the plane containing the
/// receive center and the source, and e_y normal to that plane. In it the
/// source center sits at (-r sin(theta), 0, -r cos(theta)).
class LinkGeometry {
public:
    LinkGeometry(double source_length, double distance, double polar_angle);

    double source_length() const { return length_; }
    double distance() const { return distance_; }
    double polar_angle() const { return theta_; }

    /// Perpendicular distance from the receive center to the source axis.
    double lateral() const { return lateral_; }
    /// Signed axial offset r cos(theta).
    double axial() const { return axial_; }
    /// r cos(theta) + L/2 and r cos(theta) - L/2.
    double upper_offset() const { return axial_ + 0.5 * length_; }
    double lower_offset() const { return axial_ - 0.5 * length_; }
    /// |r cos(theta)| + L/2 and |r cos(theta)| - L/2; the latter is <= 0
    /// whenever the foot of the perpendicular lands on the source.
    double far_offset() const { return std::abs(axial_) + 0.5 * length_; }
    double near_offset() const { return std::abs(axial_) - 0.5 * length_; }
    bool perpendicular_hits_source() const { return std::abs(axial_) <= 0.5 * length_; }

    Vec3 source_center() const { return {-lateral_, 0.0, -axial_}; }
    static Vec3 source_axis() { return Vec3::UnitZ(); }

    /// Same link with theta mirrored to pi - theta: lateral offset kept,
    /// axial offset negated exactly.
    LinkGeometry mirrored() const;

private:
    double length_;
    double distance_;
    double theta_;
    double lateral_;
    double axial_;
};

/// Link geometry plus the receive array half-length rho.
class ArrayAssembly {
public:
    ArrayAssembly(const LinkGeometry& link, double half_length);
    ArrayAssembly(double source_length, double half_length, double distance, double polar_angle)
        : ArrayAssembly(LinkGeometry(source_length, distance, polar_angle), half_length) {}

    const LinkGeometry& link() const { return link_; }
    double half_length() const { return rho_; }

    ArrayAssembly with_distance(double distance) const;
    ArrayAssembly with_half_length(double half_length) const;

private:
    LinkGeometry link_;
    double rho_;
};

enum class Axis { X, Y, Z, Generic };

std::string to_string(Axis axis);
Axis parse_axis(const std::string& name);

/// Orientation of the receive array in the receiving coordinate system.
class ReceiveDirection {
public:
    static ReceiveDirection x() { return ReceiveDirection(Axis::X, Vec3::UnitX()); }
    static ReceiveDirection y() { return ReceiveDirection(Axis::Y, Vec3::UnitY()); }
    static ReceiveDirection z() { return ReceiveDirection(Axis::Z, Vec3::UnitZ()); }
    static ReceiveDirection along(Axis axis);
    /// Arbitrary direction; `unit` must have norm 1 within 1e-12.
    static ReceiveDirection generic(const Vec3& unit);

    Axis axis() const { return axis_; }
    const Vec3& unit() const { return unit_; }

private:
    ReceiveDirection(Axis axis, const Vec3& unit) : axis_(axis), unit_(unit) {}

    Axis axis_;
    Vec3 unit_;
};

/// Full parameter set of one source/receive assembly including orientation.
struct AssemblyParams {
    ArrayAssembly assembly;
    Vec3 orientation;
};

/// pi * [x < 0] + arctan(x); maps the real line onto [0, pi).
double arctan_star(double x);
/// Three-way sign.
int sign_star(double x);

enum class SceneMode { Vertical, Horizontal };

/// Elevated source array over a ground plane z'' = 0 with the receive array
/// lying on the ground. The source is parallel to z'' (vertical mode) or
/// to x'' (horizontal mode).
struct ScenePlacement {
    SceneMode mode = SceneMode::Vertical;
    double source_length = 400.0;
    double source_height = 400.0;
    double rx_x = 0.0;
    double rx_y = 0.0;
    double rx_length = 40.0;

    /// Throws std::invalid_argument on a non-physical placement.
    void validate() const;
};

/// Local description of a scene: assembly in receiving coordinates, the
/// scenario angle (gamma for vertical, psi for horizontal) and the projected
/// receive lengths along e_x, e_y, e_z.
struct SceneLocal {
    AssemblyParams params;
    double angle;
    Vec3 projections;
    /// Receiver directly below a vertical source: gamma is undefined and set to 0.
    bool degenerate = false;
};

SceneLocal vertical_scene_to_local(const ScenePlacement& scene, double phi);
SceneLocal horizontal_scene_to_local(const ScenePlacement& scene, double phi);
SceneLocal scene_to_local(const ScenePlacement& scene, double phi);

/// World-frame layout of a scene, independent of the local transforms.
struct WorldLayout {
    Vec3 source_center;
    Vec3 source_axis;
    Vec3 rx_center;
    Vec3 rx_axis;
};

/// Does not enforce y'' >= 0, so mirrored placements can be evaluated.
WorldLayout world_layout(const ScenePlacement& scene, double phi);

} // namespace losdof

#endif

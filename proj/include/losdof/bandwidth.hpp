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

#ifndef LOSDOF_BANDWIDTH_HPP
#define LOSDOF_BANDWIDTH_HPP

#include "losdof/geometry.hpp"

namespace losdof {

// Local spatial bandwidth: the spread max - min of <r_hat, v_hat> over all
// source points, seen at a receive point moving along v_hat. Expressed in
// cycles per wavelength, so it always lies in [0, 2].

/// t / sqrt(t^2 + c^2): cosine of the angle between the axis and the vector
/// (t, c). Throws std::domain_error when t = c = 0.
double direction_cosine(double t, double c);

/// Bandwidth at z on a receive array along e_z.
double bandwidth_z(double z, const LinkGeometry& link);
/// Bandwidth at x on a receive array along e_x; requires x + d >= 0.
double bandwidth_x(double x, const LinkGeometry& link);
/// Bandwidth at y on a receive array along e_y; even in y, zero at y = 0.
double bandwidth_y(double y, const LinkGeometry& link);

/// Bandwidth at `point` moving along `direction` for a line source given by
/// its center, unit axis and length, all in one Cartesian frame. The
/// extremes of the direction cosine over the source are located from the
/// segment endpoints plus every stationary point bracketed by a dense scan
/// (1024 samples) and refined by bisection. Throws std::domain_error when
/// the point lies on the source.
double bandwidth_at_point(const Vec3& point, const Vec3& direction, const Vec3& source_center,
                          const Vec3& source_axis, double source_length);

/// bandwidth_at_point for the receive point l * v_hat in receiving coordinates.
double bandwidth_generic(double l, const Vec3& v_hat, const LinkGeometry& link);

/// Dispatches to the closed form for X/Y/Z and to bandwidth_generic otherwise.
double bandwidth(double l, const ReceiveDirection& dir, const LinkGeometry& link);

/// Largest bandwidth seen anywhere on an unbounded e_z line, L / sqrt(L^2/4 + d^2).
double peak_bandwidth_z(const LinkGeometry& link);

/// Stationary point of the e_x bandwidth when the perpendicular foot misses
/// the source: sqrt((A^(2/3) - B^(2/3)) / (B^(-4/3) - A^(-4/3))) - d, with
/// A > B > 0 the far and near axial offsets.
double peak_offset_x(double far_offset, double near_offset, double lateral);

/// Location y* > 0 of the single interior maximum of w_y on [0, inf).
double peak_offset_y(const LinkGeometry& link);

struct Interval {
    double lo;
    double hi;
    double length() const { return hi - lo; }
    bool contains(double v) const { return v >= lo && v <= hi; }
};

struct BandwidthSummary {
    double w_max;
    double w_min;
    double w_range;
    double argmax_location;
    Interval effective_interval;
};

/// Effective integration interval: [-rho, rho] for Z and Generic,
/// [-min(d, rho), rho] for X, [0, rho] for Y.
Interval effective_interval(const ArrayAssembly& assembly, Axis axis);

BandwidthSummary extrema_z(const ArrayAssembly& assembly);
BandwidthSummary extrema_x(const ArrayAssembly& assembly);
BandwidthSummary extrema_y(const ArrayAssembly& assembly);
/// Numerical extrema of bandwidth_generic over [-rho, rho] (scan + golden-section refinement).
BandwidthSummary extrema_generic(const ArrayAssembly& assembly, const Vec3& v_hat);
BandwidthSummary bandwidth_extrema(const ArrayAssembly& assembly, const ReceiveDirection& dir);

/// True when r is below 10 wavelengths, where the far-field model loses accuracy.
bool far_field_warning(const LinkGeometry& link);

} // namespace losdof

#endif

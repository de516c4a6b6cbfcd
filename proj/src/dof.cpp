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

#include <algorithm>
#include <stdexcept>

namespace losdof {

namespace {

double interval_length(const ArrayAssembly& assembly, const ReceiveDirection& dir, IntervalMode mode)
{
    if (mode == IntervalMode::FullAperture && dir.axis() == Axis::X)
        return 2.0 * assembly.half_length();
    return effective_interval(assembly, dir.axis()).length();
}

// A collinear e_z array that reaches into the source has no meaningful bandwidth.
void require_disjoint(const ArrayAssembly& assembly, const ReceiveDirection& dir)
{
    const LinkGeometry& link = assembly.link();
    if (dir.axis() == Axis::Z && link.lateral() == 0.0 && link.near_offset() < assembly.half_length())
        throw std::invalid_argument("receive array overlaps the source array");
}

} // namespace

QuadratureResult k_integral(const ArrayAssembly& assembly, const ReceiveDirection& dir, double abs_tol)
{
    require_disjoint(assembly, dir);
    const Interval iv = effective_interval(assembly, dir.axis());
    const LinkGeometry& link = assembly.link();
    // Panels start split at the bandwidth peak, where the integrand is sharpest.
    switch (dir.axis()) {
    case Axis::X: {
        const double peak[] = {extrema_x(assembly).argmax_location};
        return integrate([&](double x) { return bandwidth_x(x, link); }, iv.lo, iv.hi, abs_tol, peak);
    }
    case Axis::Y: {
        const double peak[] = {extrema_y(assembly).argmax_location};
        return integrate([&](double y) { return bandwidth_y(y, link); }, iv.lo, iv.hi, abs_tol, peak);
    }
    case Axis::Z: {
        const double peak[] = {extrema_z(assembly).argmax_location};
        return integrate([&](double z) { return bandwidth_z(z, link); }, iv.lo, iv.hi, abs_tol, peak);
    }
    case Axis::Generic: break;
    }
    const Vec3 v = dir.unit();
    return integrate([&](double l) { return bandwidth_generic(l, v, link); }, iv.lo, iv.hi, abs_tol);
}

KBounds k_bounds(const ArrayAssembly& assembly, const ReceiveDirection& dir, IntervalMode mode)
{
    const BandwidthSummary s = bandwidth_extrema(assembly, dir);
    const double len = interval_length(assembly, dir, mode);
    return {s.w_min * len, s.w_max * len};
}

double k_linear(const ArrayAssembly& assembly, const ReceiveDirection& dir, IntervalMode mode)
{
    const BandwidthSummary s = bandwidth_extrema(assembly, dir);
    return 0.5 * (s.w_min + s.w_max) * interval_length(assembly, dir, mode);
}

KNumberReport k_number(const ArrayAssembly& assembly, const ReceiveDirection& dir, IntervalMode mode,
                       double abs_tol)
{
    const QuadratureResult q = k_integral(assembly, dir, abs_tol);
    const BandwidthSummary s = bandwidth_extrema(assembly, dir);
    const double len = interval_length(assembly, dir, mode);

    KNumberReport report{q.value,
                         s.w_max * len,
                         s.w_min * len,
                         0.5 * (s.w_min + s.w_max) * len,
                         dir,
                         q.abs_err,
                         {}};
    if (far_field_warning(assembly.link()))
        report.warnings.emplace_back("far-field: distance below 10 wavelengths");
    if (assembly.link().lateral() < assembly.half_length() && dir.axis() == Axis::X)
        report.warnings.emplace_back("effective e_x interval truncated at the source axis");
    return report;
}

double k_parallel(double source_length, double receive_length, double separation)
{
    if (!(separation > 0.0))
        throw std::invalid_argument("separation must be positive");
    return source_length * receive_length / separation;
}

bool k_parallel_warning(double source_length, double receive_length, double separation)
{
    return separation < 10.0 * std::max(source_length, receive_length);
}

} // namespace losdof

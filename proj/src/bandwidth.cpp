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

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace losdof {

namespace {

constexpr int kSourceScanSamples = 1024;
constexpr int kGenericScanSamples = 257;

double golden_max(const auto& fn, double lo, double hi)
{
    const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = lo, b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = fn(c), fd = fn(d);
    for (int it = 0; it < 200 && (b - a) > 1e-11 * std::max(1.0, std::abs(a) + std::abs(b)); ++it) {
        if (fc >= fd) {
            b = d; d = c; fd = fc;
            c = b - inv_phi * (b - a);
            fc = fn(c);
        } else {
            a = c; c = d; fc = fd;
            d = a + inv_phi * (b - a);
            fd = fn(d);
        }
    }
    return fc >= fd ? c : d;
}

} // namespace

double direction_cosine(double t, double c)
{
    if (t == 0.0 && c == 0.0)
        throw std::domain_error("direction cosine is indeterminate at (0, 0)");
    return t / std::sqrt(t * t + c * c);
}

double bandwidth_z(double z, const LinkGeometry& link)
{
    const double d = link.lateral();
    return direction_cosine(z + link.upper_offset(), d) - direction_cosine(z + link.lower_offset(), d);
}

double bandwidth_x(double x, const LinkGeometry& link)
{
    const double u = x + link.lateral();
    if (u < 0.0)
        throw std::domain_error("e_x coordinate lies on the mirrored side of the source axis");
    const double far = link.far_offset();
    if (link.perpendicular_hits_source())
        return 1.0 - direction_cosine(u, far);
    return direction_cosine(u, link.near_offset()) - direction_cosine(u, far);
}

double bandwidth_y(double y, const LinkGeometry& link)
{
    if (y == 0.0)
        return 0.0;
    const double t = std::abs(y);
    const double d = link.lateral();
    const double far = std::hypot(d, link.far_offset());
    const double near = link.perpendicular_hits_source() ? d : std::hypot(d, link.near_offset());
    return direction_cosine(t, near) - direction_cosine(t, far);
}

double bandwidth_at_point(const Vec3& point, const Vec3& direction, const Vec3& source_center,
                          const Vec3& source_axis, double source_length)
{
    const Vec3 e = source_axis.normalized();
    const Vec3 q = point - source_center;
    const double half = 0.5 * source_length;

    const double qe = q.dot(e);
    const double qv = q.dot(direction);
    const double ev = e.dot(direction);
    const double qq = q.squaredNorm();
    const double perp = (q - qe * e).norm();
    if (perp <= 1e-12 * std::max(1.0, std::sqrt(qq)) && std::abs(qe) <= half)
        throw std::domain_error("receive point lies on the source array");

    // Source point s(t) = center + t e; R(t) = q - t e.
    // g(t) = <R, v> / |R|,  g'(t) = (<R, v> <R, e> - <e, v> |R|^2) / |R|^3.
    struct Sample {
        double g;
        double dg;
    };
    const auto eval = [&](double t) {
        const double rv = qv - t * ev;
        const double re = qe - t;
        const double n2 = qq - 2.0 * t * qe + t * t;
        const double n = std::sqrt(n2);
        return Sample{rv / n, (rv * re - ev * n2) / (n2 * n)};
    };

    const double step = source_length / (kSourceScanSamples - 1);
    Sample prev = eval(-half);
    double gmax = prev.g, gmin = prev.g;
    double t_prev = -half;
    for (int k = 1; k < kSourceScanSamples; ++k) {
        const double t = k + 1 == kSourceScanSamples ? half : -half + k * step;
        const Sample cur = eval(t);
        gmax = std::max(gmax, cur.g);
        gmin = std::min(gmin, cur.g);
        if ((prev.dg < 0.0 && cur.dg > 0.0) || (prev.dg > 0.0 && cur.dg < 0.0)) {
            double lo = t_prev, hi = t;
            const bool rising_at_lo = prev.dg > 0.0;
            while (hi - lo > 1e-12) {
                const double mid = 0.5 * (lo + hi);
                if (mid <= lo || mid >= hi)
                    break;
                const double dm = eval(mid).dg;
                if ((dm > 0.0) == rising_at_lo)
                    lo = mid;
                else
                    hi = mid;
            }
            const double gs = eval(0.5 * (lo + hi)).g;
            gmax = std::max(gmax, gs);
            gmin = std::min(gmin, gs);
        }
        prev = cur;
        t_prev = t;
    }
    return std::max(0.0, gmax - gmin);
}

double bandwidth_generic(double l, const Vec3& v_hat, const LinkGeometry& link)
{
    return bandwidth_at_point(l * v_hat, v_hat, link.source_center(), LinkGeometry::source_axis(),
                              link.source_length());
}

double bandwidth(double l, const ReceiveDirection& dir, const LinkGeometry& link)
{
    switch (dir.axis()) {
    case Axis::X: return bandwidth_x(l, link);
    case Axis::Y: return bandwidth_y(l, link);
    case Axis::Z: return bandwidth_z(l, link);
    case Axis::Generic: break;
    }
    return bandwidth_generic(l, dir.unit(), link);
}

double peak_bandwidth_z(const LinkGeometry& link)
{
    const double half = 0.5 * link.source_length();
    const double d = link.lateral();
    return link.source_length() / std::sqrt(half * half + d * d);
}

double peak_offset_x(double far_offset, double near_offset, double lateral)
{
    if (!(far_offset > near_offset && near_offset > 0.0))
        throw std::domain_error("peak offset needs far > near > 0");
    const double ca = std::cbrt(far_offset), cb = std::cbrt(near_offset);
    const double num = ca * ca - cb * cb;
    const double den = 1.0 / (cb * cb * cb * cb) - 1.0 / (ca * ca * ca * ca);
    return std::sqrt(num / den) - lateral;
}

double peak_offset_y(const LinkGeometry& link)
{
    const double d = link.lateral();
    const double near = link.perpendicular_hits_source() ? d : std::hypot(d, link.near_offset());
    const double far = std::hypot(d, link.far_offset());
    if (!(near > 0.0))
        throw std::domain_error("receive center lies on the source array");
    // Root of f'(y; near) = f'(y; far) with f'(y; c) = c^2 / (y^2 + c^2)^(3/2).
    const double cn = std::cbrt(near), cf = std::cbrt(far);
    return cn * cn * cf * cf / std::sqrt(cn * cn + cf * cf);
}

Interval effective_interval(const ArrayAssembly& assembly, Axis axis)
{
    const double rho = assembly.half_length();
    switch (axis) {
    case Axis::X: return {-std::min(assembly.link().lateral(), rho), rho};
    case Axis::Y: return {0.0, rho};
    case Axis::Z:
    case Axis::Generic: break;
    }
    return {-rho, rho};
}

BandwidthSummary extrema_z(const ArrayAssembly& assembly)
{
    const LinkGeometry& link = assembly.link();
    const double rho = assembly.half_length();
    const double d = link.lateral();
    const double far = link.far_offset(), near = link.near_offset();

    BandwidthSummary s{};
    s.effective_interval = {-rho, rho};
    if (std::abs(link.axial()) <= rho)
        s.w_max = 2.0 * direction_cosine(0.5 * link.source_length(), d);
    else
        s.w_max = direction_cosine(far - rho, d) - direction_cosine(near - rho, d);
    s.w_min = direction_cosine(far + rho, d) - direction_cosine(near + rho, d);
    s.w_range = s.w_max - s.w_min;
    s.argmax_location = std::clamp(-link.axial(), -rho, rho);
    return s;
}

BandwidthSummary extrema_x(const ArrayAssembly& assembly)
{
    const LinkGeometry& link = assembly.link();
    const double rho = assembly.half_length();
    const double d = link.lateral();
    const double m = std::min(d, rho);
    const double u_lo = std::max(d - rho, 0.0);
    const double u_hi = d + rho;
    const double far = link.far_offset();

    BandwidthSummary s{};
    s.effective_interval = {-m, rho};
    if (link.perpendicular_hits_source()) {
        s.w_max = 1.0 - direction_cosine(u_lo, far);
        s.w_min = 1.0 - direction_cosine(u_hi, far);
        s.argmax_location = -m;
    } else {
        const double near = link.near_offset();
        const auto w = [&](double u) { return direction_cosine(u, near) - direction_cosine(u, far); };
        const double x0 = peak_offset_x(far, near, d);
        if (x0 < -m) {
            s.w_max = w(u_lo);
            s.w_min = w(u_hi);
            s.argmax_location = -m;
        } else if (x0 <= rho) {
            s.w_max = w(d + x0);
            s.w_min = std::min(w(u_lo), w(u_hi));
            s.argmax_location = x0;
        } else {
            s.w_max = w(u_hi);
            s.w_min = w(u_lo);
            s.argmax_location = rho;
        }
    }
    s.w_range = s.w_max - s.w_min;
    return s;
}

BandwidthSummary extrema_y(const ArrayAssembly& assembly)
{
    const double rho = assembly.half_length();
    BandwidthSummary s{};
    s.effective_interval = {0.0, rho};
    // w_y rises from 0 to a single peak and then decays, so the maximum on
    // [0, rho] is at rho unless the peak lies inside the interval.
    const double peak = peak_offset_y(assembly.link());
    s.argmax_location = std::min(rho, peak);
    s.w_max = bandwidth_y(s.argmax_location, assembly.link());
    s.w_min = 0.0;
    s.w_range = s.w_max;
    return s;
}

BandwidthSummary extrema_generic(const ArrayAssembly& assembly, const Vec3& v_hat)
{
    const double rho = assembly.half_length();
    const LinkGeometry& link = assembly.link();
    const auto w = [&](double l) { return bandwidth_generic(l, v_hat, link); };

    const double step = 2.0 * rho / (kGenericScanSamples - 1);
    const auto at = [&](int i) { return i + 1 == kGenericScanSamples ? rho : -rho + i * step; };
    int imax = 0, imin = 0;
    double vmax = w(at(0)), vmin = vmax;
    for (int i = 1; i < kGenericScanSamples; ++i) {
        const double v = w(at(i));
        if (v > vmax) { vmax = v; imax = i; }
        if (v < vmin) { vmin = v; imin = i; }
    }
    const auto bracket = [&](int i) {
        return Interval{at(std::max(i - 1, 0)), at(std::min(i + 1, kGenericScanSamples - 1))};
    };

    BandwidthSummary s{};
    s.effective_interval = {-rho, rho};
    s.argmax_location = at(imax);
    const Interval bmax = bracket(imax);
    const double lmax = golden_max(w, bmax.lo, bmax.hi);
    if (const double v = w(lmax); v > vmax) {
        vmax = v;
        s.argmax_location = lmax;
    }
    const Interval bmin = bracket(imin);
    const double lmin = golden_max([&](double l) { return -w(l); }, bmin.lo, bmin.hi);
    vmin = std::min(vmin, w(lmin));

    s.w_max = vmax;
    s.w_min = vmin;
    s.w_range = vmax - vmin;
    return s;
}

BandwidthSummary bandwidth_extrema(const ArrayAssembly& assembly, const ReceiveDirection& dir)
{
    switch (dir.axis()) {
    case Axis::X: return extrema_x(assembly);
    case Axis::Y: return extrema_y(assembly);
    case Axis::Z: return extrema_z(assembly);
    case Axis::Generic: break;
    }
    return extrema_generic(assembly, dir.unit());
}

bool far_field_warning(const LinkGeometry& link)
{
    return link.distance() < 10.0;
}

} // namespace losdof

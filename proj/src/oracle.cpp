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

#include "losdof/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace losdof::oracle {

namespace {

double golden(const std::function<double(double)>& fn, double lo, double hi, double sign)
{
    const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = lo, b = hi;
    double c = b - inv_phi * (b - a), d = a + inv_phi * (b - a);
    double fc = sign * fn(c), fd = sign * fn(d);
    while (b - a > 1e-13 * std::max(1.0, std::abs(a) + std::abs(b))) {
        if (fc >= fd) {
            b = d; d = c; fd = fc;
            c = b - inv_phi * (b - a);
            fc = sign * fn(c);
        } else {
            a = c; c = d; fc = fd;
            d = a + inv_phi * (b - a);
            fd = sign * fn(d);
        }
    }
    return sign * std::max(fc, fd);
}

} // namespace

double bandwidth_brute_force(const Vec3& point, const Vec3& v_hat, const Vec3& source_center,
                             const Vec3& source_axis, double source_length, int samples)
{
    if (samples < 2)
        throw std::invalid_argument("need at least two source samples");
    const Vec3 e = source_axis.normalized();
    double gmax = -2.0, gmin = 2.0;
    for (int k = 0; k < samples; ++k) {
        const double t = source_length * (static_cast<double>(k) / (samples - 1) - 0.5);
        const Vec3 rvec = point - (source_center + t * e);
        const double n = rvec.norm();
        if (n == 0.0)
            throw std::domain_error("receive point lies on the source array");
        const double g = rvec.dot(v_hat) / n;
        gmax = std::max(gmax, g);
        gmin = std::min(gmin, g);
    }
    return gmax - gmin;
}

ScanExtrema dense_scan(const std::function<double(double)>& fn, double lo, double hi, int samples)
{
    if (samples < 3 || !(hi >= lo))
        throw std::invalid_argument("dense scan needs >= 3 samples over an ordered interval");
    const auto at = [&](int i) { return i + 1 == samples ? hi : lo + (hi - lo) * i / (samples - 1); };
    int imax = 0, imin = 0;
    double vmax = fn(lo), vmin = vmax;
    for (int i = 1; i < samples; ++i) {
        const double v = fn(at(i));
        if (v > vmax) { vmax = v; imax = i; }
        if (v < vmin) { vmin = v; imin = i; }
    }
    if (hi > lo) {
        const auto lo_of = [&](int i) { return at(std::max(i - 1, 0)); };
        const auto hi_of = [&](int i) { return at(std::min(i + 1, samples - 1)); };
        vmax = std::max(vmax, golden(fn, lo_of(imax), hi_of(imax), 1.0));
        vmin = std::min(vmin, golden(fn, lo_of(imin), hi_of(imin), -1.0));
    }
    return {vmax, vmin};
}

ScanExtrema axis_extrema(const ArrayAssembly& assembly, Axis axis, int samples)
{
    const LinkGeometry& link = assembly.link();
    const double rho = assembly.half_length();
    switch (axis) {
    case Axis::Z:
        return dense_scan([&](double z) { return bandwidth_z(z, link); }, -rho, rho, samples);
    case Axis::X:
        return dense_scan([&](double x) { return bandwidth_x(x, link); }, -std::min(link.lateral(), rho), rho,
                          samples);
    case Axis::Y:
        return dense_scan([&](double y) { return bandwidth_y(y, link); }, 0.0, rho, samples);
    case Axis::Generic: break;
    }
    throw std::invalid_argument("axis_extrema handles x, y and z");
}

double trapezoid(const std::function<double(double)>& fn, double lo, double hi, long panels)
{
    if (panels < 1)
        throw std::invalid_argument("need at least one panel");
    const double h = (hi - lo) / static_cast<double>(panels);
    double sum = 0.5 * (fn(lo) + fn(hi));
    for (long i = 1; i < panels; ++i)
        sum += fn(lo + h * static_cast<double>(i));
    return sum * h;
}

double world_scene_k(const ScenePlacement& scene, double phi, long panels)
{
    const WorldLayout w = world_layout(scene, phi);
    const double rho = 0.5 * scene.rx_length;
    const auto fn = [&](double l) {
        return bandwidth_at_point(w.rx_center + l * w.rx_axis, w.rx_axis, w.source_center, w.source_axis,
                                  scene.source_length);
    };
    return trapezoid(fn, -rho, rho, panels);
}

} // namespace losdof::oracle

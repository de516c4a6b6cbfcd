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

#ifndef LOSDOF_REGIONS_HPP
#define LOSDOF_REGIONS_HPP

#include "losdof/geometry.hpp"

#include <optional>
#include <span>
#include <vector>

namespace losdof {

// Spatial multiplexing region (SMR): positions where the K number reaches K0.
// Its non-constant-bandwidth part (NCSMR) is where the constant-bandwidth
// upper bound overshoots the K number by more than dK. Boundaries are
// distance thresholds r(theta) in wavelengths.

struct DistanceThreshold {
    /// L sqrt(4 rho^2 - 1/4); absent when rho <= 1/4.
    std::optional<double> exact;
    /// 2 rho L.
    double approx;
};

DistanceThreshold r0_threshold(double source_length, double half_length);

/// Boresight distance at which a parallel receive array reaches K0:
/// L sqrt(4 rho^2 / K0^2 - 1/4). Empty when K0 is unreachable.
std::optional<double> rz_boresight(double source_length, double half_length, double k0);

/// L^2.
double fraunhofer_distance(double source_length);

struct RootScan {
    double r_min = 1.0;
    /// <= 0 selects 4 max(R0, 2 rho L / K) automatically.
    double r_max = 0.0;
    int points = 2048;
};

/// Largest r with w_max(theta, r) = K0 / (2 rho) for dir in {X, Z}.
std::optional<double> smr_boundary(Axis dir, double theta, double source_length, double half_length,
                                   double k0, const RootScan& scan = {});

/// Largest r with w_y_max(theta, r) = 2 K0 / rho.
std::optional<double> smr_boundary_y(double theta, double source_length, double half_length, double k0,
                                     const RootScan& scan = {});

/// All r in the scan window with w_range(theta, r) = dK / rho for dir in {X, Z}, ascending.
std::vector<double> ncsmr_boundary(Axis dir, double theta, double source_length, double half_length,
                                   double dk, const RootScan& scan = {});

/// lhs - rhs of the defining boundary equations, for residual checks.
double smr_residual(Axis dir, double theta, double source_length, double half_length, double k0, double r);
double ncsmr_residual(Axis dir, double theta, double source_length, double half_length, double dk, double r);

enum class RegionKind { SMR, NCSMR };

struct RegionSample {
    double theta;
    std::vector<double> radii;
};

struct RegionCurve {
    Axis direction;
    RegionKind kind;
    double threshold;
    std::vector<RegionSample> samples;
};

/// Applies the per-angle solver across a sorted theta grid.
RegionCurve boundary_curve(Axis dir, RegionKind kind, std::span<const double> thetas,
                           double source_length, double half_length, double threshold,
                           unsigned threads = 1, const RootScan& scan = {});

} // namespace losdof

#endif

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

#ifndef LOSDOF_ORACLE_HPP
#define LOSDOF_ORACLE_HPP

#include "losdof/bandwidth.hpp"
#include "losdof/geometry.hpp"

#include <functional>

namespace losdof::oracle {

// Slow reference implementations used to cross-check the closed forms.
// None of them shares code with the production paths beyond the geometry
// types and the closed-form pointwise bandwidths being checked.

/// Spread of <unit(p - s), v> over `samples` equispaced source points,
/// endpoints included, with no stationary-point search.
double bandwidth_brute_force(const Vec3& point, const Vec3& v_hat, const Vec3& source_center,
                             const Vec3& source_axis, double source_length, int samples = 100001);

/// Extrema of fn over [lo, hi] from an equispaced scan of `samples` points,
/// refined by golden-section search around the best and worst samples.
struct ScanExtrema {
    double max;
    double min;
};
ScanExtrema dense_scan(const std::function<double(double)>& fn, double lo, double hi, int samples = 10000);

/// Dense-scan extrema of the pointwise closed form for `axis` over its
/// effective interval.
ScanExtrema axis_extrema(const ArrayAssembly& assembly, Axis axis, int samples = 10000);

/// Composite trapezoid rule with `panels` equal panels.
double trapezoid(const std::function<double(double)>& fn, double lo, double hi, long panels);

/// K number of the scene receiver computed in the ground frame: the receive
/// array and the source are placed by world_layout and the bandwidth is
/// evaluated point by point without the local-frame transform.
double world_scene_k(const ScenePlacement& scene, double phi, long panels = 2000);

} // namespace losdof::oracle

#endif

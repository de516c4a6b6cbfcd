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

#ifndef LOSDOF_DOF_HPP
#define LOSDOF_DOF_HPP

#include "losdof/bandwidth.hpp"
#include "losdof/geometry.hpp"
#include "losdof/quadrature.hpp"

#include <string>
#include <vector>

namespace losdof {

/// Interval length used by the constant-bandwidth bounds and the linear
/// approximation. `Exact` uses the effective interval; `FullAperture` uses
/// 2 rho for e_x regardless of d (identical to `Exact` for other directions).
enum class IntervalMode { Exact, FullAperture };

struct KNumberReport {
    double k_exact;
    double k_upper;
    double k_lower;
    double k_linear;
    ReceiveDirection direction;
    double quadrature_abs_err;
    std::vector<std::string> warnings;
};

struct KBounds {
    double lower;
    double upper;
};

inline constexpr double kDefaultQuadratureTolerance = 1e-8;

/// Integral of the local bandwidth over the direction's effective interval.
/// Throws QuadratureError if the adaptive rule fails to converge.
QuadratureResult k_integral(const ArrayAssembly& assembly, const ReceiveDirection& dir,
                            double abs_tol = kDefaultQuadratureTolerance);

KNumberReport k_number(const ArrayAssembly& assembly, const ReceiveDirection& dir,
                       IntervalMode mode = IntervalMode::Exact,
                       double abs_tol = kDefaultQuadratureTolerance);

/// w_min |I| and w_max |I|.
KBounds k_bounds(const ArrayAssembly& assembly, const ReceiveDirection& dir,
                 IntervalMode mode = IntervalMode::Exact);

/// (w_min + w_max) |I| / 2.
double k_linear(const ArrayAssembly& assembly, const ReceiveDirection& dir,
                IntervalMode mode = IntervalMode::Exact);

/// Classic parallel-array count L_s L_r / D (all in wavelengths).
double k_parallel(double source_length, double receive_length, double separation);

/// True when D < 10 max(L_s, L_r), outside the far-separation regime of k_parallel.
bool k_parallel_warning(double source_length, double receive_length, double separation);

} // namespace losdof

#endif

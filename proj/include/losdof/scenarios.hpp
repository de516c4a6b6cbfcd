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

#ifndef LOSDOF_SCENARIOS_HPP
#define LOSDOF_SCENARIOS_HPP

#include "losdof/dof.hpp"
#include "losdof/geometry.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace losdof {

struct GridAxis {
    double min;
    double max;
    int steps;

    double value(int i) const;
};

/// Ground-plane grid over x'' and y'' >= 0, in wavelengths.
struct GroundGrid {
    GridAxis x;
    GridAxis y;

    void validate() const;
    std::size_t size() const { return static_cast<std::size_t>(x.steps) * static_cast<std::size_t>(y.steps); }
};

struct OrientationPolicy {
    enum class Kind { Fixed, Gamma, HControl };
    Kind kind = Kind::Fixed;
    /// Used by Kind::Fixed only.
    double phi = 0.0;

    static OrientationPolicy fixed(double phi) { return {Kind::Fixed, phi}; }
    static OrientationPolicy gamma() { return {Kind::Gamma, 0.0}; }
    static OrientationPolicy h_control() { return {Kind::HControl, 0.0}; }
};

std::string to_string(const OrientationPolicy& policy);

struct PolicyAngle {
    double phi;
    /// Receiver at the ground origin: every phi is equivalent, phi = 0 is returned.
    bool degenerate = false;
};

/// arccos(x / sqrt(x^2 + y^2)), the ground bearing of the receiver.
PolicyAngle phi_policy_gamma(double x, double y);

/// Orientation that balances the e_x and e_z bandwidths at the array center
/// in the horizontal scene. Throws std::domain_error when w_z(0) vanishes.
double phi_policy_h(const ScenePlacement& scene);

/// Resolves the policy to an angle for the receiver position in `scene`.
PolicyAngle resolve_phi(const ScenePlacement& scene, const OrientationPolicy& policy);

/// Generic-direction K number over [-rho, rho] at the receiver of `scene`.
/// Returns NaN when the receive center is within one wavelength of the
/// source center.
double scenario_k(const ScenePlacement& scene, double phi, double abs_tol = kDefaultQuadratureTolerance);

struct KMap {
    ScenePlacement scene;
    GroundGrid grid;
    OrientationPolicy policy;
    std::optional<double> cutoff;
    /// values[iy * x.steps + ix]; NaN marks a missing point.
    std::vector<double> values;

    double at(int ix, int iy) const { return values[static_cast<std::size_t>(iy) * grid.x.steps + ix]; }
    std::size_t missing() const;
};

/// `scene` supplies everything but the receiver position, which sweeps the grid.
KMap k_map(const ScenePlacement& scene, const OrientationPolicy& policy, const GroundGrid& grid,
           unsigned threads = 1, double abs_tol = kDefaultQuadratureTolerance);

/// Header x,y,k; rows follow the grid index with x varying fastest.
void write_kmap_csv(std::ostream& out, const KMap& map);

/// JSON object with scene, policy, grid and cutoff metadata plus the value matrix.
void write_kmap_json(std::ostream& out, const KMap& map);

std::string to_string(SceneMode mode);
SceneMode parse_scene_mode(const std::string& name);

} // namespace losdof

#endif

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

#include "losdof/scenarios.hpp"

#include "losdof/bandwidth.hpp"
#include "losdof/io.hpp"
#include "losdof/parallel.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace losdof {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

nlohmann::json nullable(double v)
{
    return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr);
}

nlohmann::json axis_json(const GridAxis& a)
{
    return {{"min", a.min}, {"max", a.max}, {"steps", a.steps}};
}

} // namespace

double GridAxis::value(int i) const
{
    if (steps < 2)
        return min;
    if (i == steps - 1)
        return max;
    return min + (max - min) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

void GroundGrid::validate() const
{
    for (const GridAxis* a : {&x, &y}) {
        if (!std::isfinite(a->min) || !std::isfinite(a->max) || !(a->max > a->min))
            throw std::invalid_argument("grid range must be finite with max > min");
        if (a->steps < 2)
            throw std::invalid_argument("grid needs at least 2 steps per axis");
    }
    if (y.min < 0.0)
        throw std::invalid_argument("grid must lie in the y'' >= 0 half-plane");
}

std::string to_string(const OrientationPolicy& policy)
{
    switch (policy.kind) {
    case OrientationPolicy::Kind::Fixed: return "fixed";
    case OrientationPolicy::Kind::Gamma: return "gamma";
    case OrientationPolicy::Kind::HControl: return "h-control";
    }
    return "unknown";
}

std::string to_string(SceneMode mode)
{
    return mode == SceneMode::Vertical ? "vertical" : "horizontal";
}

SceneMode parse_scene_mode(const std::string& name)
{
    if (name == "vertical")
        return SceneMode::Vertical;
    if (name == "horizontal")
        return SceneMode::Horizontal;
    throw std::invalid_argument("unknown scene mode '" + name + "' (expected vertical or horizontal)");
}

PolicyAngle phi_policy_gamma(double x, double y)
{
    if (!std::isfinite(x) || !std::isfinite(y))
        throw std::invalid_argument("ground point must be finite");
    const double r1 = std::hypot(x, y);
    if (r1 == 0.0)
        return {0.0, true};
    return {std::acos(std::clamp(x / r1, -1.0, 1.0)), false};
}

double phi_policy_h(const ScenePlacement& scene)
{
    const SceneLocal local = horizontal_scene_to_local(scene, 0.0);
    const LinkGeometry& link = local.params.assembly.link();
    const double wz = bandwidth_z(0.0, link);
    if (!(wz > 0.0))
        throw std::domain_error("e_z bandwidth vanishes at the array center");
    const double wx = bandwidth_x(0.0, link);
    return arctan_star(sign_star(-scene.rx_x) * std::cos(local.angle) * wx / wz);
}

PolicyAngle resolve_phi(const ScenePlacement& scene, const OrientationPolicy& policy)
{
    switch (policy.kind) {
    case OrientationPolicy::Kind::Fixed: return {policy.phi, false};
    case OrientationPolicy::Kind::Gamma: return phi_policy_gamma(scene.rx_x, scene.rx_y);
    case OrientationPolicy::Kind::HControl:
        if (scene.mode != SceneMode::Horizontal)
            throw std::invalid_argument("h-control orientation applies to the horizontal scene");
        return {phi_policy_h(scene), false};
    }
    throw std::invalid_argument("unknown orientation policy");
}

double scenario_k(const ScenePlacement& scene, double phi, double abs_tol)
{
    const SceneLocal local = scene_to_local(scene, phi);
    const ArrayAssembly& assembly = local.params.assembly;
    if (assembly.link().distance() < 1.0)
        return kNaN;
    const ReceiveDirection dir = ReceiveDirection::generic(local.params.orientation.normalized());
    return k_integral(assembly, dir, abs_tol).value;
}

std::size_t KMap::missing() const
{
    return static_cast<std::size_t>(std::count_if(values.begin(), values.end(), [](double v) { return std::isnan(v); }));
}

KMap k_map(const ScenePlacement& scene, const OrientationPolicy& policy, const GroundGrid& grid, unsigned threads,
           double abs_tol)
{
    grid.validate();
    ScenePlacement probe = scene;
    probe.rx_x = grid.x.value(0);
    probe.rx_y = grid.y.value(0);
    probe.validate();
    if (policy.kind == OrientationPolicy::Kind::HControl && scene.mode != SceneMode::Horizontal)
        throw std::invalid_argument("h-control orientation applies to the horizontal scene");
    if (policy.kind == OrientationPolicy::Kind::Fixed && !(policy.phi >= 0.0 && policy.phi <= kPi))
        throw std::invalid_argument("fixed orientation angle must lie in [0, pi]");

    KMap map{scene, grid, policy, std::nullopt, std::vector<double>(grid.size(), kNaN)};
    const auto nx = static_cast<std::size_t>(grid.x.steps);
    parallel_for(grid.size(), threads, [&](std::size_t idx) {
        ScenePlacement at = scene;
        at.rx_x = grid.x.value(static_cast<int>(idx % nx));
        at.rx_y = grid.y.value(static_cast<int>(idx / nx));
        try {
            map.values[idx] = scenario_k(at, resolve_phi(at, policy).phi, abs_tol);
        } catch (const std::exception&) {
            map.values[idx] = kNaN;
        }
    });
    return map;
}

void write_kmap_csv(std::ostream& out, const KMap& map)
{
    CsvWriter csv(out, {"x", "y", "k"});
    for (int iy = 0; iy < map.grid.y.steps; ++iy)
        for (int ix = 0; ix < map.grid.x.steps; ++ix) {
            csv.field(map.grid.x.value(ix)).field(map.grid.y.value(iy)).field(map.at(ix, iy));
            csv.end_row();
        }
}

void write_kmap_json(std::ostream& out, const KMap& map)
{
    nlohmann::json values = nlohmann::json::array();
    for (int iy = 0; iy < map.grid.y.steps; ++iy) {
        nlohmann::json row = nlohmann::json::array();
        for (int ix = 0; ix < map.grid.x.steps; ++ix)
            row.push_back(nullable(map.at(ix, iy)));
        values.push_back(std::move(row));
    }
    nlohmann::json policy = {{"kind", to_string(map.policy)}};
    if (map.policy.kind == OrientationPolicy::Kind::Fixed)
        policy["phi"] = map.policy.phi;

    const nlohmann::json doc = {
        {"scene",
         {{"mode", to_string(map.scene.mode)},
          {"source_length", map.scene.source_length},
          {"source_height", map.scene.source_height},
          {"rx_length", map.scene.rx_length}}},
        {"policy", policy},
        {"grid", {{"x", axis_json(map.grid.x)}, {"y", axis_json(map.grid.y)}}},
        {"cutoff", map.cutoff ? nlohmann::json(*map.cutoff) : nlohmann::json(nullptr)},
        {"missing", map.missing()},
        {"values", values},
    };
    out << doc.dump(2) << '\n';
}

} // namespace losdof

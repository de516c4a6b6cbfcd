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

#include "cli.hpp"

#include "losdof/bandwidth.hpp"
#include "losdof/channel.hpp"
#include "losdof/dof.hpp"
#include "losdof/io.hpp"
#include "losdof/quadrature.hpp"
#include "losdof/regions.hpp"
#include "losdof/scenarios.hpp"
#include "losdof/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace losdof::cli {

namespace {

using nlohmann::ordered_json;

// Reads a JSON document into CLI11 config items. Nested objects name the
// subcommand the enclosed keys belong to; arrays become multi-value inputs.
class JsonConfig : public CLI::Config {
public:
    std::string to_config(const CLI::App*, bool, bool, std::string) const override
    {
        return {};
    }

    std::vector<CLI::ConfigItem> from_config(std::istream& input) const override
    {
        nlohmann::json doc;
        try {
            input >> doc;
        } catch (const nlohmann::json::exception& e) {
            throw CLI::ConversionError("config file is not valid JSON: " + std::string(e.what()));
        }
        if (!doc.is_object())
            throw CLI::ConversionError("config file must hold a JSON object");
        std::vector<CLI::ConfigItem> items;
        collect(doc, {}, items);
        return items;
    }

private:
    static std::string scalar(const nlohmann::json& v)
    {
        if (v.is_string())
            return v.get<std::string>();
        if (v.is_boolean())
            return v.get<bool>() ? "true" : "false";
        if (v.is_number())
            return v.dump();
        throw CLI::ConversionError("config values must be scalars or arrays of scalars");
    }

    static void collect(const nlohmann::json& node, const std::vector<std::string>& parents,
                        std::vector<CLI::ConfigItem>& items)
    {
        for (const auto& [key, value] : node.items()) {
            if (value.is_object()) {
                auto nested = parents;
                nested.push_back(key);
                collect(value, nested, items);
                continue;
            }
            CLI::ConfigItem item;
            item.parents = parents;
            item.name = key;
            if (value.is_array()) {
                for (const auto& v : value)
                    item.inputs.push_back(scalar(v));
            } else {
                item.inputs.push_back(scalar(value));
            }
            items.push_back(std::move(item));
        }
    }
};

struct Globals {
    unsigned threads = 1;
    std::optional<double> lambda;
    bool degrees = false;

    double length_in(double v) const { return lambda ? v / *lambda : v; }
    double length_out(double v) const { return lambda ? v * *lambda : v; }
    double angle_in(double v) const { return degrees ? v * kPi / 180.0 : v; }
    double angle_out(double v) const { return degrees ? v * 180.0 / kPi : v; }
};

struct AssemblyArgs {
    double length = 400.0;
    double rho = 20.0;
    std::optional<double> distance;
    std::optional<double> theta;
    std::string direction = "z";
    std::vector<double> vector;
};

void add_assembly_options(CLI::App* sub, AssemblyArgs& a, bool with_distance)
{
    sub->add_option("--length", a.length, "source array length")->capture_default_str();
    sub->add_option("--rho", a.rho, "receive array half-length")->capture_default_str();
    if (with_distance)
        sub->add_option("--distance", a.distance, "distance between array centers");
    sub->add_option("--theta", a.theta, "polar angle of the receive center (default boresight)");
}

void add_direction_options(CLI::App* sub, AssemblyArgs& a, bool allow_generic)
{
    std::vector<std::string> names{"x", "y", "z"};
    if (allow_generic)
        names.push_back("generic");
    sub->add_option("--direction", a.direction, "receive array direction")
        ->check(CLI::IsMember(names))
        ->capture_default_str();
    if (allow_generic)
        sub->add_option("--vector", a.vector, "receive direction vector for --direction generic")
            ->expected(3);
}

double theta_of(const Globals& g, const AssemblyArgs& a)
{
    return a.theta ? g.angle_in(*a.theta) : 0.5 * kPi;
}

ArrayAssembly assembly_of(const Globals& g, const AssemblyArgs& a, double distance)
{
    return ArrayAssembly(g.length_in(a.length), g.length_in(a.rho), distance, theta_of(g, a));
}

ReceiveDirection direction_of(const AssemblyArgs& a)
{
    const Axis axis = parse_axis(a.direction);
    if (axis != Axis::Generic) {
        if (!a.vector.empty())
            throw std::invalid_argument("--vector only applies to --direction generic");
        return ReceiveDirection::along(axis);
    }
    if (a.vector.size() != 3)
        throw std::invalid_argument("--direction generic needs --vector vx vy vz");
    const Vec3 v(a.vector[0], a.vector[1], a.vector[2]);
    if (!v.allFinite() || !(v.norm() > 0.0))
        throw std::invalid_argument("--vector must be a finite non-zero vector");
    return ReceiveDirection::generic(v.normalized());
}

double required_distance(const Globals& g, const AssemblyArgs& a)
{
    if (!a.distance)
        throw std::invalid_argument("--distance is required");
    return g.length_in(*a.distance);
}

// Opens `path` for writing, or returns `fallback` for "-".
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback)
    {
        if (path != "-") {
            file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
            if (!*file_)
                throw std::invalid_argument("cannot open output file '" + path + "'");
            stream_ = file_.get();
        }
    }
    std::ostream& stream() { return *stream_; }
    void close()
    {
        stream_->flush();
        if (file_) {
            file_->close();
            if (!*file_)
                throw std::runtime_error("failed writing output file");
        }
    }

private:
    std::unique_ptr<std::ofstream> file_;
    std::ostream* stream_;
};

// Side outputs default to "<output>.json" when the main output is a file.
std::optional<std::string> side_path(const std::string& explicit_path, const std::string& output)
{
    if (!explicit_path.empty())
        return explicit_path;
    if (output == "-")
        return std::nullopt;
    return output + ".json";
}

void write_json(const std::string& path, const ordered_json& doc, std::ostream& fallback)
{
    Sink sink(path, fallback);
    sink.stream() << doc.dump(2) << '\n';
    sink.close();
}

// ---------------------------------------------------------------------------

struct ProfileArgs {
    AssemblyArgs a;
    int samples = 201;
    std::string output = "-";
};

void cmd_bandwidth_profile(const Globals& g, const ProfileArgs& p, std::ostream& out)
{
    if (p.samples < 2)
        throw std::invalid_argument("--samples must be at least 2");
    const ArrayAssembly assembly = assembly_of(g, p.a, required_distance(g, p.a));
    const ReceiveDirection dir = direction_of(p.a);
    const Interval iv = effective_interval(assembly, dir.axis());

    const double mid = 0.5 * (iv.lo + iv.hi);
    const double half = 0.5 * (iv.hi - iv.lo);
    const int n1 = p.samples - 1;
    Sink sink(p.output, out);
    CsvWriter csv(sink.stream(), {"l", "w"});
    for (int i = 0; i <= n1; ++i) {
        double l = mid + half * static_cast<double>(2 * i - n1) / n1;
        if (i == 0)
            l = iv.lo;
        else if (i == n1)
            l = iv.hi;
        csv.field(g.length_out(l)).field(bandwidth(l, dir, assembly.link()));
        csv.end_row();
    }
    sink.close();
}

struct KArgs {
    AssemblyArgs a;
    double tolerance = kDefaultQuadratureTolerance;
    std::string interval = "exact";
    std::string output = "-";
};

void cmd_k_number(const Globals& g, const KArgs& k, std::ostream& out)
{
    const ArrayAssembly assembly = assembly_of(g, k.a, required_distance(g, k.a));
    const ReceiveDirection dir = direction_of(k.a);
    if (!(k.tolerance > 0.0))
        throw std::invalid_argument("--tolerance must be positive");
    const IntervalMode mode = k.interval == "full" ? IntervalMode::FullAperture : IntervalMode::Exact;
    const KNumberReport r = k_number(assembly, dir, mode, k.tolerance);

    ordered_json doc;
    doc["k_exact"] = r.k_exact;
    doc["k_upper"] = r.k_upper;
    doc["k_lower"] = r.k_lower;
    doc["k_linear"] = r.k_linear;
    doc["quadrature_abs_err"] = r.quadrature_abs_err;
    doc["warnings"] = r.warnings;
    doc["direction"] = to_string(dir.axis());
    write_json(k.output, doc, out);
}

struct RegionArgs {
    AssemblyArgs a;
    std::string kind = "smr";
    double threshold = 1.0;
    std::vector<double> thetas;
    double theta_min = 0.0;
    std::optional<double> theta_max;
    int theta_steps = 181;
    std::optional<double> r_min;
    std::optional<double> r_max;
    int scan_points = 2048;
    std::string output = "-";
};

void cmd_region_boundary(const Globals& g, const RegionArgs& ra, std::ostream& out)
{
    const Axis dir = parse_axis(ra.a.direction);
    const RegionKind kind = ra.kind == "ncsmr" ? RegionKind::NCSMR : RegionKind::SMR;
    if (!(ra.threshold > 0.0))
        throw std::invalid_argument("--threshold must be positive");

    std::vector<double> thetas;
    if (!ra.thetas.empty()) {
        for (double t : ra.thetas)
            thetas.push_back(g.angle_in(t));
    } else {
        if (ra.theta_steps < 1)
            throw std::invalid_argument("--theta-steps must be positive");
        const double lo = g.angle_in(ra.theta_min);
        const double hi = ra.theta_max ? g.angle_in(*ra.theta_max) : kPi;
        if (ra.theta_steps == 1) {
            thetas.push_back(lo);
        } else {
            for (int i = 0; i < ra.theta_steps; ++i)
                thetas.push_back(i + 1 == ra.theta_steps ? hi : lo + (hi - lo) * i / (ra.theta_steps - 1));
        }
    }

    RootScan scan;
    if (ra.r_min)
        scan.r_min = g.length_in(*ra.r_min);
    if (ra.r_max)
        scan.r_max = g.length_in(*ra.r_max);
    if (ra.scan_points < 2)
        throw std::invalid_argument("--scan-points must be at least 2");
    scan.points = ra.scan_points;

    const RegionCurve curve = boundary_curve(dir, kind, thetas, g.length_in(ra.a.length), g.length_in(ra.a.rho),
                                             ra.threshold, g.threads, scan);
    Sink sink(ra.output, out);
    CsvWriter csv(sink.stream(), {"theta", "radius", "root_index"});
    for (const RegionSample& s : curve.samples)
        for (std::size_t i = 0; i < s.radii.size(); ++i) {
            csv.field(g.angle_out(s.theta)).field(g.length_out(s.radii[i])).field(static_cast<long long>(i));
            csv.end_row();
        }
    sink.close();
}

struct ChannelArgs {
    AssemblyArgs a;
    std::optional<double> r0_factor;
    std::optional<double> kz_distance;
    double source_spacing = 0.5;
    double receive_spacing = 0.5;
    double threshold = 0.3;
    std::string output = "-";
    std::string sidecar;
    std::string matrix;
};

void cmd_channel_svd(const Globals& g, const ChannelArgs& c, std::ostream& out)
{
    const double length = g.length_in(c.a.length);
    const double rho = g.length_in(c.a.rho);
    const int chosen = (c.a.distance ? 1 : 0) + (c.r0_factor ? 1 : 0) + (c.kz_distance ? 1 : 0);
    if (chosen != 1)
        throw std::invalid_argument("give exactly one of --distance, --r0-factor, --kz-distance");

    double r;
    if (c.a.distance) {
        r = g.length_in(*c.a.distance);
    } else if (c.r0_factor) {
        const DistanceThreshold r0 = r0_threshold(length, rho);
        if (!r0.exact)
            throw std::invalid_argument("R0 is undefined for rho <= 1/4");
        r = *c.r0_factor * *r0.exact;
    } else {
        const auto rz = rz_boresight(length, rho, *c.kz_distance);
        if (!rz)
            throw std::invalid_argument("no boresight distance reaches the requested K");
        r = *rz;
    }

    const ChannelSpec spec{ArrayAssembly(length, rho, r, theta_of(g, c.a)), direction_of(c.a),
                           g.length_in(c.source_spacing), g.length_in(c.receive_spacing)};
    const ChannelMatrix h = build_channel(spec, g.threads);
    const SingularSpectrum s = singular_spectrum(h);
    const auto maxnorm = normalized_spectrum(s, SpectrumNorm::MaxNorm);
    const auto sumnorm = normalized_spectrum(s, SpectrumNorm::SumNorm);

    Sink sink(c.output, out);
    CsvWriter csv(sink.stream(), {"index", "sigma", "sigma_maxnorm", "sigma_sumnorm"});
    for (std::size_t i = 0; i < s.sigmas.size(); ++i) {
        csv.field(static_cast<long long>(i + 1)).field(s.sigmas[i]).field(maxnorm[i]).field(sumnorm[i]);
        csv.end_row();
    }
    sink.close();

    if (const auto path = side_path(c.sidecar, c.output)) {
        ordered_json doc;
        doc["n_t"] = s.n_cols;
        doc["n_r"] = s.n_rows;
        doc["usable_count"] = usable_count(s, c.threshold);
        doc["threshold"] = c.threshold;
        doc["distance"] = g.length_out(r);
        write_json(*path, doc, out);
    }
    if (!c.matrix.empty()) {
        Sink m(c.matrix, out);
        write_channel_csv(m.stream(), h);
        m.close();
    }
}

struct ScenarioArgs {
    std::string mode = "vertical";
    double length = 400.0;
    double height = 400.0;
    double rho = 20.0;
    std::string policy = "gamma";
    double phi = 0.0;
    std::optional<double> x_min, x_max, y_min, y_max;
    int x_steps = 101;
    int y_steps = 51;
    std::optional<double> cutoff;
    std::string output = "-";
    std::string metadata;
};

void cmd_scenario_map(const Globals& g, const ScenarioArgs& sa, std::ostream& out)
{
    ScenePlacement scene;
    scene.mode = parse_scene_mode(sa.mode);
    scene.source_length = g.length_in(sa.length);
    scene.source_height = g.length_in(sa.height);
    scene.rx_length = 2.0 * g.length_in(sa.rho);

    OrientationPolicy policy;
    if (sa.policy == "fixed")
        policy = OrientationPolicy::fixed(g.angle_in(sa.phi));
    else if (sa.policy == "gamma")
        policy = OrientationPolicy::gamma();
    else
        policy = OrientationPolicy::h_control();

    // Default extents: 1000 wavelengths for the vertical scene, 5000 for the horizontal one.
    const double extent = scene.mode == SceneMode::Vertical ? 1000.0 : 5000.0;
    const auto pick = [&](const std::optional<double>& v, double fallback) {
        return v ? g.length_in(*v) : fallback;
    };
    const GroundGrid grid{{pick(sa.x_min, -extent), pick(sa.x_max, extent), sa.x_steps},
                          {pick(sa.y_min, 0.0), pick(sa.y_max, extent), sa.y_steps}};

    KMap map = k_map(scene, policy, grid, g.threads);
    map.cutoff = sa.cutoff;

    Sink sink(sa.output, out);
    CsvWriter csv(sink.stream(), {"x", "y", "k"});
    for (int iy = 0; iy < grid.y.steps; ++iy)
        for (int ix = 0; ix < grid.x.steps; ++ix) {
            csv.field(g.length_out(grid.x.value(ix))).field(g.length_out(grid.y.value(iy))).field(map.at(ix, iy));
            csv.end_row();
        }
    sink.close();

    if (const auto path = side_path(sa.metadata, sa.output)) {
        Sink meta(*path, out);
        write_kmap_json(meta.stream(), map);
        meta.close();
    }
}

struct VerifyArgs {
    std::uint64_t seed = 1;
    int draws = 500;
    std::string output = "-";
};

bool cmd_verify(const VerifyArgs& v, std::ostream& out)
{
    const auto checks = run_verification(v.seed, v.draws);
    Sink sink(v.output, out);
    CsvWriter csv(sink.stream(), {"check", "passed", "worst", "tolerance", "samples"});
    bool all = true;
    for (const CheckResult& c : checks) {
        csv.field(c.name).field(c.passed ? "true" : "false").field(c.worst).field(c.tolerance);
        csv.field(static_cast<long long>(c.samples));
        csv.end_row();
        all = all && c.passed;
    }
    sink.close();
    return all;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Spatial degrees of freedom of line-of-sight links between linear arrays", "losdof"};
    app.require_subcommand(1);
    app.fallthrough();
    app.config_formatter(std::make_shared<JsonConfig>());
    app.set_config("--config", "", "JSON file mirroring the command line flags");

    Globals g;
    app.add_option("--threads", g.threads, "worker threads for curve, map and matrix commands")
        ->check(CLI::Range(1u, 1024u))
        ->capture_default_str();
    app.add_option("--lambda", g.lambda, "wavelength in meters; lengths are then read and written in meters")
        ->check(CLI::PositiveNumber);
    app.add_flag("--degrees", g.degrees, "angles are read and written in degrees");

    ProfileArgs profile;
    auto* sp = app.add_subcommand("bandwidth-profile", "tabulate the local spatial bandwidth over the receive array");
    add_assembly_options(sp, profile.a, true);
    add_direction_options(sp, profile.a, true);
    sp->add_option("--samples", profile.samples, "number of rows")->capture_default_str();
    sp->add_option("--output,-o", profile.output, "CSV path or - for stdout")->capture_default_str();

    KArgs kargs;
    auto* sk = app.add_subcommand("k-number", "K number with its bounds and linear approximation");
    add_assembly_options(sk, kargs.a, true);
    add_direction_options(sk, kargs.a, true);
    sk->add_option("--tolerance", kargs.tolerance, "absolute quadrature tolerance")->capture_default_str();
    sk->add_option("--interval", kargs.interval, "length used by the bound formulas for e_x")
        ->check(CLI::IsMember({"exact", "full"}))
        ->capture_default_str();
    sk->add_option("--output,-o", kargs.output, "JSON path or - for stdout")->capture_default_str();

    RegionArgs region;
    auto* sr = app.add_subcommand("region-boundary", "distance thresholds of the multiplexing regions");
    sr->add_option("--length", region.a.length, "source array length")->capture_default_str();
    sr->add_option("--rho", region.a.rho, "receive array half-length")->capture_default_str();
    add_direction_options(sr, region.a, false);
    sr->add_option("--kind", region.kind, "smr or ncsmr")
        ->check(CLI::IsMember({"smr", "ncsmr"}))
        ->capture_default_str();
    sr->add_option("--threshold", region.threshold, "K0 for smr, dK for ncsmr")->capture_default_str();
    sr->add_option("--thetas", region.thetas, "explicit increasing polar angles");
    sr->add_option("--theta-min", region.theta_min, "first polar angle of the grid")->capture_default_str();
    sr->add_option("--theta-max", region.theta_max, "last polar angle of the grid (default pi)");
    sr->add_option("--theta-steps", region.theta_steps, "grid size")->capture_default_str();
    sr->add_option("--r-min", region.r_min, "lower end of the root scan");
    sr->add_option("--r-max", region.r_max, "upper end of the root scan (default automatic)");
    sr->add_option("--scan-points", region.scan_points, "log-spaced scan points")->capture_default_str();
    sr->add_option("--output,-o", region.output, "CSV path or - for stdout")->capture_default_str();

    ChannelArgs chan;
    auto* sc = app.add_subcommand("channel-svd", "singular spectrum of the discretized channel matrix");
    add_assembly_options(sc, chan.a, true);
    add_direction_options(sc, chan.a, true);
    sc->add_option("--r0-factor", chan.r0_factor, "distance as a multiple of R0");
    sc->add_option("--kz-distance", chan.kz_distance, "boresight distance where the e_z K number equals this value");
    sc->add_option("--source-spacing", chan.source_spacing, "source antenna spacing")->capture_default_str();
    sc->add_option("--receive-spacing", chan.receive_spacing, "receive antenna spacing")->capture_default_str();
    sc->add_option("--threshold", chan.threshold, "usability threshold on sigma / sigma_1")->capture_default_str();
    sc->add_option("--output,-o", chan.output, "CSV path or - for stdout")->capture_default_str();
    sc->add_option("--sidecar", chan.sidecar, "JSON sidecar path (default <output>.json)");
    sc->add_option("--matrix", chan.matrix, "also export H as CSV real/imag column pairs");

    ScenarioArgs scen;
    auto* ss = app.add_subcommand("scenario-map", "K number over the ground grid of an elevated-source scene");
    ss->add_option("--mode", scen.mode, "vertical or horizontal")
        ->check(CLI::IsMember({"vertical", "horizontal"}))
        ->capture_default_str();
    ss->add_option("--length", scen.length, "source array length")->capture_default_str();
    ss->add_option("--height", scen.height, "source center height")->capture_default_str();
    ss->add_option("--rho", scen.rho, "receive array half-length")->capture_default_str();
    ss->add_option("--policy", scen.policy, "fixed, gamma or h-control")
        ->check(CLI::IsMember({"fixed", "gamma", "h-control"}))
        ->capture_default_str();
    ss->add_option("--phi", scen.phi, "orientation for --policy fixed")->capture_default_str();
    ss->add_option("--x-min", scen.x_min, "grid x start");
    ss->add_option("--x-max", scen.x_max, "grid x end");
    ss->add_option("--x-steps", scen.x_steps, "grid x points")->capture_default_str();
    ss->add_option("--y-min", scen.y_min, "grid y start");
    ss->add_option("--y-max", scen.y_max, "grid y end");
    ss->add_option("--y-steps", scen.y_steps, "grid y points")->capture_default_str();
    ss->add_option("--cutoff", scen.cutoff, "display cutoff recorded in the metadata");
    ss->add_option("--output,-o", scen.output, "CSV path or - for stdout")->capture_default_str();
    ss->add_option("--metadata", scen.metadata, "JSON metadata path (default <output>.json)");

    VerifyArgs ver;
    auto* sv = app.add_subcommand("verify", "randomized oracle property suite");
    sv->add_option("--seed", ver.seed, "random seed")->capture_default_str();
    sv->add_option("--draws", ver.draws, "number of random assemblies")->capture_default_str();
    sv->add_option("--output,-o", ver.output, "CSV path or - for stdout")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kArgumentError;
    }

    try {
        if (sp->parsed())
            cmd_bandwidth_profile(g, profile, out);
        else if (sk->parsed())
            cmd_k_number(g, kargs, out);
        else if (sr->parsed())
            cmd_region_boundary(g, region, out);
        else if (sc->parsed())
            cmd_channel_svd(g, chan, out);
        else if (ss->parsed())
            cmd_scenario_map(g, scen, out);
        else if (sv->parsed() && !cmd_verify(ver, out)) {
            err << "losdof: verification failed\n";
            return kNumericalError;
        }
    } catch (const std::invalid_argument& e) {
        err << "losdof: " << e.what() << '\n';
        return kArgumentError;
    } catch (const QuadratureError& e) {
        err << "losdof: quadrature did not converge: " << e.what() << '\n';
        return kNumericalError;
    } catch (const std::exception& e) {
        err << "losdof: " << e.what() << '\n';
        return kNumericalError;
    }
    return kOk;
}

} // namespace losdof::cli

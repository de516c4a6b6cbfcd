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

#include "losdof/channel.hpp"

#include "losdof/io.hpp"
#include "losdof/parallel.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>
#include <string>

namespace losdof {

std::vector<Vec3> antenna_positions(double length, double spacing, const Vec3& center, const Vec3& axis)
{
    if (!std::isfinite(length) || length < 0.0)
        throw std::invalid_argument("array length must be finite and non-negative");
    if (!std::isfinite(spacing) || !(spacing > 0.0))
        throw std::invalid_argument("antenna spacing must be positive");
    if (!center.allFinite() || std::abs(axis.norm() - 1.0) > 1e-12)
        throw std::invalid_argument("array axis must be a unit vector");

    const double ratio = length / spacing;
    const double intervals = std::round(ratio);
    if (std::abs(ratio - intervals) > 1e-9) {
        const double lo = std::max(1.0, std::floor(ratio));
        const double hi = std::ceil(ratio);
        throw std::invalid_argument("spacing " + format_double(spacing) + " does not divide length " +
                                    format_double(length) + "; nearest valid spacings are " +
                                    format_double(length / hi) + " (" + format_double(hi + 1) +
                                    " antennas) and " + format_double(length / lo) + " (" +
                                    format_double(lo + 1) + " antennas)");
    }

    const auto n = static_cast<std::size_t>(intervals);
    std::vector<Vec3> out;
    out.reserve(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        const double offset = n == 0 ? 0.0 : length * (static_cast<double>(k) / static_cast<double>(n) - 0.5);
        out.push_back(center + offset * axis);
    }
    return out;
}

ChannelMatrix build_channel(const std::vector<Vec3>& receive, const std::vector<Vec3>& source, unsigned threads)
{
    if (receive.empty() || source.empty())
        throw std::invalid_argument("both arrays need at least one antenna");
    const auto rows = static_cast<Eigen::Index>(receive.size());
    const auto cols = static_cast<Eigen::Index>(source.size());
    ChannelMatrix h(rows, cols);
    parallel_for(receive.size(), threads, [&](std::size_t i) {
        for (Eigen::Index j = 0; j < cols; ++j) {
            const double r = (receive[i] - source[static_cast<std::size_t>(j)]).norm();
            if (!(r > 0.0))
                throw std::invalid_argument("coincident receive and source antennas");
            h(static_cast<Eigen::Index>(i), j) = std::polar(1.0 / r, 2.0 * kPi * r);
        }
    });
    return h;
}

ChannelMatrix build_channel(const ChannelSpec& spec, unsigned threads)
{
    const LinkGeometry& link = spec.assembly.link();
    const auto source = antenna_positions(link.source_length(), spec.source_spacing, link.source_center(),
                                          LinkGeometry::source_axis());
    const auto receive = antenna_positions(2.0 * spec.assembly.half_length(), spec.receive_spacing,
                                           Vec3::Zero(), spec.direction.unit());
    return build_channel(receive, source, threads);
}

SingularSpectrum singular_spectrum(const ChannelMatrix& h)
{
    if (!h.allFinite())
        throw std::invalid_argument("channel matrix has non-finite entries");
    SingularSpectrum out;
    out.n_rows = h.rows();
    out.n_cols = h.cols();
    if (h.size() == 0)
        return out;
    Eigen::BDCSVD<ChannelMatrix> svd(h);
    const Eigen::VectorXd& values = svd.singularValues();
    out.sigmas.assign(values.data(), values.data() + values.size());
    std::sort(out.sigmas.begin(), out.sigmas.end(), std::greater<>());
    return out;
}

std::vector<double> normalized_spectrum(const SingularSpectrum& s, SpectrumNorm mode)
{
    if (s.sigmas.empty() || !(s.sigmas.front() > 0.0))
        throw std::invalid_argument("spectrum is empty or all zero");
    const double scale = mode == SpectrumNorm::MaxNorm
        ? s.sigmas.front()
        : std::accumulate(s.sigmas.begin(), s.sigmas.end(), 0.0);
    std::vector<double> out(s.sigmas.size());
    std::transform(s.sigmas.begin(), s.sigmas.end(), out.begin(), [scale](double v) { return v / scale; });
    return out;
}

int usable_count(const SingularSpectrum& s, double threshold)
{
    if (s.sigmas.empty() || !(s.sigmas.front() > 0.0))
        throw std::invalid_argument("spectrum is empty or all zero");
    const double top = s.sigmas.front();
    return static_cast<int>(
        std::count_if(s.sigmas.begin(), s.sigmas.end(), [&](double v) { return v / top >= threshold; }));
}

double nyquist_spacing(double k, double half_length)
{
    if (!(k > 0.0))
        throw std::invalid_argument("K must be positive");
    if (!(half_length > 0.0))
        throw std::invalid_argument("half length must be positive");
    return 2.0 * half_length / k;
}

void write_channel_csv(std::ostream& out, const ChannelMatrix& h)
{
    std::vector<std::string> header;
    header.reserve(static_cast<std::size_t>(2 * h.cols()));
    for (Eigen::Index j = 0; j < h.cols(); ++j) {
        header.push_back("re_" + std::to_string(j));
        header.push_back("im_" + std::to_string(j));
    }
    CsvWriter csv(out, header);
    for (Eigen::Index i = 0; i < h.rows(); ++i) {
        for (Eigen::Index j = 0; j < h.cols(); ++j)
            csv.field(h(i, j).real()).field(h(i, j).imag());
        csv.end_row();
    }
}

} // namespace losdof

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

#ifndef LOSDOF_CHANNEL_HPP
#define LOSDOF_CHANNEL_HPP

#include "losdof/geometry.hpp"

#include <Eigen/Core>
#include <ostream>
#include <vector>

namespace losdof {

using ChannelMatrix = Eigen::MatrixXcd;

/// 1 + length/spacing points, symmetric about `center`, ordered along `axis`.
/// Throws std::invalid_argument when spacing does not divide length to 1e-9;
/// the message lists the nearest spacings that do.
std::vector<Vec3> antenna_positions(double length, double spacing, const Vec3& center, const Vec3& axis);

struct ChannelSpec {
    ArrayAssembly assembly;
    ReceiveDirection direction;
    double source_spacing;
    double receive_spacing;
};

/// Rows index receive antennas, columns source antennas:
/// H(i, j) = exp(j 2 pi r_ij) / r_ij with r_ij in wavelengths.
ChannelMatrix build_channel(const ChannelSpec& spec, unsigned threads = 1);
ChannelMatrix build_channel(const std::vector<Vec3>& receive, const std::vector<Vec3>& source,
                            unsigned threads = 1);

struct SingularSpectrum {
    /// Descending, non-negative.
    std::vector<double> sigmas;
    Eigen::Index n_rows = 0;
    Eigen::Index n_cols = 0;
};

SingularSpectrum singular_spectrum(const ChannelMatrix& h);

enum class SpectrumNorm { MaxNorm, SumNorm };

std::vector<double> normalized_spectrum(const SingularSpectrum& s, SpectrumNorm mode);

/// Number of sigma_i / sigma_1 >= threshold.
int usable_count(const SingularSpectrum& s, double threshold = 0.3);

/// 2 rho / K.
double nyquist_spacing(double k, double half_length);

/// Header re_0,im_0,re_1,im_1,... then one row per receive antenna.
void write_channel_csv(std::ostream& out, const ChannelMatrix& h);

} // namespace losdof

#endif

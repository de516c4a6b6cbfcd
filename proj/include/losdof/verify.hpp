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

#ifndef LOSDOF_VERIFY_HPP
#define LOSDOF_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace losdof {

struct CheckResult {
    std::string name;
    bool passed;
    /// Largest observed violation measure; compare with tolerance.
    double worst;
    double tolerance;
    std::size_t samples;
};

struct SweepRanges {
    double source_length_min = 10.0, source_length_max = 1e3;
    double half_length_min = 1.0, half_length_max = 1e2;
    double distance_min = 10.0, distance_max = 1e5;
};

/// Randomized property suite over `draws` assemblies seeded by `seed`:
/// closed-form extrema against a dense scan, the K sandwich, the mirror
/// identities and the closed forms against the generic-direction search.
std::vector<CheckResult> run_verification(std::uint64_t seed, int draws, const SweepRanges& ranges = {});

} // namespace losdof

#endif

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

#ifndef LOSDOF_IO_HPP
#define LOSDOF_IO_HPP

#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace losdof {

/// Shortest round-trip decimal form, '.' separator regardless of locale.
/// Non-finite values print as "nan", "inf" or "-inf".
std::string format_double(double value);

/// Minimal CSV emitter: comma separated, '\n' line endings, no quoting.
class CsvWriter {
public:
    CsvWriter(std::ostream& out, std::initializer_list<std::string_view> header);
    CsvWriter(std::ostream& out, const std::vector<std::string>& header);

    CsvWriter& field(double value);
    CsvWriter& field(long long value);
    CsvWriter& field(std::string_view text);
    void end_row();

private:
    void separator();

    std::ostream& out_;
    bool row_started_ = false;
};

} // namespace losdof

#endif

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

#include "losdof/io.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace losdof {

std::string format_double(double value)
{
    if (std::isnan(value))
        return "nan";
    if (std::isinf(value))
        return value > 0 ? "inf" : "-inf";
    std::array<char, 32> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), res.ptr);
}

CsvWriter::CsvWriter(std::ostream& out, std::initializer_list<std::string_view> header) : out_(out)
{
    for (std::string_view name : header)
        field(name);
    end_row();
}

CsvWriter::CsvWriter(std::ostream& out, const std::vector<std::string>& header) : out_(out)
{
    for (const std::string& name : header)
        field(std::string_view(name));
    end_row();
}

void CsvWriter::separator()
{
    if (row_started_)
        out_.put(',');
    row_started_ = true;
}

CsvWriter& CsvWriter::field(double value)
{
    separator();
    out_ << format_double(value);
    return *this;
}

CsvWriter& CsvWriter::field(long long value)
{
    separator();
    out_ << value;
    return *this;
}

CsvWriter& CsvWriter::field(std::string_view text)
{
    separator();
    out_ << text;
    return *this;
}

void CsvWriter::end_row()
{
    out_.put('\n');
    row_started_ = false;
}

} // namespace losdof

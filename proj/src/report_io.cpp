// Copyright 2026 The qcb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcb/report_io.hpp"

#include <cstdio>

#include "qcb/errors.hpp"

namespace qcb {

TableFormat parse_table_format(const std::string& name) {
    if (name == "csv") {
        return TableFormat::csv;
    }
    if (name == "tsv") {
        return TableFormat::tsv;
    }
    throw ArgumentError("unknown format '" + name + "' (expected csv or tsv)");
}

std::string format_real(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

void write_table(std::ostream& os, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows, TableFormat fmt) {
    const char sep = fmt == TableFormat::csv ? ',' : '\t';
    auto line = [&](const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i > 0) {
                os << sep;
            }
            os << fields[i];
        }
        os << '\n';
    };
    line(header);
    for (const auto& r : rows) {
        line(r);
    }
}

std::vector<std::string> report_row(const BoundReport& r) {
    return {r.bound,
            std::to_string(r.trial),
            std::to_string(r.seed),
            std::to_string(r.dA),
            format_real(r.d),
            format_real(r.eps),
            to_string(r.eps_provenance),
            format_real(r.lhs),
            format_real(r.rhs),
            format_real(r.margin),
            r.violated ? "1" : "0"};
}

void write_reports(std::ostream& os, const std::vector<BoundReport>& reports, TableFormat fmt) {
    std::vector<std::vector<std::string>> rows;
    rows.reserve(reports.size());
    for (const auto& r : reports) {
        rows.push_back(report_row(r));
    }
    write_table(os, {std::begin(kReportColumns), std::end(kReportColumns)}, rows, fmt);
}

}  // namespace qcb

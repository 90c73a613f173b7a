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

#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "qcb/bounds.hpp"

namespace qcb {

enum class TableFormat { csv, tsv };
/// "csv" or "tsv"; throws ArgumentError otherwise.
TableFormat parse_table_format(const std::string& name);

inline constexpr const char* kReportColumns[] = {"bound",          "trial",    "seed",     "dA",
                                                 "d",              "eps",      "eps_provenance",
                                                 "lhs_bits",       "rhs_bits", "margin_bits",
                                                 "violated"};

/// 12 significant digits, shortest of fixed/scientific ("%.12g").
std::string format_real(double x);

/// Writes a header row then one row per item; fields never need quoting.
void write_table(std::ostream& os, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows, TableFormat fmt);

std::vector<std::string> report_row(const BoundReport& r);
void write_reports(std::ostream& os, const std::vector<BoundReport>& reports, TableFormat fmt);

}  // namespace qcb

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

#include <string>
#include <string_view>

#include "qcb/channels.hpp"
#include "qcb/errors.hpp"

namespace qcb {

/// Malformed channel file. line/column are 1-based; 0 when the problem is
/// structural (wrong field type) rather than syntactic.
class ParseError : public ArgumentError {
   public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : ArgumentError(what), line_(line), column_(column) {}
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

   private:
    std::size_t line_;
    std::size_t column_;
};

/// Completeness residuals above this are rejected when reading files.
inline constexpr double kFileCompletenessTol = 1e-6;

/// JSON document {"din": n, "dout": m, "kraus": [[[re, im], ...], ...]} with each
/// Kraus operator a list of dout rows of din [re, im] pairs.
///
/// Throws ParseError on syntax or schema problems and ContractError when
/// max|sum K^dagger K - I| > 1e-6. Smaller residuals are removed by replacing
/// K_i with K_i S^{-1/2}, S = sum K^dagger K.
Channel parse_channel(std::string_view text, const std::string& source = "<input>");
Channel read_channel_file(const std::string& path);

std::string channel_to_json(const Channel& ch);
void write_channel_file(const std::string& path, const Channel& ch);

}  // namespace qcb

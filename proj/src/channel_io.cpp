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

#include "qcb/channel_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qcb/linalg.hpp"

namespace qcb {

namespace {

using nlohmann::json;

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

[[noreturn]] void schema_error(const std::string& source, const std::string& msg) {
    throw ParseError(source + ": " + msg, 0, 0);
}

std::size_t read_dim(const json& doc, const char* key, const std::string& source) {
    if (!doc.contains(key)) {
        schema_error(source, std::string("missing field '") + key + "'");
    }
    const json& v = doc.at(key);
    if (!v.is_number_unsigned() || v.get<std::size_t>() == 0) {
        schema_error(source, std::string("field '") + key + "' must be a positive integer");
    }
    return v.get<std::size_t>();
}

Complex read_entry(const json& v, const std::string& where, const std::string& source) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
        schema_error(source, where + ": expected a [re, im] pair");
    }
    Complex z{v[0].get<double>(), v[1].get<double>()};
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        schema_error(source, where + ": non-finite entry");
    }
    return z;
}

}  // namespace

Channel parse_channel(std::string_view text, const std::string& source) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        auto [line, col] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
        throw ParseError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + e.what(), line,
                         col);
    }
    if (!doc.is_object()) {
        schema_error(source, "top level must be an object");
    }
    const std::size_t din = read_dim(doc, "din", source);
    const std::size_t dout = read_dim(doc, "dout", source);
    if (!doc.contains("kraus") || !doc["kraus"].is_array() || doc["kraus"].empty()) {
        schema_error(source, "field 'kraus' must be a non-empty array");
    }
    std::vector<ComplexMatrix> kraus;
    for (std::size_t k = 0; k < doc["kraus"].size(); ++k) {
        const json& op = doc["kraus"][k];
        const std::string where = "kraus[" + std::to_string(k) + "]";
        if (!op.is_array() || op.size() != dout) {
            schema_error(source, where + ": expected " + std::to_string(dout) + " rows");
        }
        ComplexMatrix m(dout, din);
        for (std::size_t r = 0; r < dout; ++r) {
            if (!op[r].is_array() || op[r].size() != din) {
                schema_error(source, where + "[" + std::to_string(r) + "]: expected " + std::to_string(din) +
                                         " entries");
            }
            for (std::size_t c = 0; c < din; ++c) {
                m(r, c) = read_entry(op[r][c], where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]",
                                     source);
            }
        }
        kraus.push_back(std::move(m));
    }

    ComplexMatrix s(din, din);
    for (const auto& k : kraus) {
        s += k.adjoint() * k;
    }
    const double residual = max_abs_diff(s, ComplexMatrix::identity(din));
    if (residual > kFileCompletenessTol) {
        throw ContractError(source + ": Kraus completeness residual " + std::to_string(residual) + " exceeds 1e-6");
    }
    if (residual > 0) {
        auto eig = hermitian_eig(s.hermitian_part());
        ComplexMatrix inv_sqrt = spectral_apply(eig, [](double x) { return 1.0 / std::sqrt(x); });
        for (auto& k : kraus) {
            k = k * inv_sqrt;
        }
    }
    return Channel::from_kraus(std::move(kraus));
}

Channel read_channel_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError(path + ": cannot open file", 0, 0);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_channel(buf.str(), path);
}

std::string channel_to_json(const Channel& ch) {
    json doc;
    doc["din"] = ch.din();
    doc["dout"] = ch.dout();
    json kraus = json::array();
    for (const auto& k : ch.kraus()) {
        json rows = json::array();
        for (std::size_t r = 0; r < k.rows(); ++r) {
            json row = json::array();
            for (std::size_t c = 0; c < k.cols(); ++c) {
                row.push_back({k(r, c).real(), k(r, c).imag()});
            }
            rows.push_back(std::move(row));
        }
        kraus.push_back(std::move(rows));
    }
    doc["kraus"] = std::move(kraus);
    return doc.dump(1) + "\n";
}

void write_channel_file(const std::string& path, const Channel& ch) {
    std::ofstream out(path);
    if (!out) {
        throw ArgumentError(path + ": cannot open for writing");
    }
    out << channel_to_json(ch);
}

}  // namespace qcb

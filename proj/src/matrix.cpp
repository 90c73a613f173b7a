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

#include "qcb/matrix.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

#include "qcb/errors.hpp"
#include "qcb/kernels.hpp"

namespace qcb {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols) {
        throw ArgumentError("matrix: " + std::to_string(data_.size()) + " entries for shape " +
                            std::to_string(rows) + "x" + std::to_string(cols));
    }
    if (!all_finite()) {
        throw ArgumentError("matrix: non-finite entry");
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) {
            throw ArgumentError("matrix: ragged initializer");
        }
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        m(i, i) = values[i];
    }
    return m;
}

ComplexMatrix ComplexMatrix::column(std::span<const Complex> values) {
    return {values.size(), 1, std::vector<Complex>(values.begin(), values.end())};
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            r(j, i) = std::conj((*this)(i, j));
        }
    }
    return r;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            r(j, i) = (*this)(i, j);
        }
    }
    return r;
}

ComplexMatrix ComplexMatrix::conj() const {
    ComplexMatrix r = *this;
    for (auto& z : r.data_) {
        z = std::conj(z);
    }
    return r;
}

ComplexMatrix ComplexMatrix::hermitian_part() const {
    if (!is_square()) {
        throw ArgumentError("hermitian_part: matrix is not square");
    }
    ComplexMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        r(i, i) = (*this)(i, i).real();
        for (std::size_t j = i + 1; j < cols_; ++j) {
            Complex v = 0.5 * ((*this)(i, j) + std::conj((*this)(j, i)));
            r(i, j) = v;
            r(j, i) = std::conj(v);
        }
    }
    return r;
}

Complex ComplexMatrix::trace() const {
    Complex t = 0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) {
        t += (*this)(i, i);
    }
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0;
    for (const auto& z : data_) {
        s += std::norm(z);
    }
    return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
    double m = 0;
    for (const auto& z : data_) {
        m = std::max(m, std::abs(z));
    }
    return m;
}

double ComplexMatrix::hermiticity_defect() const {
    if (!is_square()) {
        return std::numeric_limits<double>::infinity();
    }
    double m = 0;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = i; j < cols_; ++j) {
            m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
        }
    }
    return m;
}

bool ComplexMatrix::all_finite() const {
    return std::all_of(data_.begin(), data_.end(),
                       [](const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
        throw ArgumentError("matrix +: shape mismatch");
    }
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] += o.data_[i];
    }
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
        throw ArgumentError("matrix -: shape mismatch");
    }
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] -= o.data_[i];
    }
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
    for (auto& z : data_) {
        z *= s;
    }
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(double s) {
    for (auto& z : data_) {
        z *= s;
    }
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) { return kernels::matmul(a, b); }

Complex inner(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ArgumentError("inner: shape mismatch");
    }
    Complex s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += std::conj(a.data()[i]) * b.data()[i];
    }
    return s;
}

ComplexMatrix outer(const ComplexMatrix& v) {
    if (v.cols() != 1) {
        throw ArgumentError("outer: expected a column vector");
    }
    ComplexMatrix r(v.rows(), v.rows());
    for (std::size_t i = 0; i < v.rows(); ++i) {
        for (std::size_t j = 0; j < v.rows(); ++j) {
            r(i, j) = v(i, 0) * std::conj(v(j, 0));
        }
    }
    return r;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        return std::numeric_limits<double>::infinity();
    }
    double m = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
    }
    return m;
}

LabelSet parse_labels(std::string_view text) {
    LabelSet out;
    std::string current;
    bool has_separator = text.find(',') != std::string_view::npos;
    for (char c : text) {
        if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
            if (!current.empty()) {
                out.push_back(current);
                current.clear();
            }
        } else if (has_separator) {
            current.push_back(c);
        } else {
            out.emplace_back(1, c);
        }
    }
    if (!current.empty()) {
        out.push_back(current);
    }
    return out;
}

SubsystemShape::SubsystemShape(std::vector<std::string> labels, std::vector<std::size_t> dims)
    : labels_(std::move(labels)), dims_(std::move(dims)) {
    if (labels_.size() != dims_.size()) {
        throw ArgumentError("shape: labels/dims length mismatch");
    }
    std::set<std::string> seen;
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i].empty()) {
            throw ArgumentError("shape: empty label");
        }
        if (!seen.insert(labels_[i]).second) {
            throw ArgumentError("shape: duplicate label '" + labels_[i] + "'");
        }
        if (dims_[i] == 0) {
            throw ArgumentError("shape: zero dimension for '" + labels_[i] + "'");
        }
    }
    if (total() > kAmbientCap) {
        throw SizeError("shape: ambient dimension " + std::to_string(total()) + " exceeds cap");
    }
}

SubsystemShape SubsystemShape::parse(std::string_view text) {
    std::vector<std::string> labels;
    std::vector<std::size_t> dims;
    std::string item;
    std::stringstream ss{std::string(text)};
    while (std::getline(ss, item, ',')) {
        if (item.empty()) {
            continue;
        }
        auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == item.size()) {
            throw ArgumentError("shape: expected LABEL=DIM, got '" + item + "'");
        }
        labels.push_back(item.substr(0, eq));
        try {
            std::size_t pos = 0;
            long long v = std::stoll(item.substr(eq + 1), &pos);
            if (pos != item.size() - eq - 1 || v <= 0) {
                throw ArgumentError("");
            }
            dims.push_back(static_cast<std::size_t>(v));
        } catch (const std::exception&) {
            throw ArgumentError("shape: bad dimension in '" + item + "'");
        }
    }
    return {std::move(labels), std::move(dims)};
}

std::size_t SubsystemShape::total() const {
    std::size_t t = 1;
    for (auto d : dims_) {
        t *= d;
    }
    return t;
}

bool SubsystemShape::contains(std::string_view label) const {
    return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

std::size_t SubsystemShape::index_of(std::string_view label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) {
        throw ArgumentError("unknown subsystem label '" + std::string(label) + "' in " + str());
    }
    return static_cast<std::size_t>(it - labels_.begin());
}

std::size_t SubsystemShape::dim_of(const LabelSet& labels) const {
    std::size_t d = 1;
    for (const auto& l : labels) {
        d *= dim_of(l);
    }
    return d;
}

SubsystemShape SubsystemShape::restrict_to(const LabelSet& keep) const {
    for (const auto& l : keep) {
        index_of(l);
    }
    std::vector<std::string> labels;
    std::vector<std::size_t> dims;
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (std::find(keep.begin(), keep.end(), labels_[i]) != keep.end()) {
            labels.push_back(labels_[i]);
            dims.push_back(dims_[i]);
        }
    }
    return {std::move(labels), std::move(dims)};
}

SubsystemShape SubsystemShape::with_factor(std::string_view label, std::size_t dim, std::string new_label) const {
    auto labels = labels_;
    auto dims = dims_;
    std::size_t i = index_of(label);
    dims[i] = dim;
    if (!new_label.empty()) {
        labels[i] = std::move(new_label);
    }
    return {std::move(labels), std::move(dims)};
}

SubsystemShape SubsystemShape::concat(const SubsystemShape& other) const {
    auto labels = labels_;
    auto dims = dims_;
    labels.insert(labels.end(), other.labels_.begin(), other.labels_.end());
    dims.insert(dims.end(), other.dims_.begin(), other.dims_.end());
    return {std::move(labels), std::move(dims)};
}

std::string SubsystemShape::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (i) {
            s += ",";
        }
        s += labels_[i] + "=" + std::to_string(dims_[i]);
    }
    return s + ")";
}

}  // namespace qcb

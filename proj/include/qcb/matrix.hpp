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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qcb {

using Complex = std::complex<double>;

/// Largest ambient (row or column) dimension any operation will build.
inline constexpr std::size_t kAmbientCap = 4096;

/// Dense complex matrix, row-major.
class ComplexMatrix {
   public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    /// Throws ArgumentError when entries.size() != rows * cols or an entry is not finite.
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }
    static ComplexMatrix diagonal(std::span<const double> values);
    static ComplexMatrix column(std::span<const Complex> values);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }
    bool is_square() const { return rows_ == cols_; }
    bool empty() const { return data_.empty(); }

    Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<Complex> data() { return data_; }
    std::span<const Complex> data() const { return data_; }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conj() const;
    /// (m + m^dagger) / 2.
    ComplexMatrix hermitian_part() const;

    Complex trace() const;
    double frobenius_norm() const;
    double max_abs() const;
    /// max |m - m^dagger|; infinite for non-square input.
    double hermiticity_defect() const;
    bool all_finite() const;

    ComplexMatrix& operator+=(const ComplexMatrix& o);
    ComplexMatrix& operator-=(const ComplexMatrix& o);
    ComplexMatrix& operator*=(Complex s);
    ComplexMatrix& operator*=(double s);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(ComplexMatrix a, double s) { return a *= s; }
    friend ComplexMatrix operator*(double s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator-(ComplexMatrix a) { return a *= -1.0; }
    /// Matrix product (dispatches to the serial or OpenMP kernel by size).
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

/// Hilbert-Schmidt inner product Tr(a^dagger b).
Complex inner(const ComplexMatrix& a, const ComplexMatrix& b);
/// |v><v| for a column vector.
ComplexMatrix outer(const ComplexMatrix& v);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

using LabelSet = std::vector<std::string>;

/// Parses "A,C" or "AC" style label lists; single-character labels may be run together.
LabelSet parse_labels(std::string_view text);

/// Ordered tensor factorization into named subsystems.
class SubsystemShape {
   public:
    SubsystemShape() = default;
    /// Throws ArgumentError on duplicate labels, length mismatch or a zero dimension.
    SubsystemShape(std::vector<std::string> labels, std::vector<std::size_t> dims);
    /// Parses "A=2,B=3".
    static SubsystemShape parse(std::string_view text);
    static SubsystemShape single(std::string label, std::size_t dim) { return {{std::move(label)}, {dim}}; }

    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<std::size_t>& dims() const { return dims_; }
    std::size_t count() const { return labels_.size(); }
    std::size_t total() const;

    bool contains(std::string_view label) const;
    /// Throws ArgumentError for an unknown label.
    std::size_t index_of(std::string_view label) const;
    std::size_t dim_of(std::string_view label) const { return dims_[index_of(label)]; }
    std::size_t dim_of(const LabelSet& labels) const;

    /// Sub-shape on the given labels, in this shape's order.
    SubsystemShape restrict_to(const LabelSet& keep) const;
    /// Shape with one factor's dimension (and optionally label) replaced.
    SubsystemShape with_factor(std::string_view label, std::size_t dim, std::string new_label = "") const;
    /// Concatenation; labels must stay unique.
    SubsystemShape concat(const SubsystemShape& other) const;

    bool operator==(const SubsystemShape&) const = default;
    std::string str() const;

   private:
    std::vector<std::string> labels_;
    std::vector<std::size_t> dims_;
};

}  // namespace qcb

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

#include <functional>
#include <span>
#include <vector>

#include "qcb/matrix.hpp"
#include "qcb/rng.hpp"

namespace qcb {

/// Kronecker product. Throws SizeError past kAmbientCap.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix tensor(std::span<const ComplexMatrix> factors);

/// Partial trace keeping `keep` (result factors in the shape's order).
/// Throws ArgumentError for unknown labels or a matrix/shape mismatch.
ComplexMatrix partial_trace(const ComplexMatrix& m, const SubsystemShape& shape, const LabelSet& keep);

/// Zeroes every entry whose row and column differ on the given factors
/// (the completely dephasing map on those factors, computational basis).
ComplexMatrix dephase(const ComplexMatrix& m, const SubsystemShape& shape, const LabelSet& labels);

struct HermitianEig {
    std::vector<double> values;  ///< descending
    ComplexMatrix vectors;       ///< columns are eigenvectors
};

/// Cyclic Jacobi eigensolver. Throws ContractError if max|m - m^dagger| > herm_tol.
HermitianEig hermitian_eig(const ComplexMatrix& m, double herm_tol = 1e-10);
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m, double herm_tol = 1e-10);

/// U f(diag) U^dagger from a decomposition.
ComplexMatrix spectral_apply(const HermitianEig& eig, const std::function<double(double)>& f);

struct Svd {
    ComplexMatrix u;             ///< rows x k, orthonormal columns (completed where sigma = 0)
    std::vector<double> sigma;   ///< descending, k = min(rows, cols)
    ComplexMatrix v;             ///< cols x k, orthonormal columns
};

/// One-sided (Hestenes) Jacobi SVD; thin factors.
Svd svd(const ComplexMatrix& m);
std::vector<double> singular_values(const ComplexMatrix& m);

/// Sum of singular values. Hermitian inputs use the spectrum directly.
double trace_norm(const ComplexMatrix& m);
/// Largest singular value.
double operator_norm(const ComplexMatrix& m);

/// [m]_+ and [m]_- with m = [m]_+ - [m]_-, both PSD. Throws ContractError if not Hermitian.
ComplexMatrix positive_part(const ComplexMatrix& m);
ComplexMatrix negative_part(const ComplexMatrix& m);

/// Rank of the sum of PSD operators: eigenvalues above tol * (largest eigenvalue).
/// Throws ArgumentError on an empty list or mismatched sizes.
std::size_t support_dim(std::span<const ComplexMatrix> operators, double tol = 1e-9);

/// Orthogonal projector onto eigenvectors with eigenvalue above tol * max.
ComplexMatrix support_projector(const ComplexMatrix& psd, double tol = 1e-9);

/// Unitary (or isometric) factor of the polar decomposition, m = W |m|.
ComplexMatrix polar_isometry(const ComplexMatrix& m);
/// Q factor of a thin QR with non-negative real diagonal R (modified Gram-Schmidt,
/// two passes). Columns that are numerically dependent are replaced by completions.
ComplexMatrix orthonormalize_columns(const ComplexMatrix& m);

ComplexMatrix ginibre(std::size_t rows, std::size_t cols, Rng& rng);
/// Ginibre state G G^dagger / Tr with G of shape dim x rank.
ComplexMatrix random_state(std::size_t dim, Rng& rng, std::size_t rank = 0);
/// Unit column vector.
ComplexMatrix random_pure(std::size_t dim, Rng& rng);
/// dout x din isometry from the QR of a Gaussian matrix. Throws ArgumentError if dout < din.
ComplexMatrix random_isometry(std::size_t din, std::size_t dout, Rng& rng);
ComplexMatrix random_unitary(std::size_t dim, Rng& rng);
ComplexMatrix random_hermitian(std::size_t dim, Rng& rng);

}  // namespace qcb

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

#include <vector>

#include "qcb/linalg.hpp"
#include "qcb/matrix.hpp"

namespace qcb {

/// Positive unit-trace Hermitian matrix over a labelled tensor factorization.
/// Construction validates: Hermitian within 1e-10, eigenvalues >= -1e-10,
/// trace within 1e-10 of 1.
class DensityMatrix {
   public:
    DensityMatrix(ComplexMatrix m, SubsystemShape shape);
    /// Single-factor state labelled `label`.
    explicit DensityMatrix(ComplexMatrix m, std::string label = "A");

    static DensityMatrix maximally_mixed(SubsystemShape shape);
    /// |v><v| for a unit column vector.
    static DensityMatrix pure(const ComplexMatrix& v, SubsystemShape shape);

    const ComplexMatrix& matrix() const { return m_; }
    const SubsystemShape& shape() const { return shape_; }
    std::size_t dim() const { return m_.rows(); }

    DensityMatrix marginal(const LabelSet& keep) const;

   private:
    ComplexMatrix m_;
    SubsystemShape shape_;
};

/// rho (x) sigma with concatenated shapes.
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);
/// lambda a + (1 - lambda) b; shapes must match.
DensityMatrix mix(double lambda, const DensityMatrix& a, const DensityMatrix& b);

/// Eigenvalues at or below this are treated as exact zeros in entropy sums.
inline constexpr double kEntropyClip = 1e-12;

/// von Neumann entropy in bits.
double entropy(const DensityMatrix& rho);
/// Entropy of a PSD matrix's spectrum (no trace normalization).
double entropy_of_spectrum(const std::vector<double>& eigenvalues);
double entropy(const ComplexMatrix& psd);
/// Entropy of the marginal on `labels` (0 for an empty set).
double marginal_entropy(const DensityMatrix& rho, const LabelSet& labels);

/// H(rho || sigma) in bits; +infinity when supp rho is not inside supp sigma.
/// Throws ArgumentError on a shape mismatch.
double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma);

/// I(A:B) = H(A) + H(B) - H(AB). The two parts must be disjoint and cover the shape.
double mutual_information(const DensityMatrix& omega, const LabelSet& part_a, const LabelSet& part_b);

/// I(A:B|C) = H(AC) + H(BC) - H(ABC) - H(C). A, B, C disjoint and covering; C may be empty.
double cmi(const DensityMatrix& omega, const LabelSet& a, const LabelSet& b, const LabelSet& c);

/// Binary entropy in bits. Throws ArgumentError outside [0, 1].
double h2(double t);
/// g(eps) = (1 + eps) h2(eps / (1 + eps)). Throws ArgumentError for eps < 0.
double g(double eps);

}  // namespace qcb

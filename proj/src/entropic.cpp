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

#include "qcb/entropic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "qcb/errors.hpp"

namespace qcb {

namespace {

constexpr double kStateTol = 1e-10;

void check_partition(const SubsystemShape& shape, std::initializer_list<const LabelSet*> parts) {
    std::set<std::string> seen;
    for (const LabelSet* part : parts) {
        for (const auto& l : *part) {
            shape.index_of(l);
            if (!seen.insert(l).second) {
                throw ArgumentError("label '" + l + "' appears in more than one part");
            }
        }
    }
    if (seen.size() != shape.count()) {
        throw ArgumentError("label parts do not cover shape " + shape.str());
    }
}

LabelSet join(const LabelSet& a, const LabelSet& b) {
    LabelSet r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix m, SubsystemShape shape) : m_(std::move(m)), shape_(std::move(shape)) {
    if (!m_.is_square() || m_.rows() != shape_.total()) {
        throw ArgumentError("state: matrix size does not match shape " + shape_.str());
    }
    if (!m_.all_finite()) {
        throw ContractError("state: non-finite entry");
    }
    double defect = m_.hermiticity_defect();
    if (defect > kStateTol) {
        throw ContractError("state: not Hermitian (defect " + std::to_string(defect) + ")");
    }
    m_ = m_.hermitian_part();
    double tr = m_.trace().real();
    if (std::abs(tr - 1.0) > kStateTol) {
        throw ContractError("state: trace " + std::to_string(tr) + " differs from 1");
    }
    auto ev = hermitian_eigenvalues(m_);
    if (!ev.empty() && ev.back() < -kStateTol) {
        throw ContractError("state: negative eigenvalue " + std::to_string(ev.back()));
    }
}

DensityMatrix::DensityMatrix(ComplexMatrix m, std::string label)
    : DensityMatrix(m, SubsystemShape::single(std::move(label), m.rows())) {}

DensityMatrix DensityMatrix::maximally_mixed(SubsystemShape shape) {
    const std::size_t n = shape.total();
    return {ComplexMatrix::identity(n) * (1.0 / static_cast<double>(n)), std::move(shape)};
}

DensityMatrix DensityMatrix::pure(const ComplexMatrix& v, SubsystemShape shape) { return {outer(v), std::move(shape)}; }

DensityMatrix DensityMatrix::marginal(const LabelSet& keep) const {
    return {partial_trace(m_, shape_, keep), shape_.restrict_to(keep)};
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
    return {tensor(a.matrix(), b.matrix()), a.shape().concat(b.shape())};
}

DensityMatrix mix(double lambda, const DensityMatrix& a, const DensityMatrix& b) {
    if (!(a.shape() == b.shape())) {
        throw ArgumentError("mix: shape mismatch");
    }
    if (!(lambda >= 0.0 && lambda <= 1.0)) {
        throw ArgumentError("mix: weight outside [0, 1]");
    }
    return {a.matrix() * lambda + b.matrix() * (1.0 - lambda), a.shape()};
}

double entropy_of_spectrum(const std::vector<double>& eigenvalues) {
    double h = 0;
    for (double x : eigenvalues) {
        if (x > kEntropyClip) {
            h -= x * std::log2(x);
        }
    }
    return h;
}

double entropy(const ComplexMatrix& psd) { return entropy_of_spectrum(hermitian_eigenvalues(psd.hermitian_part())); }

double entropy(const DensityMatrix& rho) { return entropy(rho.matrix()); }

double marginal_entropy(const DensityMatrix& rho, const LabelSet& labels) {
    if (labels.empty()) {
        return 0.0;
    }
    if (labels.size() == rho.shape().count()) {
        return entropy(rho.matrix());
    }
    return entropy(partial_trace(rho.matrix(), rho.shape(), labels));
}

double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
    if (!(rho.shape() == sigma.shape())) {
        throw ArgumentError("relative_entropy: shape mismatch " + rho.shape().str() + " vs " + sigma.shape().str());
    }
    auto es = hermitian_eig(sigma.matrix());
    const double top = es.values.front();
    const double cut = 1e-9 * top;
    const std::size_t n = rho.dim();
    // (I - P) rho (I - P) with P the support projector of sigma.
    ComplexMatrix p = spectral_apply(es, [&](double x) { return x > cut ? 1.0 : 0.0; });
    ComplexMatrix q = ComplexMatrix::identity(n) - p;
    if (trace_norm((q * rho.matrix() * q).hermitian_part()) >= 1e-9) {
        return std::numeric_limits<double>::infinity();
    }
    double cross = 0;  // Tr rho log sigma over supp sigma
    for (std::size_t k = 0; k < n; ++k) {
        if (es.values[k] <= cut) {
            continue;
        }
        Complex w = 0;
        for (std::size_t i = 0; i < n; ++i) {
            Complex acc = 0;
            for (std::size_t j = 0; j < n; ++j) {
                acc += rho.matrix()(i, j) * es.vectors(j, k);
            }
            w += std::conj(es.vectors(i, k)) * acc;
        }
        cross += w.real() * std::log2(es.values[k]);
    }
    return -entropy(rho) - cross;
}

double mutual_information(const DensityMatrix& omega, const LabelSet& part_a, const LabelSet& part_b) {
    check_partition(omega.shape(), {&part_a, &part_b});
    return marginal_entropy(omega, part_a) + marginal_entropy(omega, part_b) - entropy(omega);
}

double cmi(const DensityMatrix& omega, const LabelSet& a, const LabelSet& b, const LabelSet& c) {
    check_partition(omega.shape(), {&a, &b, &c});
    return marginal_entropy(omega, join(a, c)) + marginal_entropy(omega, join(b, c)) - entropy(omega) -
           marginal_entropy(omega, c);
}

double h2(double t) {
    if (!(t >= 0.0 && t <= 1.0)) {
        throw ArgumentError("h2: argument outside [0, 1]");
    }
    double h = 0;
    if (t > 0) {
        h -= t * std::log2(t);
    }
    if (t < 1) {
        h -= (1 - t) * std::log2(1 - t);
    }
    return h;
}

double g(double eps) {
    if (!(eps >= 0.0) || !std::isfinite(eps)) {
        throw ArgumentError("g: argument must be finite and non-negative");
    }
    if (eps == 0.0) {
        return 0.0;
    }
    return (1 + eps) * std::log2(1 + eps) - eps * std::log2(eps);
}

}  // namespace qcb

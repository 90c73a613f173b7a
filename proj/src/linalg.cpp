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

#include "qcb/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qcb/errors.hpp"
#include "qcb/kernels.hpp"

namespace qcb {

namespace {

constexpr int kMaxSweeps = 100;

void check_square_shape(const ComplexMatrix& m, const SubsystemShape& shape, const char* what) {
    if (!m.is_square() || m.rows() != shape.total()) {
        throw ArgumentError(std::string(what) + ": matrix of size " + std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()) + " does not match shape " + shape.str());
    }
}

std::vector<std::size_t> factor_keys(const SubsystemShape& shape, const LabelSet& labels) {
    std::vector<bool> mark(shape.count(), false);
    for (const auto& l : labels) {
        mark[shape.index_of(l)] = true;
    }
    const auto& dims = shape.dims();
    std::vector<std::size_t> keys(shape.total());
    std::vector<std::size_t> digit(dims.size(), 0);
    for (std::size_t full = 0; full < keys.size(); ++full) {
        std::size_t k = 0;
        for (std::size_t i = 0; i < dims.size(); ++i) {
            if (mark[i]) {
                k = k * dims[i] + digit[i];
            }
        }
        keys[full] = k;
        for (std::size_t i = dims.size(); i-- > 0;) {
            if (++digit[i] < dims[i]) {
                break;
            }
            digit[i] = 0;
        }
    }
    return keys;
}

double column_norm2(const ComplexMatrix& m, std::size_t c) {
    double s = 0;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        s += std::norm(m(r, c));
    }
    return s;
}

// Jacobi rotation parameters annihilating the (p,q) entry of a Hermitian 2x2
// block [[app, apq], [conj(apq), aqq]]. The rotation G acts on columns:
//   col_p <- c col_p - s e^{-i phi} col_q,  col_q <- s col_p + c e^{-i phi} col_q.
struct Rotation {
    double c;
    double s;
    Complex phase;  // e^{i phi}
};

Rotation jacobi_rotation(double app, double aqq, Complex apq) {
    double mag = std::abs(apq);
    double tau = (aqq - app) / (2.0 * mag);
    double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    double c = 1.0 / std::sqrt(1.0 + t * t);
    return {c, t * c, apq / mag};
}

void rotate_columns(ComplexMatrix& m, std::size_t p, std::size_t q, const Rotation& g) {
    const Complex em = std::conj(g.phase);
    for (std::size_t k = 0; k < m.rows(); ++k) {
        Complex mp = m(k, p);
        Complex mq = m(k, q);
        m(k, p) = g.c * mp - g.s * em * mq;
        m(k, q) = g.s * mp + g.c * em * mq;
    }
}

void rotate_rows_adjoint(ComplexMatrix& m, std::size_t p, std::size_t q, const Rotation& g) {
    for (std::size_t k = 0; k < m.cols(); ++k) {
        Complex mp = m(p, k);
        Complex mq = m(q, k);
        m(p, k) = g.c * mp - g.s * g.phase * mq;
        m(q, k) = g.s * mp + g.c * g.phase * mq;
    }
}

}  // namespace

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) { return kernels::kron(a, b); }

ComplexMatrix tensor(std::span<const ComplexMatrix> factors) {
    if (factors.empty()) {
        return ComplexMatrix::identity(1);
    }
    ComplexMatrix r = factors[0];
    for (std::size_t i = 1; i < factors.size(); ++i) {
        r = kernels::kron(r, factors[i]);
    }
    return r;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, const SubsystemShape& shape, const LabelSet& keep) {
    check_square_shape(m, shape, "partial_trace");
    std::vector<bool> mask(shape.count(), false);
    for (const auto& l : keep) {
        mask[shape.index_of(l)] = true;
    }
    return kernels::partial_trace(m, kernels::make_trace_plan(shape.dims(), mask));
}

ComplexMatrix dephase(const ComplexMatrix& m, const SubsystemShape& shape, const LabelSet& labels) {
    check_square_shape(m, shape, "dephase");
    auto keys = factor_keys(shape, labels);
    ComplexMatrix r = m;
    for (std::size_t i = 0; i < r.rows(); ++i) {
        for (std::size_t j = 0; j < r.cols(); ++j) {
            if (keys[i] != keys[j]) {
                r(i, j) = 0;
            }
        }
    }
    return r;
}

HermitianEig hermitian_eig(const ComplexMatrix& m, double herm_tol) {
    if (!m.is_square()) {
        throw ContractError("hermitian_eig: matrix is not square");
    }
    double defect = m.hermiticity_defect();
    if (!(defect <= herm_tol)) {
        throw ContractError("hermitian_eig: matrix is not Hermitian (defect " + std::to_string(defect) + ")");
    }
    const std::size_t n = m.rows();
    ComplexMatrix a = m.hermitian_part();
    ComplexMatrix v = ComplexMatrix::identity(n);
    const double fro = a.frobenius_norm();

    for (int sweep = 0; sweep < kMaxSweeps && fro > 0; ++sweep) {
        double off = 0;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                off += 2 * std::norm(a(p, q));
            }
        }
        if (std::sqrt(off) < 1e-13 * fro) {
            break;
        }
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                Complex apq = a(p, q);
                if (std::abs(apq) <= 1e-300) {
                    continue;
                }
                Rotation g = jacobi_rotation(a(p, p).real(), a(q, q).real(), apq);
                rotate_columns(a, p, q, g);
                rotate_rows_adjoint(a, p, q, g);
                a(p, q) = 0;
                a(q, p) = 0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
                rotate_columns(v, p, q, g);
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });
    HermitianEig out{std::vector<double>(n), ComplexMatrix(n, n)};
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]).real();
        for (std::size_t r = 0; r < n; ++r) {
            out.vectors(r, k) = v(r, order[k]);
        }
    }
    return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m, double herm_tol) {
    return hermitian_eig(m, herm_tol).values;
}

ComplexMatrix spectral_apply(const HermitianEig& eig, const std::function<double(double)>& f) {
    const std::size_t n = eig.values.size();
    ComplexMatrix r(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        double fk = f(eig.values[k]);
        if (fk == 0.0) {
            continue;
        }
        for (std::size_t i = 0; i < n; ++i) {
            Complex vik = fk * eig.vectors(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                r(i, j) += vik * std::conj(eig.vectors(j, k));
            }
        }
    }
    return r;
}

Svd svd(const ComplexMatrix& m) {
    if (m.rows() < m.cols()) {
        Svd t = svd(m.adjoint());
        return {std::move(t.v), std::move(t.sigma), std::move(t.u)};
    }
    const std::size_t n = m.cols();
    ComplexMatrix w = m;
    ComplexMatrix v = ComplexMatrix::identity(n);
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                double alpha = column_norm2(w, p);
                double beta = column_norm2(w, q);
                Complex gamma = 0;
                for (std::size_t r = 0; r < w.rows(); ++r) {
                    gamma += std::conj(w(r, p)) * w(r, q);
                }
                double mag = std::abs(gamma);
                if (mag <= 1e-15 * std::sqrt(alpha * beta) || mag <= 1e-300) {
                    continue;
                }
                rotated = true;
                Rotation g = jacobi_rotation(alpha, beta, gamma);
                rotate_columns(w, p, q, g);
                rotate_columns(v, p, q, g);
            }
        }
        if (!rotated) {
            break;
        }
    }

    std::vector<double> norms(n);
    for (std::size_t c = 0; c < n; ++c) {
        norms[c] = std::sqrt(column_norm2(w, c));
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return norms[i] > norms[j]; });
    const double top = n ? norms[order[0]] : 0.0;

    Svd out{ComplexMatrix(m.rows(), n), std::vector<double>(n), ComplexMatrix(n, n)};
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t c = order[k];
        out.sigma[k] = norms[c];
        bool usable = norms[c] > 1e-13 * top && norms[c] > 0;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            out.u(r, k) = usable ? w(r, c) / norms[c] : Complex{};
        }
        for (std::size_t r = 0; r < n; ++r) {
            out.v(r, k) = v(r, c);
        }
    }
    // Zero columns get completed to an orthonormal set.
    out.u = orthonormalize_columns(out.u);
    return out;
}

std::vector<double> singular_values(const ComplexMatrix& m) { return svd(m).sigma; }

double trace_norm(const ComplexMatrix& m) {
    if (m.is_square() && m.hermiticity_defect() <= 1e-12 * std::max(1.0, m.max_abs())) {
        double s = 0;
        for (double x : hermitian_eigenvalues(m.hermitian_part())) {
            s += std::abs(x);
        }
        return s;
    }
    auto sv = singular_values(m);
    return std::accumulate(sv.begin(), sv.end(), 0.0);
}

double operator_norm(const ComplexMatrix& m) {
    if (m.empty()) {
        return 0.0;
    }
    if (m.is_square() && m.hermiticity_defect() <= 1e-12 * std::max(1.0, m.max_abs())) {
        auto ev = hermitian_eigenvalues(m.hermitian_part());
        return std::max(std::abs(ev.front()), std::abs(ev.back()));
    }
    return singular_values(m).front();
}

ComplexMatrix positive_part(const ComplexMatrix& m) {
    return spectral_apply(hermitian_eig(m), [](double x) { return x > 0 ? x : 0.0; });
}

ComplexMatrix negative_part(const ComplexMatrix& m) {
    return spectral_apply(hermitian_eig(m), [](double x) { return x < 0 ? -x : 0.0; });
}

std::size_t support_dim(std::span<const ComplexMatrix> operators, double tol) {
    if (operators.empty()) {
        throw ArgumentError("support_dim: empty operator list");
    }
    ComplexMatrix sum = operators[0];
    for (std::size_t i = 1; i < operators.size(); ++i) {
        if (operators[i].rows() != sum.rows() || operators[i].cols() != sum.cols()) {
            throw ArgumentError("support_dim: operators differ in size");
        }
        sum += operators[i];
    }
    auto ev = hermitian_eigenvalues(sum.hermitian_part());
    if (ev.empty() || ev.front() <= 0) {
        return 0;
    }
    const double cut = tol * ev.front();
    return static_cast<std::size_t>(std::count_if(ev.begin(), ev.end(), [&](double x) { return x > cut; }));
}

ComplexMatrix support_projector(const ComplexMatrix& psd, double tol) {
    auto eig = hermitian_eig(psd.hermitian_part());
    if (eig.values.empty() || eig.values.front() <= 0) {
        return ComplexMatrix(psd.rows(), psd.cols());
    }
    const double cut = tol * eig.values.front();
    return spectral_apply(eig, [&](double x) { return x > cut ? 1.0 : 0.0; });
}

ComplexMatrix polar_isometry(const ComplexMatrix& m) {
    Svd s = svd(m);
    return s.u * s.v.adjoint();
}

ComplexMatrix orthonormalize_columns(const ComplexMatrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    if (cols > rows) {
        throw ArgumentError("orthonormalize_columns: more columns than rows");
    }
    ComplexMatrix q(rows, cols);
    std::size_t next_basis = 0;
    auto project_out = [&](std::vector<Complex>& x, std::size_t upto) {
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t j = 0; j < upto; ++j) {
                Complex d = 0;
                for (std::size_t r = 0; r < rows; ++r) {
                    d += std::conj(q(r, j)) * x[r];
                }
                for (std::size_t r = 0; r < rows; ++r) {
                    x[r] -= d * q(r, j);
                }
            }
        }
    };
    for (std::size_t c = 0; c < cols; ++c) {
        std::vector<Complex> x(rows);
        double original = 0;
        for (std::size_t r = 0; r < rows; ++r) {
            x[r] = m(r, c);
            original += std::norm(x[r]);
        }
        project_out(x, c);
        double nrm = std::sqrt(std::accumulate(x.begin(), x.end(), 0.0, [](double s, Complex z) { return s + std::norm(z); }));
        while (!(nrm > 1e-10 * std::sqrt(original)) || nrm <= 1e-300) {
            // Dependent column: substitute the next standard basis vector.
            if (next_basis >= rows) {
                throw ContractError("orthonormalize_columns: cannot complete basis");
            }
            std::fill(x.begin(), x.end(), Complex{});
            x[next_basis++] = 1.0;
            original = 1.0;
            project_out(x, c);
            nrm = std::sqrt(std::accumulate(x.begin(), x.end(), 0.0, [](double s, Complex z) { return s + std::norm(z); }));
        }
        for (std::size_t r = 0; r < rows; ++r) {
            q(r, c) = x[r] / nrm;
        }
    }
    return q;
}

ComplexMatrix ginibre(std::size_t rows, std::size_t cols, Rng& rng) {
    ComplexMatrix g(rows, cols);
    for (auto& z : g.data()) {
        double re = rng.normal();
        double im = rng.normal();
        z = Complex(re, im) * std::sqrt(0.5);
    }
    return g;
}

ComplexMatrix random_state(std::size_t dim, Rng& rng, std::size_t rank) {
    if (dim == 0) {
        throw ArgumentError("random_state: dimension must be positive");
    }
    if (rank == 0 || rank > dim) {
        rank = dim;
    }
    ComplexMatrix g = ginibre(dim, rank, rng);
    ComplexMatrix rho = (g * g.adjoint()).hermitian_part();
    rho *= 1.0 / rho.trace().real();
    return rho;
}

ComplexMatrix random_pure(std::size_t dim, Rng& rng) {
    if (dim == 0) {
        throw ArgumentError("random_pure: dimension must be positive");
    }
    ComplexMatrix v = ginibre(dim, 1, rng);
    v *= 1.0 / v.frobenius_norm();
    return v;
}

ComplexMatrix random_isometry(std::size_t din, std::size_t dout, Rng& rng) {
    if (din == 0 || dout < din) {
        throw ArgumentError("random_isometry: need 0 < din <= dout (got din=" + std::to_string(din) +
                            ", dout=" + std::to_string(dout) + ")");
    }
    return orthonormalize_columns(ginibre(dout, din, rng));
}

ComplexMatrix random_unitary(std::size_t dim, Rng& rng) { return random_isometry(dim, dim, rng); }

ComplexMatrix random_hermitian(std::size_t dim, Rng& rng) { return ginibre(dim, dim, rng).hermitian_part(); }

}  // namespace qcb

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

#include "qcb/channels.hpp"

#include <cmath>

#include "qcb/errors.hpp"
#include "qcb/linalg.hpp"

namespace qcb {

namespace {

constexpr double kRankTol = 1e-9;

ComplexMatrix choi_from_kraus(const std::vector<ComplexMatrix>& kraus) {
    const std::size_t n = kraus.front().size();
    ComplexMatrix j(n, n);
    for (const auto& k : kraus) {
        auto v = k.data();  // row-major flattening == vec in B (x) A order
        for (std::size_t r = 0; r < n; ++r) {
            if (v[r] == Complex{}) {
                continue;
            }
            for (std::size_t c = 0; c < n; ++c) {
                j(r, c) += v[r] * std::conj(v[c]);
            }
        }
    }
    return j;
}

std::vector<ComplexMatrix> kraus_from_choi(const ComplexMatrix& choi, std::size_t din, std::size_t dout) {
    auto eig = hermitian_eig(choi.hermitian_part());
    std::vector<ComplexMatrix> kraus;
    const double top = eig.values.front();
    for (std::size_t k = 0; k < eig.values.size(); ++k) {
        if (!(eig.values[k] > kRankTol * top)) {
            break;
        }
        ComplexMatrix op(dout, din);
        double s = std::sqrt(eig.values[k]);
        for (std::size_t i = 0; i < dout * din; ++i) {
            op.data()[i] = s * eig.vectors(i, k);
        }
        kraus.push_back(std::move(op));
    }
    return kraus;
}

bool linearly_independent(const std::vector<ComplexMatrix>& kraus) {
    const std::size_t m = kraus.size();
    ComplexMatrix gram(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            gram(i, j) = inner(kraus[i], kraus[j]);
        }
    }
    auto ev = hermitian_eigenvalues(gram.hermitian_part());
    return ev.front() > 0 && ev.back() > kRankTol * ev.front();
}

}  // namespace

Channel::Channel(std::size_t din, std::size_t dout, std::vector<ComplexMatrix> kraus)
    : din_(din), dout_(dout), kraus_(std::move(kraus)) {
    stinespring_ = kraus_to_stinespring(kraus_);
    choi_ = choi_from_kraus(kraus_);
}

Channel Channel::from_kraus(std::vector<ComplexMatrix> kraus, double tp_tol) {
    if (kraus.empty()) {
        throw ArgumentError("channel: empty Kraus list");
    }
    const std::size_t dout = kraus.front().rows();
    const std::size_t din = kraus.front().cols();
    if (din == 0 || dout == 0) {
        throw ArgumentError("channel: zero dimension");
    }
    if (din * dout > kAmbientCap) {
        throw SizeError("channel: din * dout exceeds ambient cap");
    }
    ComplexMatrix completeness(din, din);
    for (const auto& k : kraus) {
        if (k.rows() != dout || k.cols() != din) {
            throw ArgumentError("channel: Kraus operators differ in shape");
        }
        if (!k.all_finite()) {
            throw ArgumentError("channel: non-finite Kraus entry");
        }
        completeness += k.adjoint() * k;
    }
    double residual = max_abs_diff(completeness, ComplexMatrix::identity(din));
    if (!(residual <= tp_tol)) {
        throw ContractError("channel: not trace preserving (completeness residual " + std::to_string(residual) + ")");
    }
    if (!linearly_independent(kraus)) {
        kraus = kraus_from_choi(choi_from_kraus(kraus), din, dout);
    }
    return Channel(din, dout, std::move(kraus));
}

Channel Channel::from_stinespring(const ComplexMatrix& v, std::size_t dout, double tp_tol) {
    if (dout == 0 || v.rows() % dout != 0) {
        throw ArgumentError("channel: isometry rows not divisible by dout");
    }
    const std::size_t denv = v.rows() / dout;
    std::vector<ComplexMatrix> kraus(denv, ComplexMatrix(dout, v.cols()));
    for (std::size_t b = 0; b < dout; ++b) {
        for (std::size_t e = 0; e < denv; ++e) {
            for (std::size_t a = 0; a < v.cols(); ++a) {
                kraus[e](b, a) = v(b * denv + e, a);
            }
        }
    }
    return from_kraus(std::move(kraus), tp_tol);
}

Channel Channel::from_choi(const ComplexMatrix& choi, std::size_t din, std::size_t dout, double tol) {
    if (!choi.is_square() || choi.rows() != din * dout) {
        throw ArgumentError("channel: Choi matrix size does not match din * dout");
    }
    if (choi.hermiticity_defect() > tol) {
        throw ContractError("channel: Choi matrix not Hermitian");
    }
    auto ev = hermitian_eigenvalues(choi.hermitian_part());
    if (ev.back() < -tol) {
        throw ContractError("channel: Choi matrix not PSD");
    }
    ComplexMatrix marg = partial_trace(choi, SubsystemShape({"B", "A"}, {dout, din}), {"A"});
    if (max_abs_diff(marg, ComplexMatrix::identity(din)) > tol) {
        throw ContractError("channel: Tr_B J != I (not trace preserving)");
    }
    return Channel(din, dout, kraus_from_choi(choi, din, dout));
}

Channel Channel::identity(std::size_t d) { return from_kraus({ComplexMatrix::identity(d)}); }

Channel Channel::unitary(const ComplexMatrix& u) { return from_kraus({u}); }

Channel Channel::constant(const ComplexMatrix& sigma, std::size_t din) {
    auto eig = hermitian_eig(sigma);
    std::vector<ComplexMatrix> kraus;
    const std::size_t dout = sigma.rows();
    for (std::size_t k = 0; k < dout; ++k) {
        if (eig.values[k] <= 0) {
            continue;
        }
        double s = std::sqrt(eig.values[k]);
        for (std::size_t j = 0; j < din; ++j) {
            ComplexMatrix op(dout, din);
            for (std::size_t b = 0; b < dout; ++b) {
                op(b, j) = s * eig.vectors(b, k);
            }
            kraus.push_back(std::move(op));
        }
    }
    return from_kraus(std::move(kraus));
}

Channel Channel::completely_depolarizing(std::size_t d) {
    return constant(ComplexMatrix::identity(d) * (1.0 / static_cast<double>(d)), d);
}

ComplexMatrix Channel::apply(const ComplexMatrix& rho) const {
    if (rho.rows() != din_ || rho.cols() != din_) {
        throw ArgumentError("channel: input size " + std::to_string(rho.rows()) + " != din " + std::to_string(din_));
    }
    ComplexMatrix out(dout_, dout_);
    for (const auto& k : kraus_) {
        out += k * rho * k.adjoint();
    }
    return out;
}

ComplexMatrix Channel::apply_adjoint(const ComplexMatrix& y) const {
    if (y.rows() != dout_ || y.cols() != dout_) {
        throw ArgumentError("channel: adjoint input size mismatch");
    }
    ComplexMatrix out(din_, din_);
    for (const auto& k : kraus_) {
        out += k.adjoint() * y * k;
    }
    return out;
}

ComplexMatrix stinespring(const Channel& ch) { return ch.stinespring(); }

ComplexMatrix choi(const Channel& ch) { return ch.choi(); }

ComplexMatrix kraus_to_stinespring(const std::vector<ComplexMatrix>& kraus) {
    const std::size_t denv = kraus.size();
    const std::size_t dout = kraus.front().rows();
    const std::size_t din = kraus.front().cols();
    ComplexMatrix v(dout * denv, din);
    for (std::size_t e = 0; e < denv; ++e) {
        for (std::size_t b = 0; b < dout; ++b) {
            for (std::size_t a = 0; a < din; ++a) {
                v(b * denv + e, a) = kraus[e](b, a);
            }
        }
    }
    return v;
}

Channel complementary(const Channel& ch, std::size_t env_dim) {
    std::size_t denv = ch.denv();
    ComplexMatrix v = ch.stinespring();
    if (env_dim > denv) {
        v = pad_environment(v, ch.dout(), denv, env_dim);
        denv = env_dim;
    }
    std::vector<ComplexMatrix> kraus(ch.dout(), ComplexMatrix(denv, ch.din()));
    for (std::size_t b = 0; b < ch.dout(); ++b) {
        for (std::size_t e = 0; e < denv; ++e) {
            for (std::size_t a = 0; a < ch.din(); ++a) {
                kraus[b](e, a) = v(b * denv + e, a);
            }
        }
    }
    return Channel::from_kraus(std::move(kraus), 1e-8);
}

DensityMatrix apply(const Channel& ch, const DensityMatrix& rho) {
    std::string label = rho.shape().count() == 1 ? rho.shape().labels().front() : "B";
    return {ch.apply(rho.matrix()).hermitian_part(), SubsystemShape::single(label, ch.dout())};
}

DensityMatrix apply_on(const Channel& ch, const DensityMatrix& rho, std::string_view target, std::string new_label) {
    const auto& shape = rho.shape();
    const std::size_t idx = shape.index_of(target);
    if (shape.dims()[idx] != ch.din()) {
        throw ArgumentError("apply_on: factor '" + std::string(target) + "' has dim " +
                            std::to_string(shape.dims()[idx]) + ", channel expects " + std::to_string(ch.din()));
    }
    std::size_t pre = 1;
    std::size_t post = 1;
    for (std::size_t i = 0; i < shape.count(); ++i) {
        if (i < idx) {
            pre *= shape.dims()[i];
        } else if (i > idx) {
            post *= shape.dims()[i];
        }
    }
    const std::size_t din = ch.din();
    const std::size_t dout = ch.dout();
    const std::size_t nin = rho.dim();
    const std::size_t nout = pre * dout * post;
    const auto& m = rho.matrix();
    ComplexMatrix out(nout, nout);
    for (const auto& k : ch.kraus()) {
        // left = (I (x) K (x) I) rho
        ComplexMatrix left(nout, nin);
        for (std::size_t x = 0; x < pre; ++x) {
            for (std::size_t b = 0; b < dout; ++b) {
                for (std::size_t y = 0; y < post; ++y) {
                    const std::size_t ro = (x * dout + b) * post + y;
                    for (std::size_t a = 0; a < din; ++a) {
                        const Complex kba = k(b, a);
                        if (kba == Complex{}) {
                            continue;
                        }
                        const std::size_t ri = (x * din + a) * post + y;
                        for (std::size_t c = 0; c < nin; ++c) {
                            left(ro, c) += kba * m(ri, c);
                        }
                    }
                }
            }
        }
        // out += left (I (x) K (x) I)^dagger
        for (std::size_t r = 0; r < nout; ++r) {
            for (std::size_t x = 0; x < pre; ++x) {
                for (std::size_t b = 0; b < dout; ++b) {
                    for (std::size_t y = 0; y < post; ++y) {
                        Complex acc = 0;
                        for (std::size_t a = 0; a < din; ++a) {
                            acc += left(r, (x * din + a) * post + y) * std::conj(k(b, a));
                        }
                        out(r, (x * dout + b) * post + y) += acc;
                    }
                }
            }
        }
    }
    return {out.hermitian_part(), shape.with_factor(target, dout, std::move(new_label))};
}

Channel erasure_channel(std::size_t d, double p) {
    if (d == 0) {
        throw ArgumentError("erasure_channel: d must be positive");
    }
    if (!(p >= 0.0 && p <= 1.0)) {
        throw ArgumentError("erasure_channel: p outside [0, 1]");
    }
    std::vector<ComplexMatrix> kraus;
    const double sp = std::sqrt(p);
    for (std::size_t j = 0; j < d; ++j) {
        ComplexMatrix k(d + 1, d);
        k(d, j) = sp;
        kraus.push_back(std::move(k));
    }
    ComplexMatrix keep(d + 1, d);
    for (std::size_t j = 0; j < d; ++j) {
        keep(j, j) = std::sqrt(1.0 - p);
    }
    kraus.push_back(std::move(keep));
    return Channel::from_kraus(std::move(kraus));
}

ComplexMatrix erasure_stinespring(std::size_t d, double p) {
    if (d == 0) {
        throw ArgumentError("erasure_stinespring: d must be positive");
    }
    if (!(p >= 0.0 && p <= 1.0)) {
        throw ArgumentError("erasure_stinespring: p outside [0, 1]");
    }
    const std::size_t n = d + 1;  // dim B = dim E
    ComplexMatrix v(n * n, d);
    for (std::size_t a = 0; a < d; ++a) {
        v(a * n + d, a) += std::sqrt(1.0 - p);  // |phi> (x) |psi>
        v(d * n + a, a) += std::sqrt(p);        // |psi> (x) |phi>
    }
    return v;
}

ComplexMatrix pad_environment(const ComplexMatrix& v, std::size_t dout, std::size_t denv, std::size_t new_denv) {
    if (v.rows() != dout * denv || new_denv < denv) {
        throw ArgumentError("pad_environment: inconsistent dimensions");
    }
    ComplexMatrix r(dout * new_denv, v.cols());
    for (std::size_t b = 0; b < dout; ++b) {
        for (std::size_t e = 0; e < denv; ++e) {
            for (std::size_t a = 0; a < v.cols(); ++a) {
                r(b * new_denv + e, a) = v(b * denv + e, a);
            }
        }
    }
    return r;
}

ChannelPairRep pair_common_rep(const Channel& phi, const Channel& psi) {
    if (phi.din() != psi.din() || phi.dout() != psi.dout()) {
        throw ArgumentError("pair_common_rep: channels differ in din/dout");
    }
    const std::size_t denv = std::max(phi.denv(), psi.denv());
    return {pad_environment(phi.stinespring(), phi.dout(), phi.denv(), denv),
            pad_environment(psi.stinespring(), psi.dout(), psi.denv(), denv), phi.dout(), denv};
}

ComplexMatrix act_on_environment(const ComplexMatrix& v, std::size_t dout, const ComplexMatrix& u) {
    const std::size_t denv = u.rows();
    if (v.rows() != dout * denv || !u.is_square()) {
        throw ArgumentError("act_on_environment: dimension mismatch");
    }
    ComplexMatrix r(v.rows(), v.cols());
    for (std::size_t b = 0; b < dout; ++b) {
        for (std::size_t e = 0; e < denv; ++e) {
            for (std::size_t f = 0; f < denv; ++f) {
                const Complex uef = u(e, f);
                if (uef == Complex{}) {
                    continue;
                }
                for (std::size_t a = 0; a < v.cols(); ++a) {
                    r(b * denv + e, a) += uef * v(b * denv + f, a);
                }
            }
        }
    }
    return r;
}

ComplexMatrix isometry_output(const ComplexMatrix& v, std::size_t dout, const ComplexMatrix& rho) {
    if (dout == 0 || v.rows() % dout != 0) {
        throw ArgumentError("isometry_output: rows not divisible by dout");
    }
    const std::size_t denv = v.rows() / dout;
    ComplexMatrix full = v * rho * v.adjoint();
    return partial_trace(full, SubsystemShape({"B", "E"}, {dout, denv}), {"B"});
}

}  // namespace qcb

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

#include "qcb/distances.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qcb/linalg.hpp"
#include "qcb/rng.hpp"

namespace qcb {

namespace {

constexpr std::size_t kCertifiedDimCap = 64;
constexpr int kScoreEvery = 25;

// Everything the diamond solver needs about Delta = phi - psi.
struct DiamondProblem {
    std::size_t din;
    std::size_t dout;
    ComplexMatrix j;  // J(phi) - J(psi) on B (x) A
    SubsystemShape shape;
    std::vector<ComplexMatrix> kraus_phi;  // K (x) I_R
    std::vector<ComplexMatrix> kraus_psi;

    ComplexMatrix trace_out(const ComplexMatrix& z) const { return partial_trace(z, shape, {"A"}); }
    ComplexMatrix lift(const ComplexMatrix& m) const { return tensor(ComplexMatrix::identity(dout), m); }
};

DiamondProblem make_problem(const Channel& phi, const Channel& psi) {
    if (phi.din() != psi.din() || phi.dout() != psi.dout()) {
        throw ArgumentError("diamond_norm: channels differ in din/dout");
    }
    DiamondProblem p{phi.din(), phi.dout(), (phi.choi() - psi.choi()).hermitian_part(),
                     SubsystemShape({"B", "A"}, {phi.dout(), phi.din()}), {}, {}};
    const ComplexMatrix id = ComplexMatrix::identity(phi.din());
    for (const auto& k : phi.kraus()) {
        p.kraus_phi.push_back(tensor(k, id));
    }
    for (const auto& k : psi.kraus()) {
        p.kraus_psi.push_back(tensor(k, id));
    }
    return p;
}

double lambda_max(const ComplexMatrix& h) { return hermitian_eigenvalues(h.hermitian_part()).front(); }

// Makes any Hermitian Z exactly dual feasible: Z >= 0 and Z >= J.
ComplexMatrix repair_dual(const DiamondProblem& p, const ComplexMatrix& z) {
    ComplexMatrix z1 = positive_part(z.hermitian_part());
    return (z1 + positive_part((p.j - z1).hermitian_part())).hermitian_part();
}

double dual_value(const DiamondProblem& p, const ComplexMatrix& z) {
    return 2.0 * std::max(0.0, lambda_max(p.trace_out(repair_dual(p, z))));
}

// Dual point built from an input state: (I (x) rho^-1/2) [K]_+ (I (x) rho^-1/2),
// K = (I (x) rho^1/2) J (I (x) rho^1/2). Feasible for every full-rank rho and
// optimal when rho is an interior maximiser.
ComplexMatrix dual_from_state(const DiamondProblem& p, const ComplexMatrix& rho, double delta) {
    const double d = static_cast<double>(p.din);
    ComplexMatrix reg = (rho * (1.0 - delta) + ComplexMatrix::identity(p.din) * (delta / d)).hermitian_part();
    auto eig = hermitian_eig(reg);
    ComplexMatrix half = p.lift(spectral_apply(eig, [](double x) { return std::sqrt(std::max(x, 0.0)); }));
    ComplexMatrix inv_half =
        p.lift(spectral_apply(eig, [](double x) { return x > 0 ? 1.0 / std::sqrt(x) : 0.0; }));
    ComplexMatrix k = (half * p.j * half).hermitian_part();
    return (inv_half * positive_part(k) * inv_half).hermitian_part();
}

// Output of (Delta (x) id) on |v><v|, v on A (x) R.
ComplexMatrix delta_output(const DiamondProblem& p, const ComplexMatrix& v) {
    const std::size_t n = p.dout * p.din;
    ComplexMatrix out(n, n);
    ComplexMatrix pv = outer(v);
    for (const auto& k : p.kraus_phi) {
        out += k * pv * k.adjoint();
    }
    for (const auto& k : p.kraus_psi) {
        out -= k * pv * k.adjoint();
    }
    return out.hermitian_part();
}

ComplexMatrix delta_adjoint(const DiamondProblem& p, const ComplexMatrix& s) {
    const std::size_t n = p.din * p.din;
    ComplexMatrix out(n, n);
    for (const auto& k : p.kraus_phi) {
        out += k.adjoint() * s * k;
    }
    for (const auto& k : p.kraus_psi) {
        out -= k.adjoint() * s * k;
    }
    return out.hermitian_part();
}

struct ProbeResult {
    double value = 0;
    ComplexMatrix v;
};

// Alternating maximisation of Tr[S (Delta (x) id)(vv^dagger)] over sign matrices
// S and unit vectors v. Each half-step is exact, so the value is monotone.
ProbeResult alternate(const DiamondProblem& p, ComplexMatrix v, int max_steps = 400) {
    ProbeResult best{0, v};
    for (int step = 0; step < max_steps; ++step) {
        auto eig = hermitian_eig(delta_output(p, v));
        double value = 0;
        for (double x : eig.values) {
            value += std::abs(x);
        }
        if (value > best.value) {
            bool done = value - best.value <= 1e-15 * std::max(1.0, value);
            best = {value, v};
            if (done) {
                break;
            }
        } else if (step > 0) {
            break;
        }
        ComplexMatrix sign = spectral_apply(eig, [](double x) { return x > 0 ? 1.0 : (x < 0 ? -1.0 : 0.0); });
        auto h = hermitian_eig(delta_adjoint(p, sign));
        for (std::size_t r = 0; r < v.rows(); ++r) {
            v(r, 0) = h.vectors(r, 0);
        }
    }
    return best;
}

// Reduced input state conj(Tr_R |v><v|), the rho whose probe reproduces v.
ComplexMatrix input_state_of(const DiamondProblem& p, const ComplexMatrix& v) {
    return partial_trace(outer(v), SubsystemShape({"A", "R"}, {p.din, p.din}), {"A"}).conj().hermitian_part();
}

ComplexMatrix probe_vector(const DiamondProblem& p, const ComplexMatrix& rho) {
    // v = vec(C) with C = sqrt(rho)^T on A (x) R.
    ComplexMatrix s = spectral_apply(hermitian_eig(rho.hermitian_part()), [](double x) { return std::sqrt(std::max(x, 0.0)); });
    ComplexMatrix v(p.din * p.din, 1);
    for (std::size_t a = 0; a < p.din; ++a) {
        for (std::size_t r = 0; r < p.din; ++r) {
            v(a * p.din + r, 0) = s(r, a);
        }
    }
    double nrm = v.frobenius_norm();
    v *= 1.0 / nrm;
    return v;
}

struct Bounds {
    double lower = 0;
    double upper = std::numeric_limits<double>::infinity();
    std::string lower_method = "none";
    std::string upper_method = "none";
    ComplexMatrix best_v;

    void offer_lower(double value, const std::string& method, const ComplexMatrix& v) {
        if (value > lower) {
            lower = value;
            lower_method = method;
            best_v = v;
        }
    }
    void offer_upper(double value, const std::string& method) {
        if (value < upper) {
            upper = value;
            upper_method = method;
        }
    }
    double gap() const { return upper - lower; }
};

void refine_from_state(const DiamondProblem& p, const ComplexMatrix& rho, Bounds& b, const std::string& tag) {
    ComplexMatrix v = probe_vector(p, rho);
    ProbeResult r = alternate(p, v);
    b.offer_lower(r.value, tag, r.v);
}

void state_certificates(const DiamondProblem& p, Bounds& b) {
    if (b.best_v.empty()) {
        return;
    }
    ComplexMatrix rho = input_state_of(p, b.best_v);
    for (double delta : {0.0, 1e-12, 1e-9, 1e-6, 1e-4, 1e-3, 1e-2}) {
        b.offer_upper(dual_value(p, dual_from_state(p, rho, delta)), "state-dual");
    }
}

ComplexMatrix project_psd(const ComplexMatrix& m) { return positive_part(m.hermitian_part()); }

// ADMM on  min t  s.t.  X1 = Z, X2 = Z - J, X3 = tI - Tr_B Z, all X_i >= 0.
void run_admm(const DiamondProblem& p, const DiamondOptions& opts, Bounds& b) {
    const std::size_t n = p.din * p.dout;
    const std::size_t k = p.din;
    const double dy = static_cast<double>(p.dout);
    const ComplexMatrix id_k = ComplexMatrix::identity(k);

    ComplexMatrix z = positive_part(p.j);
    double t = lambda_max(p.trace_out(z));
    ComplexMatrix x1 = z;
    ComplexMatrix x2 = project_psd(z - p.j);
    ComplexMatrix x3 = project_psd(id_k * t - p.trace_out(z));
    ComplexMatrix u1(n, n), u2(n, n), u3(k, k);
    double mu = 1.0;

    for (int it = 1; it <= opts.max_iterations; ++it) {
        ComplexMatrix a1 = x1 - u1;
        ComplexMatrix a2 = x2 + p.j - u2;
        ComplexMatrix a3 = x3 - u3;
        double s = 0.5 * (a1.trace().real() + a2.trace().real()) + a3.trace().real() - (2.0 + dy) / (2.0 * mu);
        t = s / static_cast<double>(k);
        ComplexMatrix bmat = a1 + a2 + p.lift(id_k * t - a3);
        ComplexMatrix tz = p.trace_out(bmat) * (1.0 / (2.0 + dy));
        z = ((bmat - p.lift(tz)) * 0.5).hermitian_part();
        ComplexMatrix trz = p.trace_out(z);

        ComplexMatrix x1_prev = x1, x2_prev = x2, x3_prev = x3;
        x1 = project_psd(z + u1);
        x2 = project_psd(z - p.j + u2);
        x3 = project_psd(id_k * t - trz + u3);
        ComplexMatrix r1 = z - x1;
        ComplexMatrix r2 = z - p.j - x2;
        ComplexMatrix r3 = id_k * t - trz - x3;
        u1 += r1;
        u2 += r2;
        u3 += r3;

        if (it % kScoreEvery == 0) {
            b.offer_upper(dual_value(p, z), "admm-dual");
            double primal_res = std::sqrt(std::pow(r1.frobenius_norm(), 2) + std::pow(r2.frobenius_norm(), 2) +
                                          std::pow(r3.frobenius_norm(), 2));
            double dual_res = mu * std::sqrt(std::pow((x1 - x1_prev).frobenius_norm(), 2) +
                                             std::pow((x2 - x2_prev).frobenius_norm(), 2) +
                                             std::pow((x3 - x3_prev).frobenius_norm(), 2));
            if (primal_res > 10 * dual_res) {
                mu *= 2;
                u1 *= 0.5;
                u2 *= 0.5;
                u3 *= 0.5;
            } else if (dual_res > 10 * primal_res) {
                mu *= 0.5;
                u1 *= 2.0;
                u2 *= 2.0;
                u3 *= 2.0;
            }
            if (it % (8 * kScoreEvery) == 0) {
                // The multiplier of the Tr_B Z <= tI block is (a multiple of) the optimal input state.
                ComplexMatrix rho = project_psd(u3 * -1.0);
                double tr = rho.trace().real();
                if (tr > 0) {
                    refine_from_state(p, rho * (1.0 / tr), b, "admm-state-probe");
                }
                state_certificates(p, b);
            }
            if (b.gap() <= opts.tol) {
                return;
            }
        }
    }
}

Bounds solve_diamond(const Channel& phi, const Channel& psi, const DiamondOptions& opts) {
    DiamondProblem p = make_problem(phi, psi);
    Bounds b;
    if (p.j.max_abs() == 0.0) {
        b.offer_upper(0.0, "identical-choi");
        b.lower_method = "identical-choi";
        return b;
    }

    b.offer_upper(dual_value(p, positive_part(p.j)), "positive-part-dual");

    // Lower endpoint: maximally entangled probe, then seeded pure restarts.
    refine_from_state(p, ComplexMatrix::identity(p.din) * (1.0 / static_cast<double>(p.din)), b,
                      "alternating-pure-probe");
    Rng rng(opts.seed);
    for (int r = 0; r < opts.restarts; ++r) {
        ProbeResult res = alternate(p, random_pure(p.din * p.din, rng));
        b.offer_lower(res.value, "alternating-pure-probe", res.v);
    }
    state_certificates(p, b);
    if (b.gap() <= opts.tol || p.din * p.dout > kCertifiedDimCap) {
        return b;
    }
    run_admm(p, opts, b);
    state_certificates(p, b);
    return b;
}

DistanceInterval to_interval(const Bounds& b, double tol, bool certifiable) {
    DistanceInterval iv;
    iv.lower = std::max(0.0, b.lower);
    // Both endpoints carry round-off; when they cross, the value is pinned.
    iv.upper = std::max(b.upper, iv.lower);
    iv.lower_method = b.lower_method;
    iv.upper_method = b.upper_method;
    iv.certified = certifiable && iv.width() <= tol;
    return iv;
}

// Smallest eigenvalue of X + X^dagger, X = V_phi^dagger (I (x) U) V_psi.
// ||V_phi - (I (x) U) V_psi||^2 = 2 - that value.
struct AlignmentScore {
    double lambda_min;
    ComplexMatrix ascent;  // direction N^dagger in U-space
};

AlignmentScore alignment_score(const ChannelPairRep& rep, const ComplexMatrix& u) {
    ComplexMatrix vu = act_on_environment(rep.vpsi, rep.dout, u);
    ComplexMatrix x = rep.vphi.adjoint() * vu;
    auto eig = hermitian_eig((x + x.adjoint()).hermitian_part(), 1e-8);
    const std::size_t n = eig.values.size();
    const double lmin = eig.values.back();
    // Soft-min weights over the bottom of the spectrum.
    const double temp = 1e-3;
    std::vector<double> w(n);
    double total = 0;
    for (std::size_t i = 0; i < n; ++i) {
        w[i] = std::exp(-(eig.values[i] - lmin) / temp);
        total += w[i];
    }
    SubsystemShape be({"B", "E"}, {rep.dout, rep.denv});
    ComplexMatrix nsum(rep.denv, rep.denv);
    for (std::size_t i = 0; i < n; ++i) {
        if (w[i] / total < 1e-8) {
            continue;
        }
        ComplexMatrix col(eig.vectors.rows(), 1);
        for (std::size_t r = 0; r < col.rows(); ++r) {
            col(r, 0) = eig.vectors(r, i);
        }
        ComplexMatrix a = rep.vphi * col;
        ComplexMatrix bvec = rep.vpsi * col;
        nsum += partial_trace(bvec * a.adjoint(), be, {"E"}) * (w[i] / total);
    }
    return {lmin, nsum.adjoint()};
}

ComplexMatrix refine_alignment(const ChannelPairRep& rep, ComplexMatrix u, int iterations) {
    AlignmentScore cur = alignment_score(rep, u);
    double step = 0.5;
    for (int it = 0; it < iterations && step > 1e-9; ++it) {
        double scale = cur.ascent.frobenius_norm();
        if (scale == 0) {
            break;
        }
        ComplexMatrix cand = polar_isometry(u + cur.ascent * (step / scale));
        AlignmentScore next = alignment_score(rep, cand);
        if (next.lambda_min > cur.lambda_min) {
            u = std::move(cand);
            cur = std::move(next);
            step = std::min(1.0, step * 1.5);
        } else {
            step *= 0.5;
        }
    }
    return u;
}

}  // namespace

double diamond_probe(const Channel& phi, const Channel& psi, const ComplexMatrix& v) {
    DiamondProblem p = make_problem(phi, psi);
    if (v.rows() != p.din * p.din || v.cols() != 1) {
        throw ArgumentError("diamond_probe: probe must be a din^2 column vector");
    }
    return trace_norm(delta_output(p, v));
}

DistanceInterval diamond_norm_bounds(const Channel& phi, const Channel& psi, const DiamondOptions& opts) {
    if (!(opts.tol > 0)) {
        throw ArgumentError("diamond_norm: tol must be positive");
    }
    Bounds b = solve_diamond(phi, psi, opts);
    return to_interval(b, opts.tol, phi.din() * phi.dout() <= kCertifiedDimCap);
}

DistanceInterval diamond_norm(const Channel& phi, const Channel& psi, const DiamondOptions& opts) {
    DistanceInterval iv = diamond_norm_bounds(phi, psi, opts);
    if (phi.din() * phi.dout() <= kCertifiedDimCap && iv.width() > std::max(opts.tol, 1e-4)) {
        throw ConvergenceError("diamond_norm: gap " + std::to_string(iv.width()) + " after iteration cap", iv);
    }
    return iv;
}

double isometry_distance(const ChannelPairRep& rep, const ComplexMatrix& u) {
    return operator_norm(rep.vphi - act_on_environment(rep.vpsi, rep.dout, u));
}

ComplexMatrix frobenius_optimal_alignment(const ChannelPairRep& rep) {
    SubsystemShape be({"B", "E"}, {rep.dout, rep.denv});
    ComplexMatrix overlap = partial_trace(rep.vpsi * rep.vphi.adjoint(), be, {"E"});
    return polar_isometry(overlap.adjoint());
}

DistanceInterval bures_distance(const Channel& phi, const Channel& psi, const BuresOptions& opts) {
    ChannelPairRep rep = pair_common_rep(phi, psi);
    DistanceInterval diamond = diamond_norm_bounds(phi, psi, opts.diamond);

    DistanceInterval iv;
    iv.lower = 0.5 * diamond.lower;
    iv.lower_method = "half-diamond-lower";
    iv.upper = std::sqrt(std::max(0.0, diamond.upper));
    iv.upper_method = "sqrt-diamond-upper";

    auto consider = [&](const ComplexMatrix& u, const std::string& tag) {
        double raw = isometry_distance(rep, u);
        if (raw < iv.upper) {
            iv.upper = raw;
            iv.upper_method = tag;
        }
        if (raw == 0.0 || opts.refine_iterations <= 0) {
            return;
        }
        double refined = isometry_distance(rep, refine_alignment(rep, u, opts.refine_iterations));
        if (refined < iv.upper) {
            iv.upper = refined;
            iv.upper_method = tag + "+refined";
        }
    };
    consider(ComplexMatrix::identity(rep.denv), "isometry-identity");
    consider(frobenius_optimal_alignment(rep), "isometry-frobenius");
    Rng rng(opts.seed);
    for (int r = 0; r < opts.restarts; ++r) {
        consider(random_unitary(rep.denv, rng), "isometry-restart");
    }
    iv.upper = std::max(iv.upper, iv.lower);
    iv.certified = diamond.certified;
    return iv;
}

double erasure_bures_upper(std::size_t d, double x) {
    if (d == 0) {
        throw ArgumentError("erasure_bures_upper: d must be positive");
    }
    if (!(x >= 0.0 && x <= 0.5)) {
        throw ArgumentError("erasure_bures_upper: x outside [0, 1/2]");
    }
    // 2 - a - b rewritten as 8x^2 / ((1+a)(1+b)(a+b)) to avoid cancellation.
    const double a = std::sqrt(1.0 - 2.0 * x);
    const double b = std::sqrt(1.0 + 2.0 * x);
    return std::sqrt(8.0 * x * x / ((1.0 + a) * (1.0 + b) * (a + b)));
}

}  // namespace qcb

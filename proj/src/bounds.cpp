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

#include "qcb/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "qcb/linalg.hpp"

namespace qcb {

namespace {

constexpr double kStructureTol = 1e-9;
constexpr double kSameChannelTol = 1e-12;

LabelSet join(std::initializer_list<const LabelSet*> parts) {
    LabelSet out;
    for (const LabelSet* p : parts) {
        out.insert(out.end(), p->begin(), p->end());
    }
    return out;
}

// cmi on the marginal carrying exactly the named labels.
double cmi_of(const DensityMatrix& omega, const LabelSet& a, const LabelSet& b, const LabelSet& c) {
    LabelSet all = join({&a, &b, &c});
    if (all.size() == omega.shape().count()) {
        return cmi(omega, a, b, c);
    }
    return cmi(omega.marginal(all), a, b, c);
}

double half_trace_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
    return 0.5 * trace_norm((a - b).hermitian_part());
}

void check_nonneg_eps(double eps, const char* where) {
    if (!(eps >= 0.0)) {
        throw ArgumentError(std::string(where) + ": eps must be >= 0");
    }
}

double log2_dim(double d, const char* where) {
    if (!(d >= 1.0)) {
        throw ArgumentError(std::string(where) + ": dimension must be >= 1");
    }
    return std::log2(d);
}

double pair_epsilon(const Channel& phi, const Channel& psi, bool same, const PairCheckOptions& opts) {
    if (same) {
        return 0.0;
    }
    if (opts.beta_upper) {
        return *opts.beta_upper;
    }
    return bures_distance(phi, psi, opts.bures).upper;
}

bool block_diagonal(const DensityMatrix& rho, const LabelSet& labels) {
    ComplexMatrix off = rho.matrix() - dephase(rho.matrix(), rho.shape(), labels);
    return trace_norm(off.hermitian_part()) <= kStructureTol;
}

Ensemble output_ensemble(const Channel& ch, const Ensemble& e) {
    std::vector<DensityMatrix> outs;
    outs.reserve(e.size());
    for (const auto& s : e.states()) {
        outs.push_back(apply(ch, s));
    }
    return Ensemble(e.probs(), std::move(outs));
}

}  // namespace

std::string to_string(EpsProvenance p) {
    switch (p) {
        case EpsProvenance::exact:
            return "exact";
        case EpsProvenance::interval_upper:
            return "interval-upper";
        case EpsProvenance::analytic:
            return "analytic";
    }
    return "?";
}

BoundReport make_report(std::string bound, double eps, EpsProvenance prov, double lhs, double rhs, std::size_t dA,
                        double d) {
    BoundReport r;
    r.bound = std::move(bound);
    r.eps = eps;
    r.eps_provenance = prov;
    r.lhs = lhs;
    r.rhs = rhs;
    r.margin = rhs - lhs;
    r.violated = r.margin < -r.slack;
    r.dA = dA;
    r.d = d;
    return r;
}

double rhs_prop1(double d, double eps, bool qc, bool concavity) {
    check_nonneg_eps(eps, "rhs_prop1");
    double ld = log2_dim(d, "rhs_prop1");
    return (qc ? 1.0 : 2.0) * eps * ld + (concavity ? 1.0 : 2.0) * g(eps);
}

double rhs_prop2(double dA, double eps, bool same_ch, bool same_outputs) {
    check_nonneg_eps(eps, "rhs_prop2");
    double ld = log2_dim(dA, "rhs_prop2");
    return eps * ld + (same_ch ? 0.0 : eps) + (same_outputs ? 1.0 : 2.0) * g(eps);
}

double rhs_prop3(double dA, double eps, bool same_ch) {
    check_nonneg_eps(eps, "rhs_prop3");
    double ld = log2_dim(dA, "rhs_prop3");
    return 2.0 * eps * ld + (same_ch ? 0.0 : 2.0 * eps) + 2.0 * g(eps);
}

double rhs_prop4(int n, double dA_geo, double eps) {
    if (n < 1) {
        throw ArgumentError("rhs_prop4: n must be >= 1");
    }
    check_nonneg_eps(eps, "rhs_prop4");
    double ld = log2_dim(dA_geo, "rhs_prop4");
    return 2.0 * n * (eps * (ld + 1.0) + g(eps));
}

double rhs_prop5_log2(CapacityKind kind, double log2_dA, double eps) {
    check_nonneg_eps(eps, "rhs_prop5");
    if (!(log2_dA >= 0.0)) {
        throw ArgumentError("rhs_prop5: log2 dA must be >= 0");
    }
    double base = eps * log2_dA + eps;
    switch (kind) {
        case CapacityKind::holevo_cap:
            return base + 2.0 * g(eps);
        case CapacityKind::classical:
        case CapacityKind::quantum:
        case CapacityKind::private_oneshot:
            return 2.0 * base + 2.0 * g(eps);
        case CapacityKind::private_cap:
            return 4.0 * base + 4.0 * g(eps);
        case CapacityKind::entanglement_assisted:
            break;
    }
    throw ArgumentError("rhs_prop5: no bound for kind " + to_string(kind));
}

double rhs_prop5(CapacityKind kind, double dA, double eps) {
    return rhs_prop5_log2(kind, log2_dim(dA, "rhs_prop5"), eps);
}

BoundReport check_prop1(const DensityMatrix& rho_ext, const DensityMatrix& sigma_ext, const Prop1Labels& labels,
                        bool qc, bool concavity) {
    if (!(rho_ext.shape() == sigma_ext.shape())) {
        throw ArgumentError("check_prop1: extensions live on different shapes");
    }
    const SubsystemShape& shape = rho_ext.shape();
    LabelSet bc = join({&labels.b, &labels.c});
    if (qc && (!block_diagonal(rho_ext, bc) || !block_diagonal(sigma_ext, bc))) {
        throw ContractError("check_prop1: qc variant requested but the states are not block diagonal on BC");
    }
    LabelSet ae = join({&labels.a, &labels.e});
    std::vector<ComplexMatrix> marg{rho_ext.marginal(ae).matrix(), sigma_ext.marginal(ae).matrix()};
    const std::size_t d = support_dim(marg);
    const double eps = half_trace_distance(rho_ext.matrix(), sigma_ext.matrix());

    double lhs = std::abs(cmi_of(rho_ext, labels.a, labels.b, labels.c) -
                          cmi_of(sigma_ext, labels.a, labels.b, labels.c));
    std::string id = qc ? "prop1-qc" : "prop1";
    if (concavity) {
        id += "-concave";
    }
    return make_report(id, eps, EpsProvenance::exact, lhs, rhs_prop1(static_cast<double>(d), eps, qc, concavity),
                       shape.dim_of(labels.a), static_cast<double>(d));
}

bool same_channel(const Channel& phi, const Channel& psi) {
    return phi.din() == psi.din() && phi.dout() == psi.dout() &&
           max_abs_diff(phi.choi(), psi.choi()) <= kSameChannelTol;
}

BoundReport check_prop2(const Channel& phi, const Channel& psi, const Ensemble& e, const Ensemble& f,
                        bool same_outputs, const PairCheckOptions& opts) {
    if (phi.din() != psi.din() || phi.dout() != psi.dout()) {
        throw ArgumentError("check_prop2: channels differ in din/dout");
    }
    if (e.shape().total() != phi.din() || f.shape().total() != phi.din()) {
        throw ArgumentError("check_prop2: ensemble dimension differs from the channel input");
    }
    const std::size_t m = std::max(e.size(), f.size());
    Ensemble ep = e.padded(m);
    Ensemble fp = f.padded(m);
    Ensemble oe = output_ensemble(phi, ep);
    Ensemble of = output_ensemble(psi, fp);
    if (same_outputs) {
        for (std::size_t i = 0; i < m; ++i) {
            if (max_abs_diff(oe.state(i).matrix(), of.state(i).matrix()) > kStructureTol) {
                throw ContractError("check_prop2: same_outputs requested but output states differ");
            }
        }
    }
    const bool same = same_channel(phi, psi);
    const double eps = ensemble_distance(ep, fp) + pair_epsilon(phi, psi, same, opts);

    std::vector<ComplexMatrix> support;
    for (const Ensemble* x : {&ep, &fp}) {
        for (std::size_t i = 0; i < m; ++i) {
            if (x->prob(i) > 0) {
                support.push_back(x->state(i).matrix());
            }
        }
    }
    const std::size_t dA = support_dim(support);
    const double lhs = std::abs(holevo_quantity(oe) - holevo_quantity(of));
    std::string id = "prop2";
    if (same) {
        id += "-same-channel";
    }
    if (same_outputs) {
        id += "-same-outputs";
    }
    return make_report(id, eps, same ? EpsProvenance::exact : EpsProvenance::interval_upper, lhs,
                       rhs_prop2(static_cast<double>(dA), eps, same, same_outputs), phi.din(),
                       static_cast<double>(dA));
}

BoundReport check_prop3(const Channel& phi, const Channel& psi, const DensityMatrix& rho, const DensityMatrix& sigma,
                        const Prop3Labels& labels, const PairCheckOptions& opts) {
    if (!(rho.shape() == sigma.shape())) {
        throw ArgumentError("check_prop3: rho and sigma live on different shapes");
    }
    if (phi.din() != psi.din() || phi.dout() != psi.dout()) {
        throw ArgumentError("check_prop3: channels differ in din/dout");
    }
    DensityMatrix out_rho = apply_on(phi, rho, labels.a, labels.b);
    DensityMatrix out_sigma = apply_on(psi, sigma, labels.a, labels.b);
    const LabelSet b{labels.b};
    const double lhs =
        std::abs(cmi_of(out_rho, b, labels.d, labels.c) - cmi_of(out_sigma, b, labels.d, labels.c));

    const bool same = same_channel(phi, psi);
    const double eps = half_trace_distance(rho.matrix(), sigma.matrix()) + pair_epsilon(phi, psi, same, opts);
    std::vector<ComplexMatrix> marg{rho.marginal({labels.a}).matrix(), sigma.marginal({labels.a}).matrix()};
    const std::size_t dA = support_dim(marg);
    return make_report(same ? "prop3-same-channel" : "prop3", eps,
                       same ? EpsProvenance::exact : EpsProvenance::interval_upper, lhs,
                       rhs_prop3(static_cast<double>(dA), eps, same), phi.din(), static_cast<double>(dA));
}

Prop4Labels Prop4Labels::numbered(int n) {
    Prop4Labels l;
    for (int k = 1; k <= n; ++k) {
        l.inputs.push_back("A" + std::to_string(k));
        l.outputs.push_back("B" + std::to_string(k));
    }
    return l;
}

BoundReport check_prop4(const Channel& phi, const Channel& psi, const DensityMatrix& rho, const Prop4Labels& labels,
                        const PairCheckOptions& opts) {
    const std::size_t n = labels.inputs.size();
    if (n == 0 || labels.outputs.size() != n) {
        throw ArgumentError("check_prop4: need n >= 1 input labels and as many output labels");
    }
    if (phi.din() != psi.din() || phi.dout() != psi.dout()) {
        throw ArgumentError("check_prop4: channels differ in din/dout");
    }
    DensityMatrix out_phi = rho;
    DensityMatrix out_psi = rho;
    double log_ranks = 0;
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<ComplexMatrix> marg{rho.marginal({labels.inputs[k]}).matrix()};
        log_ranks += std::log(static_cast<double>(support_dim(marg)));
        out_phi = apply_on(phi, out_phi, labels.inputs[k], labels.outputs[k]);
        out_psi = apply_on(psi, out_psi, labels.inputs[k], labels.outputs[k]);
    }
    const double dA_geo = std::exp(log_ranks / static_cast<double>(n));
    const double lhs = std::abs(cmi_of(out_phi, labels.outputs, labels.d, labels.c) -
                                cmi_of(out_psi, labels.outputs, labels.d, labels.c));
    const bool same = same_channel(phi, psi);
    const double eps = pair_epsilon(phi, psi, same, opts);
    return make_report("prop4", eps, same ? EpsProvenance::exact : EpsProvenance::interval_upper, lhs,
                       rhs_prop4(static_cast<int>(n), dA_geo, eps), phi.din(), dA_geo);
}

std::vector<BoundReport> check_prop5_erasure(std::size_t d, double p, double q, bool prefer_analytic,
                                             const BuresOptions& bures) {
    if (d < 2) {
        throw ArgumentError("check_prop5_erasure: d must be >= 2");
    }
    auto cp = erasure_capacities(d, p);
    auto cq = erasure_capacities(d, q);

    double eps = 0;
    EpsProvenance prov = EpsProvenance::exact;
    const double lo = std::min(p, q);
    const double hi = std::max(p, q);
    if (p == q) {
        eps = 0;
    } else if (prefer_analytic && hi == 0.5) {
        eps = erasure_bures_upper(d, 0.5 - lo);
        prov = EpsProvenance::analytic;
    } else {
        eps = bures_distance(erasure_channel(d, p), erasure_channel(d, q), bures).upper;
        prov = EpsProvenance::interval_upper;
    }

    std::vector<BoundReport> out;
    const double ld = std::log2(static_cast<double>(d));
    for (CapacityKind kind : kBoundedCapacityKinds) {
        double lhs = std::abs(cp.at(kind).value - cq.at(kind).value);
        out.push_back(make_report("prop5-" + to_string(kind), eps, prov, lhs, rhs_prop5_log2(kind, ld, eps), d,
                                  static_cast<double>(d)));
    }
    return out;
}

TightnessRow tightness_row(double x, double log2_d) {
    if (!(x >= 0.0 && x <= 0.5)) {
        throw ArgumentError("tightness_row: x outside [0, 1/2]");
    }
    if (!(log2_d >= 0.0)) {
        throw ArgumentError("tightness_row: log2 d must be >= 0");
    }
    TightnessRow row;
    row.x = x;
    row.log2_d = log2_d;
    // The closed form does not depend on d; any d >= 1 gives the same value.
    row.beta_upper = erasure_bures_upper(1, x);
    auto lo = erasure_capacities_log2(log2_d, 0.5 - x);
    auto hi = erasure_capacities_log2(log2_d, 0.5);
    row.lhs_q = std::abs(lo.at(CapacityKind::quantum).value - hi.at(CapacityKind::quantum).value);
    row.rhs_qc = rhs_prop5_log2(CapacityKind::quantum, log2_d, row.beta_upper);
    row.ratio = row.rhs_qc > 0 ? row.lhs_q / row.rhs_qc : 1.0;
    return row;
}

std::vector<BoundReport> check_auxiliary(const DensityMatrix& omega, const LabelSet& a, const LabelSet& b,
                                         const LabelSet& c, bool separable) {
    std::vector<BoundReport> out;
    const std::size_t da = omega.shape().dim_of(a);
    const double ha = marginal_entropy(omega, a);
    const double hb = marginal_entropy(omega, b);
    DensityMatrix ab = omega.marginal(join({&a, &b}));
    const double mi = mutual_information(ab, a, b);
    out.push_back(make_report("mi-ub", 0, EpsProvenance::exact, mi, 2.0 * std::min(ha, hb), da, da));
    if (separable) {
        if (!block_diagonal(ab, b)) {
            throw ContractError("check_auxiliary: separable variant needs a state block diagonal on B");
        }
        out.push_back(make_report("mi-ub-sep", 0, EpsProvenance::exact, mi, std::min(ha, hb), da, da));
    }
    if (!c.empty()) {
        const double i = cmi_of(omega, a, b, c);
        const double hac = marginal_entropy(omega, join({&a, &c}));
        const double hbc = marginal_entropy(omega, join({&b, &c}));
        out.push_back(make_report("cmi-ub", 0, EpsProvenance::exact, i, 2.0 * std::min({ha, hb, hac, hbc}), da, da));
        out.push_back(make_report("ssa", 0, EpsProvenance::exact, -i, 0.0, da, da));
    }
    return out;
}

BoundReport check_almost_convexity(const DensityMatrix& rho, const DensityMatrix& sigma, double lambda,
                                   const LabelSet& a, const LabelSet& b, const LabelSet& c) {
    if (!(lambda > 0.0 && lambda < 1.0)) {
        throw ArgumentError("check_almost_convexity: lambda must lie in (0, 1)");
    }
    DensityMatrix m = mix(lambda, rho, sigma);
    const double lhs = std::abs(lambda * cmi_of(rho, a, b, c) + (1 - lambda) * cmi_of(sigma, a, b, c) -
                                cmi_of(m, a, b, c));
    const std::size_t da = rho.shape().dim_of(a);
    return make_report("f-c-b", 0, EpsProvenance::exact, lhs, h2(lambda), da, da);
}

BoundReport check_chi_continuity(const Ensemble& e, const Ensemble& f) {
    const std::size_t m = std::max(e.size(), f.size());
    Ensemble ep = e.padded(m);
    Ensemble fp = f.padded(m);
    bool same_states = true;
    for (std::size_t i = 0; i < m && same_states; ++i) {
        same_states = max_abs_diff(ep.state(i).matrix(), fp.state(i).matrix()) <= kStructureTol;
    }
    const double eps = ensemble_distance(ep, fp);
    const std::size_t dim = e.shape().total();
    const double dmin = static_cast<double>(std::min(dim, m));
    const double lhs = std::abs(holevo_quantity(ep) - holevo_quantity(fp));
    const double rhs = eps * std::log2(dmin) + (same_states ? 1.0 : 2.0) * g(eps);
    return make_report(same_states ? "chi-cb-same-states" : "chi-cb", eps, EpsProvenance::exact, lhs, rhs, dim, dmin);
}

double chain_rule_defect(const DensityMatrix& omega, const LabelSet& x, const LabelSet& y, const LabelSet& z,
                         const LabelSet& c) {
    LabelSet yz = join({&y, &z});
    LabelSet yc = join({&y, &c});
    return cmi_of(omega, x, yz, c) - cmi_of(omega, x, y, c) - cmi_of(omega, x, z, yc);
}

}  // namespace qcb

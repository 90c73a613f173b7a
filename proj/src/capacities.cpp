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

#include "qcb/capacities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "qcb/errors.hpp"
#include "qcb/linalg.hpp"
#include "qcb/rng.hpp"

namespace qcb {

namespace {

// log2 on the support of a PSD matrix (relative cutoff), 0 on the kernel.
ComplexMatrix log2_on_support(const ComplexMatrix& m) {
    auto eig = hermitian_eig(m.hermitian_part(), 1e-8);
    const double top = std::max(eig.values.front(), 0.0);
    const double cut = top * 1e-15;
    return spectral_apply(eig, [cut](double x) { return x > cut && x > 0 ? std::log2(x) : 0.0; });
}

double mutual_info_with(const Channel& ch, const Channel& comp, const ComplexMatrix& rho) {
    return entropy(rho) + entropy(ch.apply(rho)) - entropy(comp.apply(rho));
}

double holevo_of_outputs(const std::vector<double>& p, const std::vector<ComplexMatrix>& outs) {
    ComplexMatrix avg(outs.front().rows(), outs.front().cols());
    double inner_h = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) {
            continue;
        }
        avg += outs[i] * p[i];
        inner_h += p[i] * entropy(outs[i]);
    }
    return entropy(avg) - inner_h;
}

struct PureEnsemble {
    std::vector<double> p;
    std::vector<ComplexMatrix> psi;
};

std::vector<ComplexMatrix> outputs_of(const Channel& ch, const PureEnsemble& e) {
    std::vector<ComplexMatrix> outs;
    outs.reserve(e.psi.size());
    for (const auto& v : e.psi) {
        outs.push_back(ch.apply(outer(v)).hermitian_part());
    }
    return outs;
}

double optimise_ensemble(const Channel& ch, PureEnsemble& e, int iterations) {
    const std::size_t m = e.p.size();
    auto outs = outputs_of(ch, e);
    double chi = holevo_of_outputs(e.p, outs);
    double step = 0.5;
    for (int it = 0; it < iterations; ++it) {
        const double start = chi;
        // Blahut-Arimoto reweighting: p_i <- p_i 2^{D(out_i || avg)}.
        ComplexMatrix avg(outs.front().rows(), outs.front().cols());
        for (std::size_t i = 0; i < m; ++i) {
            avg += outs[i] * e.p[i];
        }
        ComplexMatrix log_avg = log2_on_support(avg);
        std::vector<double> w(m, 0.0);
        std::vector<double> div(m, 0.0);
        double dmax = -std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < m; ++i) {
            if (e.p[i] <= 0) {
                continue;
            }
            div[i] = -entropy(outs[i]) - inner(outs[i], log_avg).real();
            dmax = std::max(dmax, div[i]);
        }
        double total = 0;
        for (std::size_t i = 0; i < m; ++i) {
            if (e.p[i] > 0) {
                w[i] = e.p[i] * std::exp2(div[i] - dmax);
                total += w[i];
            }
        }
        for (std::size_t i = 0; i < m; ++i) {
            w[i] /= total;
        }
        double chi_w = holevo_of_outputs(w, outs);
        if (chi_w >= chi) {
            e.p = std::move(w);
            chi = chi_w;
        }

        // Gradient step on the states, all at once, kept only if chi improves.
        avg = ComplexMatrix(outs.front().rows(), outs.front().cols());
        for (std::size_t i = 0; i < m; ++i) {
            avg += outs[i] * e.p[i];
        }
        log_avg = log2_on_support(avg);
        std::vector<ComplexMatrix> dirs(m);
        for (std::size_t i = 0; i < m; ++i) {
            if (e.p[i] > 1e-14) {
                dirs[i] = ch.apply_adjoint(log2_on_support(outs[i]) - log_avg).hermitian_part() * e.psi[i];
            }
        }
        for (int tries = 0; tries < 20; ++tries) {
            PureEnsemble cand = e;
            for (std::size_t i = 0; i < m; ++i) {
                if (dirs[i].empty()) {
                    continue;
                }
                ComplexMatrix v = e.psi[i] + dirs[i] * step;
                v *= 1.0 / v.frobenius_norm();
                cand.psi[i] = std::move(v);
            }
            auto cand_outs = outputs_of(ch, cand);
            double c = holevo_of_outputs(cand.p, cand_outs);
            if (c > chi) {
                e = std::move(cand);
                outs = std::move(cand_outs);
                chi = c;
                step = std::min(4.0, step * 1.5);
                break;
            }
            step *= 0.5;
        }
        if (chi - start <= 1e-13) {
            break;
        }
    }
    return chi;
}

}  // namespace

std::string to_string(CapacityKind k) {
    switch (k) {
        case CapacityKind::holevo_cap:
            return "holevo-cap";
        case CapacityKind::classical:
            return "classical";
        case CapacityKind::quantum:
            return "quantum";
        case CapacityKind::private_oneshot:
            return "private-oneshot";
        case CapacityKind::private_cap:
            return "private";
        case CapacityKind::entanglement_assisted:
            return "entanglement-assisted";
    }
    return "?";
}

CapacityKind parse_capacity_kind(const std::string& name) {
    for (CapacityKind k : {CapacityKind::holevo_cap, CapacityKind::classical, CapacityKind::quantum,
                           CapacityKind::private_oneshot, CapacityKind::private_cap,
                           CapacityKind::entanglement_assisted}) {
        if (to_string(k) == name) {
            return k;
        }
    }
    throw ArgumentError("unknown capacity kind '" + name + "'");
}

std::string to_string(Exactness e) {
    switch (e) {
        case Exactness::closed_form:
            return "closed-form";
        case Exactness::concave_certified:
            return "concave-certified";
        case Exactness::heuristic:
            return "heuristic";
        case Exactness::heuristic_lower_bound:
            return "heuristic-lower-bound";
    }
    return "?";
}

DensityMatrix purification(const DensityMatrix& rho) {
    auto eig = hermitian_eig(rho.matrix());
    const std::size_t d = rho.dim();
    const double top = eig.values.front();
    std::size_t rank = 0;
    while (rank < d && eig.values[rank] > 1e-14 * top) {
        ++rank;
    }
    ComplexMatrix v(d * rank, 1);
    double norm2 = 0;
    for (std::size_t i = 0; i < rank; ++i) {
        const double s = std::sqrt(eig.values[i]);
        norm2 += eig.values[i];
        for (std::size_t a = 0; a < d; ++a) {
            v(a * rank + i, 0) = s * eig.vectors(a, i);
        }
    }
    v *= 1.0 / std::sqrt(norm2);
    return DensityMatrix::pure(v, SubsystemShape({"A", "R"}, {d, rank}));
}

double mutual_info_from_purification(const Channel& ch, const DensityMatrix& psi_ar) {
    DensityMatrix out = apply_on(ch, psi_ar, "A", "B");
    return mutual_information(out, {"B"}, {"R"});
}

double mutual_info_of_channel(const Channel& ch, const DensityMatrix& rho) {
    if (rho.dim() != ch.din()) {
        throw ArgumentError("mutual_info_of_channel: state dimension differs from din");
    }
    return mutual_info_from_purification(ch, purification(rho));
}

double mutual_info_entropic(const Channel& ch, const ComplexMatrix& rho) {
    return mutual_info_with(ch, complementary(ch), rho);
}

double coherent_info(const Channel& ch, const DensityMatrix& rho) {
    if (rho.dim() != ch.din()) {
        throw ArgumentError("coherent_info: state dimension differs from din");
    }
    return entropy(ch.apply(rho.matrix())) - entropy(complementary(ch).apply(rho.matrix()));
}

CapacityValue ea_capacity(const Channel& ch, const EaOptions& opts) {
    if (!(opts.tol > 0)) {
        throw ArgumentError("ea_capacity: tol must be positive");
    }
    const Channel comp = complementary(ch);
    const std::size_t d = ch.din();
    ComplexMatrix rho = ComplexMatrix::identity(d) * (1.0 / static_cast<double>(d));
    if (opts.seed != 0) {
        Rng rng(opts.seed);
        rho = (random_state(d, rng) * 0.5 + rho * 0.5).hermitian_part();
    }

    auto gradient = [&](const ComplexMatrix& r) {
        ComplexMatrix g = log2_on_support(r) * -1.0;
        g -= ch.apply_adjoint(log2_on_support(ch.apply(r)));
        g += comp.apply_adjoint(log2_on_support(comp.apply(r)));
        return g.hermitian_part();
    };
    auto fw_gap = [](const ComplexMatrix& g, const ComplexMatrix& r) {
        return std::max(0.0, hermitian_eigenvalues(g).front() - inner(g, r).real());
    };

    double value = mutual_info_with(ch, comp, rho);
    ComplexMatrix grad = gradient(rho);
    double gap = fw_gap(grad, rho);
    double step = 1.0;
    for (int it = 0; it < opts.max_iterations && gap > opts.tol && step > 1e-14; ++it) {
        ComplexMatrix log_rho =
            spectral_apply(hermitian_eig(rho), [](double x) { return std::log(std::max(x, 1e-300)); });
        auto eig = hermitian_eig((log_rho + grad * step).hermitian_part());
        const double top = eig.values.front();
        ComplexMatrix cand = spectral_apply(eig, [top](double x) { return std::exp(x - top); });
        cand *= 1.0 / cand.trace().real();
        cand = cand.hermitian_part();
        const double v = mutual_info_with(ch, comp, cand);
        if (v > value) {
            rho = std::move(cand);
            value = v;
            grad = gradient(rho);
            gap = fw_gap(grad, rho);
            step = std::min(step * 2.0, 64.0);
        } else {
            step *= 0.5;
        }
    }
    CapacityValue out;
    out.kind = CapacityKind::entanglement_assisted;
    out.value = std::max(0.0, value);
    out.residual = gap;
    out.tag = gap <= opts.tol ? Exactness::concave_certified : Exactness::heuristic;
    return out;
}

CapacityValue holevo_cap_heuristic(const Channel& ch, const HolevoOptions& opts) {
    const std::size_t d = ch.din();
    const std::size_t m = std::max(opts.m_max, d * d);
    const int restarts = std::max(1, opts.restarts);
    std::vector<double> values(static_cast<std::size_t>(restarts), 0.0);

#pragma omp parallel for schedule(dynamic)
    for (int r = 0; r < restarts; ++r) {
        PureEnsemble e;
        if (r == 0) {
            for (std::size_t i = 0; i < d; ++i) {
                ComplexMatrix v(d, 1);
                v(i, 0) = 1.0;
                e.psi.push_back(std::move(v));
                e.p.push_back(1.0 / static_cast<double>(d));
            }
        } else {
            Rng rng(Rng::child_seed(opts.seed, static_cast<uint64_t>(r)));
            double total = 0;
            for (std::size_t i = 0; i < m; ++i) {
                e.psi.push_back(random_pure(d, rng));
                e.p.push_back(0.05 + rng.uniform());
                total += e.p.back();
            }
            for (double& p : e.p) {
                p /= total;
            }
        }
        values[static_cast<std::size_t>(r)] = optimise_ensemble(ch, e, opts.iterations);
    }
    CapacityValue out;
    out.kind = CapacityKind::holevo_cap;
    out.value = std::max(0.0, *std::max_element(values.begin(), values.end()));
    out.tag = Exactness::heuristic_lower_bound;
    return out;
}

double private_oneshot_objective(const Channel& ch, const Ensemble& e) {
    if (e.shape().total() != ch.din()) {
        throw ArgumentError("private_oneshot_objective: ensemble dimension differs from din");
    }
    const Channel comp = complementary(ch);
    std::vector<ComplexMatrix> out_b;
    std::vector<ComplexMatrix> out_e;
    for (const auto& s : e.states()) {
        out_b.push_back(ch.apply(s.matrix()).hermitian_part());
        out_e.push_back(comp.apply(s.matrix()).hermitian_part());
    }
    return holevo_of_outputs(e.probs(), out_b) - holevo_of_outputs(e.probs(), out_e);
}

std::map<CapacityKind, CapacityValue> erasure_capacities_log2(double log2_d, double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw ArgumentError("erasure_capacities: p outside [0, 1]");
    }
    if (!(log2_d >= 0.0) || !std::isfinite(log2_d)) {
        throw ArgumentError("erasure_capacities: log2 d must be finite and >= 0");
    }
    const double c = (1.0 - p) * log2_d;
    const double q = std::max((1.0 - 2.0 * p) * log2_d, 0.0);
    std::map<CapacityKind, CapacityValue> out;
    out[CapacityKind::holevo_cap] = {CapacityKind::holevo_cap, c, Exactness::closed_form, 0};
    out[CapacityKind::classical] = {CapacityKind::classical, c, Exactness::closed_form, 0};
    out[CapacityKind::quantum] = {CapacityKind::quantum, q, Exactness::closed_form, 0};
    out[CapacityKind::private_oneshot] = {CapacityKind::private_oneshot, q, Exactness::closed_form, 0};
    out[CapacityKind::private_cap] = {CapacityKind::private_cap, q, Exactness::closed_form, 0};
    return out;
}

std::map<CapacityKind, CapacityValue> erasure_capacities(std::size_t d, double p) {
    if (d < 2) {
        throw ArgumentError("erasure_capacities: d must be >= 2");
    }
    return erasure_capacities_log2(std::log2(static_cast<double>(d)), p);
}

}  // namespace qcb

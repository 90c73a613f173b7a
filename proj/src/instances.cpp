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

#include "qcb/instances.hpp"

#include <cmath>

#include "qcb/errors.hpp"
#include "qcb/linalg.hpp"

namespace qcb {

double log_uniform(Rng& rng, double lo, double hi) {
    if (!(lo > 0 && hi >= lo)) {
        throw ArgumentError("log_uniform: need 0 < lo <= hi");
    }
    return std::exp(rng.uniform(std::log(lo), std::log(hi)));
}

Channel random_channel(std::size_t din, std::size_t dout, std::size_t kraus, Rng& rng) {
    if (din == 0 || dout == 0) {
        throw ArgumentError("random_channel: dimensions must be positive");
    }
    kraus = std::max({kraus, std::size_t{1}, (din + dout - 1) / dout});
    return Channel::from_stinespring(random_isometry(din, dout * kraus, rng), dout);
}

Channel perturb_channel(const Channel& ch, double strength, Rng& rng) {
    const ComplexMatrix& v = ch.stinespring();
    ComplexMatrix moved = v + ginibre(v.rows(), v.cols(), rng) * (strength / std::sqrt(static_cast<double>(v.rows())));
    return Channel::from_stinespring(orthonormalize_columns(moved), ch.dout());
}

DensityMatrix random_density(const SubsystemShape& shape, Rng& rng, std::size_t rank) {
    const std::size_t n = shape.total();
    if (rank == 0) {
        rank = 1 + static_cast<std::size_t>(rng.below(n));
    }
    return {random_state(n, rng, rank), shape};
}

DensityMatrix perturb_state(const DensityMatrix& rho, double t, Rng& rng) {
    return mix(1.0 - t, rho, random_density(rho.shape(), rng));
}

namespace {

std::vector<double> random_weights(std::size_t m, Rng& rng) {
    std::vector<double> w(m);
    double total = 0;
    for (auto& x : w) {
        x = -std::log(1.0 - rng.uniform());
        total += x;
    }
    for (auto& x : w) {
        x /= total;
    }
    return w;
}

}  // namespace

Ensemble random_ensemble(std::size_t dim, std::size_t m, Rng& rng, const std::string& label) {
    if (m == 0) {
        throw ArgumentError("random_ensemble: m must be positive");
    }
    std::vector<DensityMatrix> states;
    for (std::size_t i = 0; i < m; ++i) {
        states.push_back(random_density(SubsystemShape::single(label, dim), rng));
    }
    return Ensemble(random_weights(m, rng), std::move(states));
}

Ensemble perturb_ensemble(const Ensemble& e, double t, Rng& rng) {
    std::vector<double> w = random_weights(e.size(), rng);
    std::vector<double> p(e.size());
    std::vector<DensityMatrix> states;
    double total = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        p[i] = (1.0 - t) * e.prob(i) + t * w[i];
        total += p[i];
        states.push_back(perturb_state(e.state(i), t, rng));
    }
    for (auto& x : p) {
        x /= total;
    }
    return Ensemble(std::move(p), std::move(states));
}

std::pair<DensityMatrix, DensityMatrix> random_state_pair(const SubsystemShape& shape, Rng& rng) {
    DensityMatrix rho = random_density(shape, rng);
    if (rng.uniform() < 0.5) {
        return {rho, random_density(shape, rng)};
    }
    double t = log_uniform(rng, 1e-3, 1.0);
    return {rho, perturb_state(rho, t, rng)};
}

std::pair<DensityMatrix, DensityMatrix> random_qc_pair(std::size_t da, std::size_t db, std::size_t dc, std::size_t de,
                                                       Rng& rng) {
    const std::size_t m = db * dc;
    SubsystemShape ae({"A", "E"}, {da, de});
    SubsystemShape full({"A", "E", "B", "C"}, {da, de, db, dc});
    auto build = [&](const Ensemble& ens) { return DensityMatrix(qc_state(ens, "X").matrix(), full); };
    auto make = [&] {
        std::vector<DensityMatrix> states;
        for (std::size_t i = 0; i < m; ++i) {
            states.push_back(random_density(ae, rng));
        }
        return Ensemble(random_weights(m, rng), std::move(states));
    };
    Ensemble e = make();
    if (rng.uniform() < 0.5) {
        return {build(e), build(make())};
    }
    return {build(e), build(perturb_ensemble(e, log_uniform(rng, 1e-3, 1.0), rng))};
}

}  // namespace qcb

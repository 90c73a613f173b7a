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

#include "qcb/ensembles.hpp"

#include <cmath>
#include <numeric>

#include "qcb/errors.hpp"

namespace qcb {

Ensemble::Ensemble(std::vector<double> probs, std::vector<DensityMatrix> states)
    : probs_(std::move(probs)), states_(std::move(states)) {
    if (probs_.empty() || probs_.size() != states_.size()) {
        throw ArgumentError("ensemble: need equally many (>0) probabilities and states");
    }
    double total = 0;
    for (double p : probs_) {
        if (!(p >= 0.0)) {
            throw ArgumentError("ensemble: negative or NaN probability");
        }
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-10) {
        throw ArgumentError("ensemble: probabilities sum to " + std::to_string(total));
    }
    for (const auto& s : states_) {
        if (!(s.shape() == states_.front().shape())) {
            throw ArgumentError("ensemble: states live on different shapes");
        }
    }
}

Ensemble Ensemble::padded(std::size_t m) const {
    auto probs = probs_;
    auto states = states_;
    while (probs.size() < m) {
        probs.push_back(0.0);
        states.push_back(states_.front());
    }
    return {std::move(probs), std::move(states)};
}

DensityMatrix average_state(const Ensemble& e) {
    ComplexMatrix avg(e.state(0).dim(), e.state(0).dim());
    for (std::size_t i = 0; i < e.size(); ++i) {
        avg += e.state(i).matrix() * e.prob(i);
    }
    return {std::move(avg), e.shape()};
}

double holevo_quantity(const Ensemble& e) {
    double chi = entropy(average_state(e));
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e.prob(i) > 0) {
            chi -= e.prob(i) * entropy(e.state(i));
        }
    }
    return chi;
}

DensityMatrix qc_state(const Ensemble& e, const std::string& classical_label) {
    const std::size_t n = e.state(0).dim();
    const std::size_t m = e.size();
    ComplexMatrix w(n * m, n * m);
    for (std::size_t i = 0; i < m; ++i) {
        const auto& rho = e.state(i).matrix();
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) {
                w(r * m + i, c * m + i) = e.prob(i) * rho(r, c);
            }
        }
    }
    return {std::move(w), e.shape().concat(SubsystemShape::single(classical_label, m))};
}

double ensemble_distance(const Ensemble& e, const Ensemble& f) {
    if (!(e.shape() == f.shape())) {
        throw ArgumentError("ensemble_distance: shapes differ " + e.shape().str() + " vs " + f.shape().str());
    }
    const std::size_t m = std::max(e.size(), f.size());
    Ensemble ep = e.padded(m);
    Ensemble fp = f.padded(m);
    double total = 0;
    for (std::size_t i = 0; i < m; ++i) {
        total += trace_norm(ep.state(i).matrix() * ep.prob(i) - fp.state(i).matrix() * fp.prob(i));
    }
    return 0.5 * total;
}

}  // namespace qcb

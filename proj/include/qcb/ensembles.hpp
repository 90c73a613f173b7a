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

#include <string>
#include <vector>

#include "qcb/entropic.hpp"

namespace qcb {

/// Finite ensemble {p_i, rho_i} on one shape. Zero-probability items are kept,
/// so compared ensembles line up index by index.
class Ensemble {
   public:
    /// Throws ArgumentError on empty input, length mismatch, negative weights,
    /// weights not summing to 1 within 1e-10, or mixed shapes.
    Ensemble(std::vector<double> probs, std::vector<DensityMatrix> states);

    std::size_t size() const { return probs_.size(); }
    double prob(std::size_t i) const { return probs_[i]; }
    const DensityMatrix& state(std::size_t i) const { return states_[i]; }
    const std::vector<double>& probs() const { return probs_; }
    const std::vector<DensityMatrix>& states() const { return states_; }
    const SubsystemShape& shape() const { return states_.front().shape(); }

    /// Copy extended to m items with zero-probability copies of the first state.
    Ensemble padded(std::size_t m) const;

   private:
    std::vector<double> probs_;
    std::vector<DensityMatrix> states_;
};

DensityMatrix average_state(const Ensemble& e);

/// chi = H(average) - sum p_i H(rho_i), bits.
double holevo_quantity(const Ensemble& e);

/// sum_i p_i rho_i (x) |i><i| with the classical register appended as `classical_label`
/// (dimension m, computational basis in ensemble order).
DensityMatrix qc_state(const Ensemble& e, const std::string& classical_label = "X");

/// (1/2) sum_i ||p_i rho_i - q_i sigma_i||_1; the shorter ensemble is padded with
/// zero-weight items. Throws ArgumentError when the shapes differ.
double ensemble_distance(const Ensemble& e, const Ensemble& f);

}  // namespace qcb

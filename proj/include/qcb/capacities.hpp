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

#include <cstdint>
#include <map>
#include <string>

#include "qcb/channels.hpp"
#include "qcb/ensembles.hpp"
#include "qcb/entropic.hpp"

namespace qcb {

enum class CapacityKind { holevo_cap, classical, quantum, private_oneshot, private_cap, entanglement_assisted };
std::string to_string(CapacityKind k);
/// Accepts the names produced by to_string; throws ArgumentError otherwise.
CapacityKind parse_capacity_kind(const std::string& name);

/// The kinds covered by the capacity continuity bounds, in report order.
inline constexpr CapacityKind kBoundedCapacityKinds[] = {CapacityKind::holevo_cap, CapacityKind::classical,
                                                         CapacityKind::quantum, CapacityKind::private_oneshot,
                                                         CapacityKind::private_cap};

enum class Exactness { closed_form, concave_certified, heuristic, heuristic_lower_bound };
std::string to_string(Exactness e);

struct CapacityValue {
    CapacityKind kind = CapacityKind::holevo_cap;
    double value = 0;
    Exactness tag = Exactness::closed_form;
    /// Optimality residual of the last iterate (0 for closed forms).
    double residual = 0;
};

/// |rho^> = sum sqrt(lambda_i) |e_i>_A |i>_R over the support of rho, R = rank.
/// The result is labelled (A, R) regardless of the input label.
DensityMatrix purification(const DensityMatrix& rho);

/// I(B:R) of (ch (x) id_R)(psi) for a pure state psi labelled (A, R).
double mutual_info_from_purification(const Channel& ch, const DensityMatrix& psi_ar);
/// I(Phi, rho) via the spectral purification.
double mutual_info_of_channel(const Channel& ch, const DensityMatrix& rho);
/// H(rho) + H(Phi(rho)) - H(Phi^(rho)); same value without building R.
double mutual_info_entropic(const Channel& ch, const ComplexMatrix& rho);

/// H(Phi(rho)) - H(Phi^(rho)).
double coherent_info(const Channel& ch, const DensityMatrix& rho);

struct EaOptions {
    /// Frank-Wolfe gap target; the gap bounds C_EA - value. Round-off keeps it
    /// near 1e-8 on generic channels, so much tighter targets stall.
    double tol = 1e-6;
    int max_iterations = 5000;
    /// 0 starts at I/d; otherwise a random full-rank state drawn from this seed.
    uint64_t seed = 0;
};

/// sup_rho I(Phi, rho) by entropic mirror ascent with backtracking. The residual is
/// the Frank-Wolfe gap lambda_max(G) - Tr(G rho) of the gradient G, which bounds
/// the distance to the optimum of this concave problem; tag concave-certified when
/// it is <= tol, otherwise heuristic.
CapacityValue ea_capacity(const Channel& ch, const EaOptions& opts = {});

struct HolevoOptions {
    int restarts = 8;
    /// Ensemble size for random restarts; raised to din^2 when smaller.
    std::size_t m_max = 0;
    int iterations = 300;
    uint64_t seed = 0x401e;
};

/// Multi-start lower bound on the Holevo capacity over pure-state ensembles:
/// Blahut-Arimoto weight updates alternated with gradient steps on the states.
/// Restart 0 is the uniform computational-basis ensemble.
CapacityValue holevo_cap_heuristic(const Channel& ch, const HolevoOptions& opts = {});

/// chi_Phi(e) - chi_Phi^(e); may be negative.
double private_oneshot_objective(const Channel& ch, const Ensemble& e);

/// Closed forms for the erasure channel: C = Cbar = (1 - p) log d,
/// Q = C_p = Cbar_p = max((1 - 2p) log d, 0). Throws ArgumentError unless d >= 2
/// and p in [0, 1].
std::map<CapacityKind, CapacityValue> erasure_capacities(std::size_t d, double p);
/// Same with log2 d supplied directly.
std::map<CapacityKind, CapacityValue> erasure_capacities_log2(double log2_d, double p);

}  // namespace qcb

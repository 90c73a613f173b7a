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
#include <optional>
#include <string>
#include <vector>

#include "qcb/capacities.hpp"
#include "qcb/channels.hpp"
#include "qcb/distances.hpp"
#include "qcb/ensembles.hpp"
#include "qcb/entropic.hpp"

namespace qcb {

/// Margins below -kViolationSlack bits count as violations.
inline constexpr double kViolationSlack = 1e-7;

/// Where the epsilon fed into a right-hand side came from.
enum class EpsProvenance { exact, interval_upper, analytic };
std::string to_string(EpsProvenance p);

/// One evaluated inequality lhs <= rhs (both in bits).
struct BoundReport {
    std::string bound;
    double eps = 0;
    EpsProvenance eps_provenance = EpsProvenance::exact;
    double lhs = 0;
    double rhs = 0;
    double margin = 0;
    bool violated = false;
    double slack = kViolationSlack;
    /// Campaign bookkeeping: trial index and the trial's child seed.
    std::size_t trial = 0;
    uint64_t seed = 0;
    /// Ambient input dimension of the instance.
    std::size_t dA = 0;
    /// Dimension entering the log term (may be fractional, e.g. a geometric mean).
    double d = 0;
};

/// Fills margin and violated from lhs and rhs.
BoundReport make_report(std::string bound, double eps, EpsProvenance prov, double lhs, double rhs, std::size_t dA,
                        double d);

/// 2 eps log d + 2 g(eps); `qc` drops the 2 on the log term, `concavity` the 2 on g.
double rhs_prop1(double d, double eps, bool qc = false, bool concavity = false);
/// eps log dA + eps + 2 g(eps); `same_channel` drops eps, `same_outputs` drops the 2 on g.
double rhs_prop2(double dA, double eps, bool same_channel = false, bool same_outputs = false);
/// 2 eps log dA + 2 eps + 2 g(eps); `same_channel` drops 2 eps.
double rhs_prop3(double dA, double eps, bool same_channel = false);
/// 2n (eps log(2 dA_geo) + g(eps)).
double rhs_prop4(int n, double dA_geo, double eps);

/// Capacity continuity right-hand sides with log2(dA) given directly, so that
/// closed-form sweeps can use dimensions far beyond anything representable.
/// Throws ArgumentError for CapacityKind::entanglement_assisted (not covered).
double rhs_prop5_log2(CapacityKind kind, double log2_dA, double eps);
double rhs_prop5(CapacityKind kind, double dA, double eps);

struct Prop1Labels {
    LabelSet a{"A"};
    LabelSet b{"B"};
    LabelSet c{"C"};
    LabelSet e{"E"};
};

/// |I(A:B|C)_rho - I(A:B|C)_sigma| against rhs_prop1 with d the dimension of the
/// joint support of the AE marginals and eps = (1/2)||rho_ext - sigma_ext||_1.
/// `qc` is verified (both states block diagonal in the computational basis of BC
/// up to 1e-9 in trace norm; ContractError otherwise). `concavity` is taken on trust.
BoundReport check_prop1(const DensityMatrix& rho_ext, const DensityMatrix& sigma_ext, const Prop1Labels& labels = {},
                        bool qc = false, bool concavity = false);

/// Options shared by the channel-pair checkers.
struct PairCheckOptions {
    /// Skip the Bures search and use this value as the epsilon contribution of the
    /// channel pair (callers pass a previously computed upper endpoint).
    std::optional<double> beta_upper;
    BuresOptions bures;
};

/// Channels whose Choi matrices agree to 1e-12 are treated as the same channel.
bool same_channel(const Channel& phi, const Channel& psi);

/// |chi_phi(e) - chi_psi(f)| against rhs_prop2, eps = ensemble distance + beta upper.
/// `same_outputs` is verified: phi(rho_i) = psi(sigma_i) within 1e-9, else ContractError.
BoundReport check_prop2(const Channel& phi, const Channel& psi, const Ensemble& e, const Ensemble& f,
                        bool same_outputs = false, const PairCheckOptions& opts = {});

struct Prop3Labels {
    std::string a = "A";
    /// Label the channel output replaces `a` with.
    std::string b = "B";
    LabelSet c{"C"};
    LabelSet d{"D"};
};

/// |I(B:D|C) at (phi (x) id)(rho) - at (psi (x) id)(sigma)| against rhs_prop3,
/// eps = (1/2)||rho - sigma||_1 + beta upper. C may be empty.
BoundReport check_prop3(const Channel& phi, const Channel& psi, const DensityMatrix& rho, const DensityMatrix& sigma,
                        const Prop3Labels& labels = {}, const PairCheckOptions& opts = {});

struct Prop4Labels {
    /// Input factors A_1..A_n; outputs are named by `outputs` (same length).
    LabelSet inputs;
    LabelSet outputs;
    LabelSet c{"C"};
    LabelSet d{"D"};
    /// Defaults: A1..An and B1..Bn.
    static Prop4Labels numbered(int n);
};

/// |I(B^n:D|C) under phi^(x)n vs psi^(x)n on the same rho| against rhs_prop4 with
/// dA_geo the geometric mean of the ranks of rho_{A_k}.
BoundReport check_prop4(const Channel& phi, const Channel& psi, const DensityMatrix& rho, const Prop4Labels& labels,
                        const PairCheckOptions& opts = {});

/// The five capacity bounds on the erasure pair (p, q) using the closed forms.
/// With `prefer_analytic` and {p, q} = {1/2 - x, 1/2}, eps = erasure_bures_upper(x);
/// otherwise eps = bures_distance(Phi_p, Phi_q).upper.
std::vector<BoundReport> check_prop5_erasure(std::size_t d, double p, double q, bool prefer_analytic = true,
                                             const BuresOptions& bures = {});

/// Closed-form tightness row for the quantum-capacity bound on the pair (1/2 - x, 1/2).
struct TightnessRow {
    double x = 0;
    double log2_d = 0;
    double beta_upper = 0;
    double lhs_q = 0;
    double rhs_qc = 0;
    /// lhs / rhs, or 1 when both vanish.
    double ratio = 1;
};
TightnessRow tightness_row(double x, double log2_d);

/// (MI-UB) on A:B, plus (CMI-UB) and strong subadditivity when C is non-empty.
/// With `separable` the state must be block diagonal in the computational basis of B
/// (checked, ContractError otherwise) and the single-factor bound I <= min H is added.
std::vector<BoundReport> check_auxiliary(const DensityMatrix& omega, const LabelSet& a, const LabelSet& b,
                                         const LabelSet& c = {}, bool separable = false);

/// |lambda I_rho + (1 - lambda) I_sigma - I_mix| <= h2(lambda) for I = I(A:B|C).
BoundReport check_almost_convexity(const DensityMatrix& rho, const DensityMatrix& sigma, double lambda,
                                   const LabelSet& a, const LabelSet& b, const LabelSet& c);

/// |chi(e) - chi(f)| <= eps log min(dim, m) + 2 g(eps) with eps the ensemble
/// distance; the factor 2 is dropped when the two ensembles carry identical states.
BoundReport check_chi_continuity(const Ensemble& e, const Ensemble& f);

/// I(X:YZ|C) - I(X:Y|C) - I(X:Z|YC).
double chain_rule_defect(const DensityMatrix& omega, const LabelSet& x, const LabelSet& y, const LabelSet& z,
                         const LabelSet& c);

}  // namespace qcb

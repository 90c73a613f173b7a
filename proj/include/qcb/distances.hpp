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
#include <string>

#include "qcb/channels.hpp"
#include "qcb/errors.hpp"

namespace qcb {

/// Certified enclosure lower <= true value <= upper.
struct DistanceInterval {
    double lower = 0;
    double upper = 0;
    std::string lower_method;
    std::string upper_method;
    /// Set when upper - lower met the requested tolerance.
    bool certified = false;

    double width() const { return upper - lower; }
};

/// Raised when the diamond-norm solver hits its iteration cap with a gap above
/// max(tol, 1e-4); carries the best interval found.
class ConvergenceError : public Error {
   public:
    ConvergenceError(const std::string& what, DistanceInterval best) : Error(what), best_(std::move(best)) {}
    const DistanceInterval& best() const { return best_; }

   private:
    DistanceInterval best_;
};

struct DiamondOptions {
    double tol = 1e-7;
    int max_iterations = 50000;
    /// Random pure-state restarts of the alternating lower-bound search.
    int restarts = 6;
    uint64_t seed = 0x5eed;
};

/// ||phi - psi||_diamond enclosure.
///
/// Upper endpoint: the dual of the completely-bounded trace norm SDP,
///   min ||Tr_B Z||_op  s.t.  Z >= 0,  Z >= J(phi) - J(psi),   (value x 2)
/// solved by ADMM with eigenvalue projections; every iterate is repaired to an
/// exactly feasible Z before it is scored, so the reported upper is always valid.
/// Lower endpoint: ||(Delta (x) id)(|psi><psi|)||_1 maximised over pure inputs
/// by alternating sign/eigenvector updates from seeded restarts and from the
/// solver's recovered input state.
///
/// Throws ArgumentError on din/dout mismatch and ConvergenceError (see above).
/// For din * dout > 64 only the cheap endpoints are computed (never certified).
DistanceInterval diamond_norm(const Channel& phi, const Channel& psi, const DiamondOptions& opts = {});
/// Same computation without the ConvergenceError.
DistanceInterval diamond_norm_bounds(const Channel& phi, const Channel& psi, const DiamondOptions& opts = {});

/// ||(Delta (x) id_R)(|v><v|)||_1 for a unit vector v on A (x) R, dim R = din.
double diamond_probe(const Channel& phi, const Channel& psi, const ComplexMatrix& v);

struct BuresOptions {
    int restarts = 16;
    int refine_iterations = 60;
    uint64_t seed = 0xb0e5;
    DiamondOptions diamond{1e-6, 20000, 4, 0x5eed};
};

/// beta(phi, psi) enclosure. Lower = diamond.lower / 2. Upper = min of
/// sqrt(diamond.upper) and ||V_phi - (I (x) U) V_psi|| over environment unitaries U
/// (Frobenius-optimal U, identity, random restarts; each locally refined).
DistanceInterval bures_distance(const Channel& phi, const Channel& psi, const BuresOptions& opts = {});

/// ||V_phi - (I_B (x) u) V_psi|| on a common representation.
double isometry_distance(const ChannelPairRep& rep, const ComplexMatrix& u);
/// Environment unitary maximising Re Tr V_phi^dagger (I (x) U) V_psi.
ComplexMatrix frobenius_optimal_alignment(const ChannelPairRep& rep);

/// sqrt(2 - sqrt(1 - 2x) - sqrt(1 + 2x)) = ||V_{1/2-x} - V_{1/2}||; independent of d.
/// Throws ArgumentError unless d >= 1 and x in [0, 1/2].
double erasure_bures_upper(std::size_t d, double x);

}  // namespace qcb

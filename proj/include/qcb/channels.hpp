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
#include <string_view>
#include <vector>

#include "qcb/entropic.hpp"
#include "qcb/matrix.hpp"

namespace qcb {

/// CPTP map held as a Kraus list with its Stinespring isometry and Choi matrix
/// computed at construction.
///
/// Layout conventions:
///  - Kraus operators are dout x din.
///  - The Stinespring isometry V is (dout * denv) x din with row index
///    b * denv + e, i.e. V = sum_e K_e (x) |e>_E and the output factor first.
///  - The Choi matrix is J = sum_ij Phi(|i><j|) (x) |i><j| on B (x) A, so
///    Tr_B J = I_A is the trace-preservation test.
///
/// A linearly independent Kraus list is kept as given (so hand-built dilations
/// survive unchanged); a dependent one is replaced by the minimal list read off
/// the Choi spectrum (relative rank tolerance 1e-9).
class Channel {
   public:
    /// Throws ArgumentError for an empty or ragged list, ContractError when
    /// max|sum K^dagger K - I| exceeds tp_tol.
    static Channel from_kraus(std::vector<ComplexMatrix> kraus, double tp_tol = 1e-9);
    /// Kraus operators are the environment slices of the isometry.
    static Channel from_stinespring(const ComplexMatrix& v, std::size_t dout, double tp_tol = 1e-9);
    /// Throws ContractError unless the Choi matrix is PSD with Tr_B J = I.
    static Channel from_choi(const ComplexMatrix& choi, std::size_t din, std::size_t dout, double tol = 1e-9);

    static Channel identity(std::size_t d);
    static Channel unitary(const ComplexMatrix& u);
    /// rho -> Tr(rho) sigma.
    static Channel constant(const ComplexMatrix& sigma, std::size_t din);
    /// rho -> Tr(rho) I/d.
    static Channel completely_depolarizing(std::size_t d);

    std::size_t din() const { return din_; }
    std::size_t dout() const { return dout_; }
    std::size_t denv() const { return kraus_.size(); }
    const std::vector<ComplexMatrix>& kraus() const { return kraus_; }
    const ComplexMatrix& stinespring() const { return stinespring_; }
    const ComplexMatrix& choi() const { return choi_; }

    /// sum K rho K^dagger on a raw din x din matrix.
    ComplexMatrix apply(const ComplexMatrix& rho) const;
    /// Heisenberg picture: sum K^dagger y K.
    ComplexMatrix apply_adjoint(const ComplexMatrix& y) const;

   private:
    Channel(std::size_t din, std::size_t dout, std::vector<ComplexMatrix> kraus);

    std::size_t din_ = 0;
    std::size_t dout_ = 0;
    std::vector<ComplexMatrix> kraus_;
    ComplexMatrix stinespring_;
    ComplexMatrix choi_;
};

ComplexMatrix stinespring(const Channel& ch);
ComplexMatrix choi(const Channel& ch);
/// V = sum_e K_e (x) |e>, rows ordered (b, e).
ComplexMatrix kraus_to_stinespring(const std::vector<ComplexMatrix>& kraus);

/// Environment-side channel rho -> Tr_B V rho V^dagger. When env_dim exceeds the
/// channel's environment, the output is embedded into the larger space.
Channel complementary(const Channel& ch, std::size_t env_dim = 0);

/// Channel applied to a whole single-block state; the output keeps the input
/// label when the input has one factor, otherwise it is labelled "B".
DensityMatrix apply(const Channel& ch, const DensityMatrix& rho);
/// (Phi (x) id)(rho) on the factor `target`; other factors untouched. The output
/// factor is renamed to new_label when given. Throws ArgumentError if the target
/// dimension differs from din.
DensityMatrix apply_on(const Channel& ch, const DensityMatrix& rho, std::string_view target, std::string new_label = "");

/// rho -> (1-p) rho (+) p Tr(rho) |d><d| from C^d to C^{d+1}. The Kraus list is
/// ordered so its isometry coincides with erasure_stinespring(d, p).
Channel erasure_channel(std::size_t d, double p);
/// |phi> -> sqrt(1-p) |phi>|psi> + sqrt(p) |psi>|phi> with B = E = C^d (+) span{psi}.
ComplexMatrix erasure_stinespring(std::size_t d, double p);

/// Isometries of two channels into a common B (x) E.
struct ChannelPairRep {
    ComplexMatrix vphi;
    ComplexMatrix vpsi;
    std::size_t dout = 0;
    std::size_t denv = 0;
};

/// Zero-pads the smaller environment. Throws ArgumentError on din/dout mismatch.
ChannelPairRep pair_common_rep(const Channel& phi, const Channel& psi);
/// Embeds E into E (+) E' by adding zero Kraus slices.
ComplexMatrix pad_environment(const ComplexMatrix& v, std::size_t dout, std::size_t denv, std::size_t new_denv);
/// (I_B (x) u) v for u acting on the environment factor.
ComplexMatrix act_on_environment(const ComplexMatrix& v, std::size_t dout, const ComplexMatrix& u);
/// Tr_E v rho v^dagger.
ComplexMatrix isometry_output(const ComplexMatrix& v, std::size_t dout, const ComplexMatrix& rho);

}  // namespace qcb

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

#include <gtest/gtest.h>

#include <cmath>

#include "qcb/errors.hpp"
#include "qcb/instances.hpp"
#include "qcb/linalg.hpp"

namespace qcb {
namespace {

TEST(Capacities, KindNamesRoundTrip) {
    for (CapacityKind k : {CapacityKind::holevo_cap, CapacityKind::classical, CapacityKind::quantum,
                           CapacityKind::private_oneshot, CapacityKind::private_cap,
                           CapacityKind::entanglement_assisted}) {
        EXPECT_EQ(parse_capacity_kind(to_string(k)), k);
    }
    EXPECT_THROW(parse_capacity_kind("quantumish"), ArgumentError);
}

TEST(Purification, MarginalAndIndependence) {
    Rng rng(1);
    DensityMatrix rho(random_state(3, rng, 2));
    DensityMatrix psi = purification(rho);
    EXPECT_EQ(psi.shape().dim_of("R"), 2u);
    EXPECT_LT(max_abs_diff(psi.marginal({"A"}).matrix(), rho.matrix()), 1e-12);
    Channel ch = random_channel(3, 2, 2, rng);
    // a second purification with a larger, rotated reference gives the same value
    ComplexMatrix w = random_isometry(2, 4, rng);
    ComplexMatrix moved = tensor(ComplexMatrix::identity(3), w) * psi.matrix() *
                          tensor(ComplexMatrix::identity(3), w).adjoint();
    DensityMatrix alt(moved.hermitian_part(), SubsystemShape::parse("A=3,R=4"));
    EXPECT_NEAR(mutual_info_from_purification(ch, psi), mutual_info_from_purification(ch, alt), 1e-10);
    EXPECT_NEAR(mutual_info_of_channel(ch, rho), mutual_info_entropic(ch, rho.matrix()), 1e-10);
}

TEST(CoherentInfo, IsometricChannelsGiveInputEntropy) {
    Rng rng(2);
    ComplexMatrix u = random_unitary(3, rng);
    DensityMatrix rho(random_state(3, rng));
    EXPECT_NEAR(coherent_info(Channel::unitary(u), rho), entropy(rho), 1e-10);
    EXPECT_NEAR(coherent_info(erasure_channel(2, 0.5), DensityMatrix::maximally_mixed(SubsystemShape::parse("A=2"))),
                0.0, 1e-12);
    // I(A>B) = I(R:B) - H(R) on a purification
    Channel ch = random_channel(2, 2, 2, rng);
    DensityMatrix r(random_state(2, rng));
    EXPECT_NEAR(coherent_info(ch, r), mutual_info_of_channel(ch, r) - entropy(r), 1e-10);
}

TEST(EaCapacity, IdentityAndDepolarizing) {
    CapacityValue id = ea_capacity(Channel::identity(2));
    EXPECT_NEAR(id.value, 2.0, 1e-9);
    EXPECT_EQ(id.tag, Exactness::concave_certified);
    EXPECT_NEAR(ea_capacity(Channel::completely_depolarizing(3)).value, 0.0, 1e-9);
    EXPECT_THROW(ea_capacity(Channel::identity(2), EaOptions{0.0, 10, 0}), ArgumentError);
}

TEST(EaCapacity, ErasureMatchesMaximallyMixedInput) {
    for (std::size_t d : {2, 3}) {
        for (double p : {0.1, 0.5, 0.9}) {
            // C_EA = 2 (1 - p) log d
            EXPECT_NEAR(ea_capacity(erasure_channel(d, p)).value, 2 * (1 - p) * std::log2(static_cast<double>(d)), 1e-9);
        }
    }
}

TEST(EaCapacity, RandomChannelsCertifyFromAnyStart) {
    Rng rng(3);
    for (int t = 0; t < 4; ++t) {
        Channel ch = random_channel(2 + t % 2, 2, 2, rng);
        CapacityValue a = ea_capacity(ch);
        CapacityValue b = ea_capacity(ch, EaOptions{1e-6, 5000, 77});
        EXPECT_EQ(a.tag, Exactness::concave_certified);
        EXPECT_LE(a.residual, 1e-6);
        EXPECT_NEAR(a.value, b.value, 2e-6);
        // no input beats the optimum by more than the certificate
        for (int k = 0; k < 5; ++k) {
            DensityMatrix r(random_state(ch.din(), rng));
            EXPECT_LE(mutual_info_of_channel(ch, r), a.value + a.residual + 1e-12);
        }
    }
}

TEST(Holevo, IdentityReachesLogD) {
    HolevoOptions opts;
    opts.restarts = 4;
    CapacityValue v = holevo_cap_heuristic(Channel::identity(3), opts);
    EXPECT_NEAR(v.value, std::log2(3.0), 1e-6);
    EXPECT_EQ(v.tag, Exactness::heuristic_lower_bound);
    EXPECT_NEAR(holevo_cap_heuristic(Channel::completely_depolarizing(2), opts).value, 0.0, 1e-9);
}

TEST(Holevo, ErasureWindow) {
    HolevoOptions opts;
    opts.restarts = 32;
    for (std::size_t d : {2, 3}) {
        for (double p : {0.2, 0.7}) {
            double exact = (1 - p) * std::log2(static_cast<double>(d));
            double v = holevo_cap_heuristic(erasure_channel(d, p), opts).value;
            EXPECT_LE(v, exact + 1e-9);
            EXPECT_GE(v, exact - 0.02);
        }
    }
}

TEST(PrivateObjective, SimpleCases) {
    std::vector<DensityMatrix> basis;
    for (std::size_t k = 0; k < 2; ++k) {
        ComplexMatrix m(2, 2);
        m(k, k) = 1;
        basis.emplace_back(m);
    }
    Ensemble e({0.5, 0.5}, basis);
    EXPECT_NEAR(private_oneshot_objective(Channel::identity(2), e), 1.0, 1e-12);
    // erasure: (1 - p) - p bits of classical information
    EXPECT_NEAR(private_oneshot_objective(erasure_channel(2, 0.25), e), 0.5, 1e-12);
    EXPECT_NEAR(private_oneshot_objective(erasure_channel(2, 0.75), e), -0.5, 1e-12);
    EXPECT_THROW(private_oneshot_objective(Channel::identity(3), e), ArgumentError);
}

TEST(Erasure, ClosedForms) {
    auto c = erasure_capacities(4, 0.25);
    EXPECT_NEAR(c.at(CapacityKind::classical).value, 1.5, 1e-12);
    EXPECT_NEAR(c.at(CapacityKind::holevo_cap).value, 1.5, 1e-12);
    EXPECT_NEAR(c.at(CapacityKind::quantum).value, 1.0, 1e-12);
    EXPECT_NEAR(c.at(CapacityKind::private_cap).value, 1.0, 1e-12);
    EXPECT_EQ(c.at(CapacityKind::quantum).tag, Exactness::closed_form);
    auto past_half = erasure_capacities(4, 0.75);
    EXPECT_EQ(past_half.at(CapacityKind::quantum).value, 0.0);
    EXPECT_EQ(past_half.at(CapacityKind::private_oneshot).value, 0.0);
    EXPECT_THROW(erasure_capacities(1, 0.2), ArgumentError);
    EXPECT_THROW(erasure_capacities(2, -0.1), ArgumentError);
    auto big = erasure_capacities_log2(1000, 0.4);
    EXPECT_NEAR(big.at(CapacityKind::quantum).value, 200, 1e-9);
}

}  // namespace
}  // namespace qcb

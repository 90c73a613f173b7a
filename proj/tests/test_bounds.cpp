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

#include <gtest/gtest.h>

#include <cmath>

#include "qcb/instances.hpp"
#include "qcb/linalg.hpp"

namespace qcb {
namespace {

DensityMatrix basis_state(std::size_t d, std::size_t k) {
    ComplexMatrix m(d, d);
    m(k, k) = 1;
    return DensityMatrix(m);
}

Ensemble uniform_basis(std::size_t d) {
    std::vector<double> p(d, 1.0 / static_cast<double>(d));
    std::vector<DensityMatrix> s;
    for (std::size_t k = 0; k < d; ++k) {
        s.push_back(basis_state(d, k));
    }
    return Ensemble(p, s);
}

TEST(Rhs, WorkedValues) {
    EXPECT_NEAR(rhs_prop1(2, 1), 6.0, 1e-14);
    EXPECT_NEAR(rhs_prop1(4, 0.5, true), 1.0 + 2 * g(0.5), 1e-14);
    EXPECT_NEAR(rhs_prop1(4, 0.5, true, true), 1.0 + g(0.5), 1e-14);
    EXPECT_NEAR(rhs_prop2(4, 0.1), 0.2 + 0.1 + 2 * g(0.1), 1e-14);
    EXPECT_NEAR(rhs_prop2(4, 0.1, true, true), 0.2 + g(0.1), 1e-14);
    EXPECT_NEAR(rhs_prop3(2, 0.1), 0.2 + 0.2 + 2 * g(0.1), 1e-14);
    EXPECT_NEAR(rhs_prop4(1, 2, 0.1), rhs_prop3(2, 0.1), 1e-14);
    EXPECT_NEAR(rhs_prop4(3, 2, 0.1), 3 * rhs_prop3(2, 0.1), 1e-14);
    for (double e : {0.0, 0.01, 0.3}) {
        EXPECT_NEAR(rhs_prop5(CapacityKind::private_cap, 8, e), 2 * rhs_prop5(CapacityKind::quantum, 8, e), 1e-14);
        EXPECT_NEAR(rhs_prop5(CapacityKind::holevo_cap, 8, e), 4 * e + 2 * g(e), 1e-14);
    }
    EXPECT_THROW(rhs_prop5(CapacityKind::entanglement_assisted, 2, 0.1), ArgumentError);
    EXPECT_THROW(rhs_prop1(2, -0.1), ArgumentError);
    EXPECT_THROW(rhs_prop4(0, 2, 0.1), ArgumentError);
}

TEST(Rhs, MonotoneInEpsAndDimension) {
    double prev = 0;
    for (double e = 0.01; e < 1.0; e += 0.05) {
        double r = rhs_prop3(3, e);
        EXPECT_GT(r, prev);
        prev = r;
        EXPECT_LT(rhs_prop2(2, e), rhs_prop2(4, e));
    }
    EXPECT_EQ(rhs_prop1(5, 0), 0.0);
}

TEST(Prop1, IdenticalStatesCollapse) {
    Rng rng(1);
    SubsystemShape s = SubsystemShape::parse("A=2,B=2,C=2,E=2");
    DensityMatrix rho = random_density(s, rng);
    BoundReport r = check_prop1(rho, rho);
    EXPECT_EQ(r.eps, 0.0);
    EXPECT_EQ(r.lhs, 0.0);
    EXPECT_EQ(r.margin, 0.0);
    EXPECT_FALSE(r.violated);
    EXPECT_EQ(r.bound, "prop1");
}

TEST(Prop1, RandomPairsHold) {
    Rng rng(2);
    SubsystemShape s = SubsystemShape::parse("A=2,B=2,C=2,E=2");
    for (int t = 0; t < 20; ++t) {
        auto [rho, sigma] = random_state_pair(s, rng);
        BoundReport r = check_prop1(rho, sigma);
        EXPECT_FALSE(r.violated) << r.lhs << " > " << r.rhs;
        EXPECT_LE(r.d, 4.0);
    }
}

TEST(Prop1, QcVariantChecksStructure) {
    Rng rng(3);
    auto [rho, sigma] = random_qc_pair(2, 2, 2, 2, rng);
    BoundReport r = check_prop1(rho, sigma, {}, true);
    EXPECT_EQ(r.bound, "prop1-qc");
    EXPECT_FALSE(r.violated);
    SubsystemShape s = SubsystemShape::parse("A=2,E=2,B=2,C=2");
    DensityMatrix generic = random_density(s, rng, 16);
    EXPECT_THROW(check_prop1(generic, generic, {}, true), ContractError);
}

TEST(Prop2, ErasureEnsembleGap) {
    // orthogonal inputs through erasure: chi = (1 - p) log d, so the gap is x log d
    const std::size_t d = 4;
    const double x = 0.1;
    Ensemble e = uniform_basis(d);
    PairCheckOptions opts;
    opts.beta_upper = erasure_bures_upper(d, x);
    BoundReport r = check_prop2(erasure_channel(d, 0.5 - x), erasure_channel(d, 0.5), e, e, false, opts);
    EXPECT_NEAR(r.lhs, x * 2.0, 1e-10);
    EXPECT_EQ(r.eps, *opts.beta_upper);
    EXPECT_EQ(r.eps_provenance, EpsProvenance::interval_upper);
    EXPECT_FALSE(r.violated);
}

TEST(Prop2, SameChannelAndSameOutputs) {
    Rng rng(4);
    Channel ch = random_channel(2, 3, 2, rng);
    Ensemble e = random_ensemble(2, 3, rng);
    Ensemble f = perturb_ensemble(e, 0.1, rng);
    BoundReport r = check_prop2(ch, ch, e, f);
    EXPECT_EQ(r.bound, "prop2-same-channel");
    EXPECT_EQ(r.eps_provenance, EpsProvenance::exact);
    EXPECT_NEAR(r.eps, ensemble_distance(e, f), 1e-15);
    EXPECT_FALSE(r.violated);
    EXPECT_THROW(check_prop2(ch, ch, e, f, true), ContractError);
    std::vector<double> q(e.size(), 1.0 / static_cast<double>(e.size()));
    Ensemble reweighted(q, e.states());
    BoundReport s = check_prop2(ch, ch, e, reweighted, true);
    EXPECT_EQ(s.bound, "prop2-same-channel-same-outputs");
    EXPECT_FALSE(s.violated);
}

TEST(Prop3, MatchesProp4WithOneUse) {
    Rng rng(5);
    Channel phi = random_channel(2, 2, 2, rng);
    Channel psi = perturb_channel(phi, 0.05, rng);
    SubsystemShape s = SubsystemShape::parse("A1=2,C=2,D=2");
    DensityMatrix rho = random_density(s, rng);
    PairCheckOptions opts;
    opts.beta_upper = 0.07;
    Prop3Labels l3;
    l3.a = "A1";
    l3.b = "B1";
    BoundReport r3 = check_prop3(phi, psi, rho, rho, l3, opts);
    BoundReport r4 = check_prop4(phi, psi, rho, Prop4Labels::numbered(1), opts);
    EXPECT_NEAR(r3.lhs, r4.lhs, 1e-12);
    EXPECT_EQ(r3.eps, r4.eps);
    EXPECT_NEAR(r3.rhs, r4.rhs, 1e-12);
}

TEST(Prop3, SameChannelSameStateIsZero) {
    Rng rng(6);
    Channel ch = random_channel(2, 3, 2, rng);
    DensityMatrix rho = random_density(SubsystemShape::parse("A=2,C=2,D=2"), rng);
    BoundReport r = check_prop3(ch, ch, rho, rho);
    EXPECT_EQ(r.bound, "prop3-same-channel");
    EXPECT_EQ(r.lhs, 0.0);
    EXPECT_EQ(r.rhs, 0.0);
}

TEST(Prop4, TwoUsesHold) {
    Rng rng(7);
    Channel phi = random_channel(2, 2, 2, rng);
    Channel psi = random_channel(2, 2, 2, rng);
    DensityMatrix rho = random_density(SubsystemShape::parse("A1=2,A2=2,C=2,D=2"), rng);
    BoundReport r = check_prop4(phi, psi, rho, Prop4Labels::numbered(2));
    EXPECT_EQ(r.bound, "prop4");
    EXPECT_FALSE(r.violated);
    EXPECT_GT(r.eps, 0.0);
}

TEST(Prop5, EqualParametersGiveZeroEverywhere) {
    auto reports = check_prop5_erasure(3, 0.2, 0.2);
    ASSERT_EQ(reports.size(), 5u);
    for (const auto& r : reports) {
        EXPECT_EQ(r.eps, 0.0);
        EXPECT_NEAR(r.lhs, 0.0, 1e-15);
        EXPECT_EQ(r.margin, r.rhs);
    }
}

TEST(Prop5, AnalyticEpsilonAtHalf) {
    auto reports = check_prop5_erasure(2, 0.4, 0.5);
    for (const auto& r : reports) {
        EXPECT_EQ(r.eps_provenance, EpsProvenance::analytic);
        EXPECT_NEAR(r.eps, erasure_bures_upper(2, 0.1), 1e-15);
        EXPECT_FALSE(r.violated) << r.bound;
    }
    EXPECT_EQ(reports[0].bound, "prop5-holevo-cap");
    auto numeric = check_prop5_erasure(2, 0.4, 0.5, false);
    EXPECT_EQ(numeric[0].eps_provenance, EpsProvenance::interval_upper);
    EXPECT_LE(numeric[0].eps, reports[0].eps + 1e-9);
}

TEST(Tightness, RatioApproachesOne) {
    // independent oracle: Q(1/2 - x) - Q(1/2) = 2 x log d and the closed-form beta
    for (double ld : {10.0, 100.0, 1000.0}) {
        double x = 1e-3;
        double beta = std::sqrt(2 - std::sqrt(1 - 2 * x) - std::sqrt(1 + 2 * x));
        double rhs = 2 * (beta * ld + beta) + 2 * ((1 + beta) * std::log2(1 + beta) - beta * std::log2(beta));
        TightnessRow row = tightness_row(x, ld);
        EXPECT_NEAR(row.lhs_q, 2 * x * ld, 1e-9);
        EXPECT_NEAR(row.beta_upper, beta, 1e-10);
        EXPECT_NEAR(row.ratio, 2 * x * ld / rhs, 1e-6);
    }
    EXPECT_NEAR(tightness_row(1e-3, 1000).ratio, 0.987742, 1e-6);
    EXPECT_NEAR(tightness_row(1e-3, 10).ratio, 0.446245, 1e-6);
    EXPECT_EQ(tightness_row(0, 10).ratio, 1.0);
    EXPECT_THROW(tightness_row(0.7, 10), ArgumentError);
}

TEST(Auxiliary, BellStateSaturatesMutualInformation) {
    std::vector<Complex> v{1 / std::sqrt(2.0), 0, 0, 1 / std::sqrt(2.0)};
    DensityMatrix bell = DensityMatrix::pure(ComplexMatrix::column(v), SubsystemShape::parse("A=2,B=2"));
    auto reports = check_auxiliary(bell, {"A"}, {"B"});
    ASSERT_EQ(reports.size(), 1u);
    EXPECT_EQ(reports[0].bound, "mi-ub");
    EXPECT_NEAR(reports[0].margin, 0.0, 1e-12);
    EXPECT_FALSE(reports[0].violated);
    EXPECT_THROW(check_auxiliary(bell, {"A"}, {"B"}, {}, true), ContractError);
}

TEST(Auxiliary, RandomStatesHold) {
    Rng rng(8);
    SubsystemShape s = SubsystemShape::parse("A=2,B=2,C=2");
    for (int t = 0; t < 10; ++t) {
        DensityMatrix w = random_density(s, rng);
        for (const auto& r : check_auxiliary(w, {"A"}, {"B"}, {"C"})) {
            EXPECT_FALSE(r.violated) << r.bound;
        }
        DensityMatrix x = random_density(s, rng);
        EXPECT_FALSE(check_almost_convexity(w, x, 0.3, {"A"}, {"B"}, {"C"}).violated);
    }
    DensityMatrix w = random_density(s, rng);
    EXPECT_THROW(check_almost_convexity(w, w, 1.0, {"A"}, {"B"}, {"C"}), ArgumentError);
}

TEST(Auxiliary, ChainRuleAndChiContinuity) {
    Rng rng(9);
    DensityMatrix w = random_density(SubsystemShape::parse("X=2,Y=2,Z=2,C=2"), rng);
    EXPECT_NEAR(chain_rule_defect(w, {"X"}, {"Y"}, {"Z"}, {"C"}), 0.0, 1e-10);
    Ensemble e = random_ensemble(3, 3, rng);
    Ensemble f = perturb_ensemble(e, 0.2, rng);
    BoundReport r = check_chi_continuity(e, f);
    EXPECT_EQ(r.bound, "chi-cb");
    EXPECT_FALSE(r.violated);
    std::vector<double> q{0.2, 0.3, 0.5};
    BoundReport same = check_chi_continuity(e, Ensemble(q, e.states()));
    EXPECT_EQ(same.bound, "chi-cb-same-states");
    EXPECT_FALSE(same.violated);
}

}  // namespace
}  // namespace qcb

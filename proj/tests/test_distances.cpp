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

#include "qcb/distances.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qcb/instances.hpp"
#include "qcb/linalg.hpp"

namespace qcb {
namespace {

Channel phase_gate(double theta) {
    ComplexMatrix u{{1, 0}, {0, std::polar(1.0, theta)}};
    return Channel::unitary(u);
}

TEST(Diamond, IdenticalChannelsGiveZero) {
    Rng rng(1);
    Channel ch = random_channel(2, 3, 2, rng);
    DistanceInterval d = diamond_norm(ch, ch);
    EXPECT_EQ(d.upper, 0.0);
    EXPECT_EQ(d.lower, 0.0);
    EXPECT_TRUE(d.certified);
}

TEST(Diamond, IdentityVersusDepolarizing) {
    // Bell input is optimal: || Phi+ - I/4 ||_1 = 3/4 + 3/4
    DistanceInterval d = diamond_norm(Channel::identity(2), Channel::completely_depolarizing(2));
    EXPECT_NEAR(d.lower, 1.5, 1e-6);
    EXPECT_NEAR(d.upper, 1.5, 1e-6);
    EXPECT_LE(d.lower, d.upper);
}

TEST(Diamond, PhaseGatesHaveClosedForm) {
    for (double theta : {0.3, 1.0, 2.0, std::numbers::pi}) {
        DistanceInterval d = diamond_norm(Channel::identity(2), phase_gate(theta));
        double expect = 2 * std::sin(theta / 2);
        EXPECT_LE(d.lower, expect + 1e-9);
        EXPECT_GE(d.upper, expect - 1e-9);
        EXPECT_LT(d.width(), 1e-6);
    }
}

TEST(Diamond, RandomPairsAreSandwiched) {
    Rng rng(2);
    for (int t = 0; t < 8; ++t) {
        std::size_t din = 2 + t % 2;
        std::size_t dout = 2 + (t / 2) % 2;
        Channel a = random_channel(din, dout, 2, rng);
        Channel b = random_channel(din, dout, 1 + t % 3, rng);
        DistanceInterval d = diamond_norm(a, b);
        ASSERT_LE(d.lower, d.upper);
        EXPECT_TRUE(d.certified);
        EXPECT_LE(d.width(), 1e-6);
        // Choi trace norm / din is a weaker lower bound; 2 is the trivial upper bound
        double choi_lb = trace_norm(a.choi() - b.choi()) / static_cast<double>(din);
        EXPECT_GE(d.upper, choi_lb - 1e-9);
        EXPECT_LE(d.upper, 2.0 + 1e-9);
        ComplexMatrix v = random_pure(din * din, rng);
        EXPECT_LE(diamond_probe(a, b, v), d.upper + 1e-9);
    }
}

TEST(Diamond, LargeInstancesAreUncertified) {
    Rng rng(3);
    Channel a = random_channel(9, 9, 1, rng);
    Channel b = random_channel(9, 9, 1, rng);
    DistanceInterval d = diamond_norm(a, b);
    EXPECT_FALSE(d.certified);
    EXPECT_LE(d.lower, d.upper);
}

TEST(Diamond, BoundsVariantNeverThrows) {
    Rng rng(4);
    Channel a = random_channel(3, 3, 2, rng);
    Channel b = random_channel(3, 3, 2, rng);
    DiamondOptions opts;
    opts.max_iterations = 1;
    opts.restarts = 0;
    DistanceInterval d = diamond_norm_bounds(a, b, opts);
    EXPECT_LE(d.lower, d.upper);
    EXPECT_THROW(diamond_norm(a, Channel::identity(2)), ArgumentError);
}

TEST(Bures, ErasureClosedFormValues) {
    EXPECT_EQ(erasure_bures_upper(2, 0), 0.0);
    EXPECT_NEAR(erasure_bures_upper(2, 0.1), 0.10063644464, 1e-10);
    EXPECT_NEAR(erasure_bures_upper(3, 0.01), 0.0100006251, 1e-10);
    EXPECT_NEAR(erasure_bures_upper(2, 0.5), std::sqrt(2 - std::sqrt(2.0)), 1e-14);
    EXPECT_THROW(erasure_bures_upper(2, 0.6), ArgumentError);
    EXPECT_THROW(erasure_bures_upper(0, 0.1), ArgumentError);
}

TEST(Bures, ErasurePairMatchesClosedForm) {
    for (double x : {0.05, 0.2}) {
        Channel a = erasure_channel(2, 0.5 - x);
        Channel b = erasure_channel(2, 0.5);
        DistanceInterval d = bures_distance(a, b);
        EXPECT_LE(d.lower, d.upper);
        EXPECT_LE(d.upper, erasure_bures_upper(2, x) + 1e-9);
        ChannelPairRep rep = pair_common_rep(a, b);
        EXPECT_NEAR(isometry_distance(rep, ComplexMatrix::identity(rep.denv)), erasure_bures_upper(2, x), 1e-12);
    }
}

TEST(Bures, UnitaryChannelsReduceToPhaseAlignment) {
    // environment is one-dimensional: beta = min_phi ||I - e^{i phi} U|| = 2 sin(theta / 4)
    for (double theta : {0.4, 1.5}) {
        DistanceInterval d = bures_distance(Channel::identity(2), phase_gate(theta));
        EXPECT_NEAR(d.upper, 2 * std::sin(theta / 4), 1e-6);
        EXPECT_LE(d.lower, d.upper);
        EXPECT_NEAR(d.lower, std::sin(theta / 2), 1e-5);
    }
}

TEST(Bures, FrobeniusAlignmentBeatsRandomUnitaries) {
    Rng rng(5);
    Channel a = random_channel(2, 2, 2, rng);
    Channel b = random_channel(2, 2, 2, rng);
    ChannelPairRep rep = pair_common_rep(a, b);
    auto score = [&](const ComplexMatrix& u) {
        return inner(rep.vphi, act_on_environment(rep.vpsi, rep.dout, u)).real();
    };
    double best = score(frobenius_optimal_alignment(rep));
    for (int i = 0; i < 20; ++i) {
        EXPECT_GE(best + 1e-12, score(random_unitary(rep.denv, rng)));
    }
}

// Same isometry read with the roles of output and environment exchanged.
Channel complement_of_isometry(const ComplexMatrix& v, std::size_t dout, std::size_t denv) {
    ComplexMatrix w(v.rows(), v.cols());
    for (std::size_t b = 0; b < dout; ++b) {
        for (std::size_t e = 0; e < denv; ++e) {
            for (std::size_t c = 0; c < v.cols(); ++c) {
                w(e * dout + b, c) = v(b * denv + e, c);
            }
        }
    }
    return Channel::from_stinespring(w, denv);
}

TEST(Bures, AlignedComplementsShareTheDistance) {
    // Complements read off aligned isometries V_phi, (I (x) U) V_psi are no farther
    // apart than the pair itself. Equality fails in general: they can be closer.
    Rng rng(7);
    for (int t = 0; t < 6; ++t) {
        Channel a = random_channel(2, 2, 2, rng);
        Channel b = perturb_channel(a, log_uniform(rng, 1e-2, 0.5), rng);
        ChannelPairRep rep = pair_common_rep(a, b);
        ComplexMatrix u = frobenius_optimal_alignment(rep);
        ComplexMatrix w = act_on_environment(rep.vpsi, rep.dout, u);
        Channel ca = complement_of_isometry(rep.vphi, rep.dout, rep.denv);
        Channel cb = complement_of_isometry(w, rep.dout, rep.denv);
        DistanceInterval d = bures_distance(a, b);
        DistanceInterval c = bures_distance(ca, cb);
        double shared = isometry_distance(rep, u);
        EXPECT_LE(c.lower, shared + 1e-9);
        EXPECT_LE(c.upper, shared + 1e-9);
        EXPECT_LE(c.lower, d.upper + 1e-9);
    }
}

TEST(Bures, IdenticalChannelsGiveZero) {
    Rng rng(6);
    Channel ch = random_channel(2, 2, 3, rng);
    DistanceInterval d = bures_distance(ch, ch);
    EXPECT_LT(d.upper, 1e-9);
    EXPECT_EQ(d.lower, 0.0);
}

}  // namespace
}  // namespace qcb

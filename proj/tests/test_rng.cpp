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

#include "qcb/rng.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <set>

namespace qcb {
namespace {

TEST(Rng, SameSeedSameStream) {
    Rng a(42);
    Rng b(42);
    for (int i = 0; i < 100; ++i) {
        EXPECT_EQ(a.next_u64(), b.next_u64());
    }
    EXPECT_EQ(a.position(), 100u);
}

TEST(Rng, DifferentSeedsDiverge) {
    Rng a(1);
    Rng b(2);
    int equal = 0;
    for (int i = 0; i < 64; ++i) {
        equal += a.next_u64() == b.next_u64();
    }
    EXPECT_EQ(equal, 0);
}

TEST(Rng, ChildDoesNotAdvanceParent) {
    Rng parent(9);
    Rng c0 = parent.child(0);
    Rng c1 = parent.child(1);
    EXPECT_EQ(parent.position(), 0u);
    EXPECT_NE(c0.seed(), c1.seed());
    EXPECT_EQ(c0.seed(), Rng::child_seed(9, 0));
    EXPECT_NE(c0.next_u64(), c1.next_u64());
}

TEST(Rng, ChildSeedsAreDistinct) {
    std::set<uint64_t> seen;
    for (uint64_t i = 0; i < 1000; ++i) {
        seen.insert(Rng::child_seed(7, i));
    }
    EXPECT_EQ(seen.size(), 1000u);
}

TEST(Rng, UniformInUnitInterval) {
    Rng r(5);
    double sum = 0;
    for (int i = 0; i < 20000; ++i) {
        double u = r.uniform();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
        sum += u;
    }
    EXPECT_NEAR(sum / 20000, 0.5, 0.01);
}

TEST(Rng, BelowStaysInRange) {
    Rng r(3);
    std::vector<int> counts(5, 0);
    for (int i = 0; i < 5000; ++i) {
        auto k = r.below(5);
        ASSERT_LT(k, 5u);
        ++counts[k];
    }
    for (int c : counts) {
        EXPECT_GT(c, 850);
    }
}

TEST(Rng, NormalMoments) {
    Rng r(11);
    const int n = 40000;
    double s1 = 0;
    double s2 = 0;
    for (int i = 0; i < n; ++i) {
        double x = r.normal();
        s1 += x;
        s2 += x * x;
    }
    EXPECT_NEAR(s1 / n, 0.0, 0.02);
    EXPECT_NEAR(s2 / n, 1.0, 0.03);
}

}  // namespace
}  // namespace qcb

// Copyright 2026 The rspm Authors
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


#include "rspm/random.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace rspm;

TEST(Rng, SameSeedSameStream) {
    Rng a(42);
    Rng b(42);
    for (int i = 0; i < 1000; ++i) {
        ASSERT_EQ(a.next_u64(), b.next_u64());
    }
    Rng c(43);
    EXPECT_NE(Rng(42).next_u64(), c.next_u64());
}

TEST(Rng, UniformRange) {
    Rng rng(1);
    double sum = 0.0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
        const double u = rng.uniform();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
        sum += u;
    }
    // Mean of U(0,1) has standard error 1/sqrt(12 n).
    EXPECT_LT(std::abs(sum / n - 0.5) / std::sqrt(1.0 / (12.0 * n)), 4.0);
    const double x = rng.uniform(-2.0, -1.0);
    EXPECT_GE(x, -2.0);
    EXPECT_LT(x, -1.0);
}

TEST(Rng, SplitIsIndependentOfParentPosition) {
    Rng a(9);
    Rng b(9);
    b.next_u64();
    EXPECT_EQ(a.split(3).next_u64(), b.split(3).next_u64());
    EXPECT_NE(a.split(3).next_u64(), a.split(4).next_u64());
}

TEST(DeriveSeed, DistinctAcrossIndicesAndSeeds) {
    std::set<std::uint64_t> seen;
    for (std::uint64_t s = 0; s < 20; ++s) {
        for (std::uint64_t i = 0; i < 500; ++i) {
            seen.insert(derive_seed(s, i));
        }
    }
    EXPECT_EQ(seen.size(), 20u * 500u);
    EXPECT_EQ(derive_seed(7, 3), derive_seed(7, 3));
}

TEST(Samplers, UnitVectorsAreUniformOnTheSphere) {
    Rng rng(2);
    const int n = 20000;
    double sx = 0.0, sy = 0.0, sz = 0.0, szz = 0.0;
    for (int i = 0; i < n; ++i) {
        const PoincareVector v = random_unit_vector(rng);
        ASSERT_TRUE(v.is_unit());
        sx += v.x();
        sy += v.y();
        sz += v.z();
        szz += v.z() * v.z();
    }
    // Each coordinate has mean 0 and variance 1/3.
    const double se = std::sqrt(1.0 / (3.0 * n));
    EXPECT_LT(std::abs(sx / n) / se, 4.0);
    EXPECT_LT(std::abs(sy / n) / se, 4.0);
    EXPECT_LT(std::abs(sz / n) / se, 4.0);
    EXPECT_NEAR(szz / n, 1.0 / 3.0, 0.02);
}

TEST(Samplers, UnitariesAndStates) {
    Rng rng(3);
    for (int i = 0; i < 500; ++i) {
        const Unitary2 u = random_su2(rng);
        EXPECT_NEAR(std::abs(u.determinant() - Complex(1.0)), 0.0, 1e-12);
        const Unitary2 w = random_unitary(rng);
        EXPECT_NEAR(std::abs(w.determinant()), 1.0, 1e-12);
        const PureQubit psi = random_pure_qubit(rng);
        EXPECT_GE(psi.aH().real(), 0.0);
        EXPECT_EQ(psi.aH().imag(), 0.0);
        const TwoQubitState pair = random_two_qubit_state(rng);
        EXPECT_NEAR(pair.amplitudes().squaredNorm(), 1.0, 1e-12);
    }
}

TEST(Samplers, Reproducible) {
    Rng a(77);
    Rng b(77);
    for (int i = 0; i < 50; ++i) {
        EXPECT_EQ(random_unitary(a).matrix(), random_unitary(b).matrix());
    }
}

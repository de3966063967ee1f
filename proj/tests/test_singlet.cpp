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


#include "rspm/protocols/singlet.hpp"

#include "rspm/random.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace rspm;

TEST(Singlet, Amplitudes) {
    const TwoQubitState s = epr_singlet();
    const oracle::Vec4 expected = oracle::singlet();
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_NEAR(std::abs(s[i] - expected[i]), 0.0, 1e-15);
    }
}

TEST(Singlet, InvariantUnderEveryProductRotation) {
    gen::Source src(21);
    for (int i = 0; i < gen::kCases; ++i) {
        const auto [a, b] = src.state();
        const Unitary2 u = make_su2(a, b);
        const double defect = check_singlet_invariance(u);
        EXPECT_LT(defect, 1e-12);
        EXPECT_NEAR(defect, oracle::singlet_invariance_defect(oracle::su2(a, b)), 1e-12);
    }
}

TEST(Singlet, InvariantUpToPhaseUnderGeneralUnitaries) {
    Rng rng(22);
    for (int i = 0; i < gen::kCases; ++i) {
        EXPECT_LT(check_singlet_invariance(random_unitary(rng)), 1e-12);
    }
}

TEST(Singlet, EvolutionEqualsDeEvolution) {
    gen::Source src(23);
    for (int i = 0; i < gen::kCases; ++i) {
        const auto [a, b] = src.state();
        const Unitary2 u = make_su2(a, b);
        const double defect = check_evolution_deevolution(u);
        EXPECT_LT(defect, 1e-12);
        EXPECT_NEAR(defect, oracle::evolution_defect(oracle::su2(a, b)), 1e-12);
    }
}

TEST(Singlet, ProductStatesAreNotInvariant) {
    // The identities single out the singlet: |HV> is moved by a rotation.
    Eigen::Vector4cd hv = Eigen::Vector4cd::Zero();
    hv(1) = 1.0;
    const TwoQubitState psi(hv);
    const Matrix2 u = make_su2(std::sqrt(0.5), std::sqrt(0.5)).matrix();
    const TwoQubitState moved = apply_operator(tensor(u, u), psi);
    EXPECT_LT(fidelity(psi, moved), 0.9);
}

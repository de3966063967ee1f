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


#include "rspm/protocols/rsp.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

#include <numbers>

using namespace rspm;

namespace {

const ResourceLedger kOneEbitOneCbit{1, 1, 0};

}  // namespace

TEST(Rsp, FamiliesAndMembership) {
    EXPECT_TRUE(belongs_to(polar_state(0.3), EnsembleKind::PolarCircle));
    EXPECT_FALSE(belongs_to(polar_state(0.3), EnsembleKind::EquatorialCircle));
    EXPECT_TRUE(belongs_to(equatorial_state(1.2), EnsembleKind::EquatorialCircle));
    EXPECT_FALSE(belongs_to(equatorial_state(1.2), EnsembleKind::PolarCircle));
    // A global phase does not take a state off its circle.
    const PureQubit phased(std::polar(std::cos(0.4), 1.0), std::polar(std::sin(0.4), 1.0));
    EXPECT_TRUE(belongs_to(phased, EnsembleKind::PolarCircle));
    EXPECT_TRUE(belongs_to(PureQubit::normalized(1.0, Complex(0.2, 0.7)), EnsembleKind::Arbitrary));
}

TEST(Rsp, CorrectionTable) {
    EXPECT_EQ(correction_for(EnsembleKind::PolarCircle, Bit::H), Correction::ISigmaY);
    EXPECT_EQ(correction_for(EnsembleKind::EquatorialCircle, Bit::H), Correction::SigmaZ);
    EXPECT_EQ(correction_for(EnsembleKind::Arbitrary, Bit::H), Correction::Identity);
    for (EnsembleKind k : {EnsembleKind::PolarCircle, EnsembleKind::EquatorialCircle, EnsembleKind::Arbitrary}) {
        EXPECT_EQ(correction_for(k, Bit::V), Correction::Identity);
    }
    EXPECT_STREQ(to_string(Correction::ISigmaY), "i*sigma_y");
}

TEST(Rsp, PostRotationState) {
    gen::Source src(31);
    for (int i = 0; i < gen::kCases; ++i) {
        const auto ab = src.state();
        const PureQubit target = support::qubit(ab);
        const PureQubit perp = target.orthogonal();
        // (|H>|perp> - |V>|target>) / sqrt(2), up to a global phase.
        Eigen::Vector4cd expected;
        expected << perp.aH(), perp.aV(), -target.aH(), -target.aV();
        expected /= std::sqrt(2.0);
        EXPECT_NEAR(fidelity(rsp_post_rotation_state(target), TwoQubitState(expected)), 1.0, 1e-12);
    }
}

TEST(Rsp, PolarAndEquatorialExactInBothBranches) {
    gen::Source src(32);
    for (int i = 0; i < gen::kCases; ++i) {
        const double angle = src.angle();
        const std::pair<PureQubit, EnsembleKind> cases[] = {
            {polar_state(angle), EnsembleKind::PolarCircle},
            {equatorial_state(angle), EnsembleKind::EquatorialCircle},
        };
        for (const auto &[target, kind] : cases) {
            for (Bit branch : {Bit::H, Bit::V}) {
                Session session(static_cast<std::uint64_t>(i));
                const RspRunResult r = rsp_run(target, kind, session, branch);
                EXPECT_EQ(r.alice_outcome, branch);
                EXPECT_GT(r.fidelity, 1.0 - 1e-9);
                EXPECT_GT(oracle::overlap(support::amplitudes(r.bob_state_after_correction),
                                          support::amplitudes(target)),
                          1.0 - 1e-9);
                EXPECT_EQ(r.ledger, kOneEbitOneCbit);
                EXPECT_TRUE(enforce_locality(session.transcript()).pass);
            }
        }
    }
}

TEST(Rsp, BitHLeavesTheOrthogonalState) {
    gen::Source src(33);
    for (int i = 0; i < 50; ++i) {
        const PureQubit target = support::qubit(src.state());
        Session session(1);
        const RspRunResult r = rsp_run(target, EnsembleKind::Arbitrary, session, Bit::H);
        EXPECT_LT(oracle::overlap(support::amplitudes(r.bob_state_before_correction), support::amplitudes(target)),
                  1e-12);
        EXPECT_LT(r.fidelity, 1e-12);
        Session other(1);
        EXPECT_GT(rsp_run(target, EnsembleKind::Arbitrary, other, Bit::V).fidelity, 1.0 - 1e-9);
    }
}

TEST(Rsp, ArbitraryTargetsAverageOneHalf) {
    const PureQubit target = PureQubit::normalized(0.8, Complex(0.3, 0.52));
    const std::uint64_t shots = 20000;
    const double mean = rsp_average_fidelity(target, EnsembleKind::Arbitrary, shots, 4);
    // Fidelity is a Bernoulli(1/2) variable here, standard error 0.5 / sqrt(shots).
    EXPECT_LT(std::abs(mean - 0.5) / (0.5 / std::sqrt(static_cast<double>(shots))), 4.0);
    EXPECT_THROW(rsp_average_fidelity(target, EnsembleKind::Arbitrary, 0, 4), DomainError);
}

TEST(Rsp, EnsembleViolationIsAnError) {
    const PureQubit generic = PureQubit::normalized(0.8, Complex(0.3, 0.52));
    EXPECT_THROW(rsp_run(generic, EnsembleKind::PolarCircle, 1), EnsembleViolation);
    EXPECT_THROW(rsp_run(generic, EnsembleKind::EquatorialCircle, 1), EnsembleViolation);
}

TEST(Rsp, SeededRunsRepeat) {
    const PureQubit target = equatorial_state(0.9);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Session a(seed);
        Session b(seed);
        rsp_run(target, EnsembleKind::EquatorialCircle, a);
        rsp_run(target, EnsembleKind::EquatorialCircle, b);
        EXPECT_EQ(a.transcript().to_text(), b.transcript().to_text());
    }
}

TEST(Rsp, ParseKind) {
    EXPECT_EQ(parse_ensemble_kind("polar"), EnsembleKind::PolarCircle);
    EXPECT_EQ(parse_ensemble_kind("equatorial"), EnsembleKind::EquatorialCircle);
    EXPECT_FALSE(parse_ensemble_kind("meridian").has_value());
}

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


#include "rspm/harness.hpp"

#include "rspm/harness/kernels.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <numbers>

using namespace rspm;

namespace {

const PoincareVector kZ(0.0, 0.0, 1.0);

ExperimentSpec spec_of(ExperimentParams params, std::uint64_t shots, std::uint64_t seed = 1) {
    return ExperimentSpec{std::move(params), shots, seed, kDefaultToleranceSigma};
}

double frequency_sum(const FrequencyReport &r) {
    double s = 0.0;
    for (const auto &o : r.outcomes) {
        s += o.frequency;
    }
    return s;
}

}  // namespace

TEST(Experiment, EquatorialRspIsExactEveryShot) {
    const auto spec =
        spec_of(RspParams{equatorial_state(std::numbers::pi / 2), EnsembleKind::EquatorialCircle}, 100000, 7);
    const FrequencyReport r = run_experiment(spec);
    EXPECT_TRUE(r.pass);
    ASSERT_NE(r.metric("min_fidelity"), nullptr);
    EXPECT_GT(r.metric("min_fidelity")->value, 1.0 - 1e-9);
    const OutcomeStat *h = r.outcome("H");
    ASSERT_NE(h, nullptr);
    EXPECT_LT(std::abs(oracle::binomial_z(h->count, r.shots, 0.5)), 4.0);
    EXPECT_NEAR(h->z, oracle::binomial_z(h->count, r.shots, 0.5), 1e-9);
    EXPECT_EQ(r.per_run, (ResourceLedger{1, 1, 0}));
    EXPECT_EQ(r.totals, (ResourceLedger{100000, 100000, 0}));
    EXPECT_NEAR(frequency_sum(r), 1.0, 1.0 / r.shots);
}

TEST(Experiment, ArbitraryRspAveragesOneHalf) {
    const auto spec = spec_of(RspParams{PureQubit::normalized(0.8, Complex(0.3, 0.52)), EnsembleKind::Arbitrary}, 20000);
    const FrequencyReport r = run_experiment(spec);
    EXPECT_TRUE(r.pass);
    EXPECT_NEAR(r.metric("mean_fidelity")->value, 0.5, 4.0 * 0.5 / std::sqrt(20000.0));
}

TEST(Experiment, ProjectiveAlongTargetIsDegenerate) {
    const PoincareVector n = PoincareVector::from_angles(0.7, 2.0);
    const FrequencyReport r = run_experiment(spec_of(RsmProjectiveParams{n, n}, 100000));
    EXPECT_TRUE(r.pass) << to_structured(r);
    EXPECT_EQ(r.outcome("+")->count, 100000u);
    EXPECT_EQ(r.outcome("+")->z, 0.0);
    EXPECT_EQ(r.metric("branch_analytic_max_deviation")->value, 0.0);
}

TEST(Experiment, SingletJointReportsTheDiscrepancy) {
    const FrequencyReport r = run_experiment(
        spec_of(JointParams{kZ, JointOperator::singlet_projector(), kZ, EqualizationStrategy::None}, 20000));
    EXPECT_TRUE(r.pass);
    EXPECT_NEAR(r.metric("analytic_pi_given_V")->value, 0.0, 1e-15);
    EXPECT_NEAR(r.metric("analytic_pi_given_H")->value, 0.5, 1e-15);
    EXPECT_NEAR(r.metric("analytic_discrepancy")->value, 0.5, 1e-15);
    EXPECT_EQ(r.outcome("V:pi")->count, 0u);
    EXPECT_NEAR(r.metric("empirical_discrepancy")->value, 0.5, 0.03);
}

TEST(Experiment, ExactStrategyRemovesTheDiscrepancy) {
    gen::Source src(81);
    const PoincareVector n = support::vec(src.unit_vector());
    const PoincareVector m = support::vec(src.unit_vector());
    const JointOperator pi = JointOperator::projector_onto(TwoQubitState::normalized(Eigen::Vector4cd(
        Complex(0.3, 0.1), Complex(-0.5, 0.2), Complex(0.1, 0.7), Complex(0.2, -0.1))));
    const FrequencyReport r = run_experiment(spec_of(JointParams{n, pi, m, EqualizationStrategy::Exact}, 20000));
    EXPECT_TRUE(r.pass);
    EXPECT_LT(r.metric("analytic_discrepancy")->value, 1e-12);
    EXPECT_EQ(r.metric("certificate_pass")->value, 1.0);
}

TEST(Experiment, TeleportAndNoGo) {
    const FrequencyReport t =
        run_experiment(spec_of(TeleportParams{PureQubit::normalized(0.2, Complex(0.4, -0.9))}, 20000));
    EXPECT_TRUE(t.pass);
    EXPECT_EQ(t.per_run, (ResourceLedger{1, 2, 0}));
    EXPECT_EQ(t.outcomes.size(), 4u);
    const FrequencyReport g = run_experiment(spec_of(NoGoParams{}, 5000));
    EXPECT_TRUE(g.pass);
    EXPECT_NEAR(g.metric("choi_min_eigenvalue")->value, -1.0, 1e-12);
    EXPECT_LT(g.metric("max_bloch_inversion_error")->value, 1e-12);
}

TEST(Experiment, CrossCheckAgreesEverywhere) {
    const std::vector<ExperimentParams> cases = {
        RspParams{polar_state(0.3), EnsembleKind::PolarCircle},
        RsmProjectiveParams{PoincareVector::from_angles(1.0, 1.0), PoincareVector::from_angles(2.0, 0.5)},
        RsmPovmParams{PoincareVector::from_angles(0.4, 3.0), PovmSet::trine()},
        JointParams{PoincareVector::from_angles(1.3, 0.2), JointOperator::singlet_projector(), kZ,
                    EqualizationStrategy::Literal},
        TeleportParams{PureQubit::h()},
    };
    for (const auto &params : cases) {
        const FrequencyReport r = run_experiment(spec_of(params, 2000));
        for (const auto &o : r.outcomes) {
            EXPECT_NEAR(o.analytic, o.analytic_trace, 1e-12) << to_string(r.protocol) << " " << o.label;
        }
        EXPECT_TRUE(r.metric("analytic_cross_check")->pass);
        EXPECT_TRUE(r.metric("ledger_consistent")->pass);
    }
}

TEST(Experiment, ReportsAreDeterministicAndSeedSensitive) {
    const auto spec = spec_of(RsmPovmParams{PoincareVector::from_angles(1.0, 0.3), PovmSet::trine()}, 5000, 99);
    const std::string a = to_structured(run_experiment(spec));
    const std::string b = to_structured(run_experiment(spec));
    EXPECT_EQ(a, b);
    auto other = spec;
    other.seed = 100;
    EXPECT_NE(a, to_structured(run_experiment(other)));
}

TEST(Experiment, InvalidSpecsSurfaceTheProtocolError) {
    auto spec = spec_of(NoGoParams{}, 0);
    EXPECT_THROW(run_experiment(spec), DomainError);
    spec.shots = 10;
    spec.tolerance_sigma = 0.0;
    EXPECT_THROW(run_experiment(spec), DomainError);
    EXPECT_THROW(
        run_experiment(spec_of(RspParams{PureQubit::normalized(0.8, Complex(0.3, 0.52)), EnsembleKind::PolarCircle}, 10)),
        EnsembleViolation);
    const JointOperator bad(PoincareVector(), PoincareVector(), 3.0 * Eigen::Matrix3d::Identity());
    EXPECT_THROW(run_experiment(spec_of(JointParams{kZ, bad, kZ}, 10)), InvalidEffect);
    EXPECT_THROW(run_experiment(spec_of(RsmProjectiveParams{PoincareVector(0, 0, 0.5), kZ}, 10)), DomainError);
}

TEST(Experiment, ZScoreEdgeCases) {
    EXPECT_EQ(z_score(1.0, 1.0, 10), 0.0);
    EXPECT_EQ(z_score(0.0, 0.0, 10), 0.0);
    EXPECT_TRUE(std::isinf(z_score(0.1, 0.0, 10)));
    EXPECT_NEAR(z_score(0.6, 0.5, 100), 2.0, 1e-12);
    EXPECT_EQ(z_score(0.0, -1e-16, 10), 0.0);
}

TEST(Experiment, ProtocolNames) {
    for (Protocol p : {Protocol::Rsp, Protocol::RsmProjective, Protocol::RsmPovm, Protocol::Joint, Protocol::Teleport,
                       Protocol::NoGo}) {
        EXPECT_EQ(parse_protocol(to_string(p)), p);
    }
    EXPECT_FALSE(parse_protocol("rsm").has_value());
}

TEST(Kernels, SerialAndParallelAgreeShotByShot) {
    const std::vector<ExperimentParams> cases = {
        RspParams{PureQubit::normalized(0.8, Complex(0.3, 0.52)), EnsembleKind::Arbitrary},
        RsmPovmParams{PoincareVector::from_angles(0.4, 3.0), PovmSet::trine()},
        JointParams{kZ, JointOperator::singlet_projector(), kZ, EqualizationStrategy::None},
        TeleportParams{PureQubit::h()},
        NoGoParams{},
    };
    for (const auto &params : cases) {
        const auto spec = spec_of(params, 3000, 5);
        const auto serial = run_shots_serial(spec, spec.seed);
        const auto parallel = run_shots_parallel(spec, spec.seed);
        ASSERT_EQ(serial.size(), parallel.size());
        for (std::size_t i = 0; i < serial.size(); ++i) {
            ASSERT_EQ(serial[i].outcome, parallel[i].outcome) << i;
            ASSERT_EQ(serial[i].value, parallel[i].value) << i;
            ASSERT_EQ(serial[i].ledger, parallel[i].ledger) << i;
        }
        EXPECT_EQ(to_structured(run_experiment(spec, Execution::Serial)),
                  to_structured(run_experiment(spec, Execution::Parallel)));
    }
    EXPECT_GE(worker_threads(), 1);
}

TEST(Kernels, ShotTranscriptReplaysTheShot) {
    const auto spec = spec_of(RspParams{polar_state(0.3), EnsembleKind::PolarCircle}, 10, 3);
    const Transcript t = shot_transcript(spec, 4);
    EXPECT_EQ(t.seed(), derive_seed(3, 4));
    EXPECT_TRUE(enforce_locality(t).pass);
    EXPECT_EQ(t.to_text(), shot_transcript(spec, 4).to_text());
    Session session(0);
    run_shot(spec, spec.seed, 4, std::nullopt, &session);
    EXPECT_EQ(session.transcript().to_text(), t.to_text());
}

TEST(CompareBranches, TrineOnFirstAxis) {
    const BranchComparison c = compare_branches(spec_of(RsmPovmParams{kZ, PovmSet::trine()}, 10000));
    EXPECT_TRUE(c.pass);
    EXPECT_TRUE(c.analytic_equal);
    ASSERT_EQ(c.outcomes.size(), 3u);
    const double expected[] = {2.0 / 3.0, 1.0 / 6.0, 1.0 / 6.0};
    for (std::size_t i = 0; i < 3; ++i) {
        EXPECT_NEAR(c.outcomes[i].analytic_v, expected[i], 1e-12);
        EXPECT_NEAR(c.outcomes[i].analytic_h, expected[i], 1e-12);
    }
}

TEST(CompareBranches, ProjectiveGrid) {
    const auto grid = sphere_grid(3);
    for (std::size_t i = 0; i < grid.size(); i += 2) {
        const BranchComparison c =
            compare_branches(spec_of(RsmProjectiveParams{grid[i], grid[(i + 5) % grid.size()]}, 4000, i));
        EXPECT_TRUE(c.pass) << i;
        EXPECT_EQ(c.analytic_max_deviation, 0.0);
    }
}

TEST(CompareBranches, RejectsMixedTargetsAndOtherProtocols) {
    EXPECT_THROW(compare_branches(spec_of(RsmProjectiveParams{PoincareVector(0, 0, 0), kZ}, 100)), DomainError);
    EXPECT_THROW(compare_branches(spec_of(NoGoParams{}, 100)), DomainError);
}

TEST(CompareBranches, TwoSampleZ) {
    EXPECT_EQ(two_sample_z(0, 10, 0, 10), 0.0);
    EXPECT_EQ(two_sample_z(10, 10, 10, 10), 0.0);
    // Pooled p = 0.5, se = sqrt(0.25 * 2 / 100) = 0.0707...
    EXPECT_NEAR(two_sample_z(55, 100, 45, 100), 0.1 / std::sqrt(0.005), 1e-12);
}

TEST(ResourceSummary, RowsAndLiterature) {
    std::vector<FrequencyReport> reports;
    reports.push_back(run_experiment(spec_of(RspParams{polar_state(0.2), EnsembleKind::PolarCircle}, 100)));
    reports.push_back(run_experiment(spec_of(TeleportParams{PureQubit::h()}, 100)));
    reports.push_back(run_experiment(spec_of(RsmPovmParams{kZ, PovmSet::trine()}, 100)));
    const ResourceTable table = resource_summary(reports);
    ASSERT_EQ(table.rows.size(), 5u);
    EXPECT_EQ(table.rows[0].cbits_forward, 1.0);
    EXPECT_EQ(table.rows[0].ebits, 1.0);
    EXPECT_EQ(table.rows[1].cbits_forward, 2.0);
    EXPECT_EQ(table.rows[2].note, "saves 5.38 bits vs cited classical protocol");
    EXPECT_FALSE(table.rows[3].simulated);
    EXPECT_EQ(table.rows[3].cbits_forward, 2.19);
    EXPECT_EQ(table.rows[4].cbits_forward, 6.38);
    const std::string text = table.to_text();
    EXPECT_NE(text.find("cited, not simulated"), std::string::npos);
    EXPECT_NE(text.find("6.38 - 1 = 5.38"), std::string::npos);
    EXPECT_NE(text.find("RSP vs teleport: 1 cbit fewer"), std::string::npos);
    EXPECT_THROW(resource_summary(std::vector<FrequencyReport>{}), DomainError);
}

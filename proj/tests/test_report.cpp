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

#include "generators.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <sstream>

using namespace rspm;

namespace {

FrequencyReport sample_report(ExperimentParams params, std::uint64_t seed) {
    return run_experiment(ExperimentSpec{std::move(params), 3000, seed, 3.5});
}

std::vector<FrequencyReport> samples() {
    std::vector<FrequencyReport> out;
    out.push_back(sample_report(RspParams{PureQubit::normalized(0.8, Complex(0.3, 0.52)), EnsembleKind::Arbitrary}, 1));
    out.push_back(sample_report(RsmPovmParams{PoincareVector::from_angles(0.4, 3.0), PovmSet::trine()}, 2));
    out.push_back(sample_report(JointParams{PoincareVector(0, 0, 1), JointOperator::singlet_projector(),
                                            PoincareVector(0, 0, 1), EqualizationStrategy::Exact},
                                3));
    out.push_back(sample_report(TeleportParams{PureQubit::v()}, 4));
    out.push_back(sample_report(NoGoParams{}, 5));
    return out;
}

std::size_t line_count(const std::string &s) {
    std::size_t n = 0;
    for (char c : s) {
        n += c == '\n';
    }
    return n;
}

}  // namespace

TEST(Report, FormatDoubleRoundTripsExactly) {
    const double values[] = {0.0, -0.0, 1.0, 0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, 5e-324,
                             std::numeric_limits<double>::max()};
    for (double v : values) {
        EXPECT_EQ(parse_double(format_double(v)), v) << format_double(v);
    }
    gen::Source src(4);
    for (int i = 0; i < gen::kCases; ++i) {
        const double v = src.normal() * std::pow(10.0, src.uniform(-30.0, 30.0));
        EXPECT_EQ(parse_double(format_double(v)), v);
    }
    EXPECT_EQ(format_double(0.5), "0.5");
    EXPECT_TRUE(std::isinf(parse_double(format_double(std::numeric_limits<double>::infinity()))));
    EXPECT_THROW(parse_double("abc"), DomainError);
    EXPECT_THROW(parse_double("1.0x"), DomainError);
    EXPECT_THROW(parse_double(""), DomainError);
}

TEST(Report, StructuredRoundTrip) {
    for (const FrequencyReport &r : samples()) {
        const std::string text = to_structured(r);
        const FrequencyReport back = parse_structured(text);
        EXPECT_EQ(back.protocol, r.protocol);
        EXPECT_EQ(back.shots, r.shots);
        EXPECT_EQ(back.seed, r.seed);
        EXPECT_EQ(back.tolerance_sigma, r.tolerance_sigma);
        EXPECT_EQ(back.parameters, r.parameters);
        EXPECT_EQ(back.per_run, r.per_run);
        EXPECT_EQ(back.totals, r.totals);
        EXPECT_EQ(back.pass, r.pass);
        ASSERT_EQ(back.outcomes.size(), r.outcomes.size());
        for (std::size_t i = 0; i < r.outcomes.size(); ++i) {
            EXPECT_EQ(back.outcomes[i].label, r.outcomes[i].label);
            EXPECT_EQ(back.outcomes[i].count, r.outcomes[i].count);
            EXPECT_EQ(back.outcomes[i].frequency, r.outcomes[i].frequency);
            EXPECT_EQ(back.outcomes[i].analytic, r.outcomes[i].analytic);
            EXPECT_EQ(back.outcomes[i].analytic_trace, r.outcomes[i].analytic_trace);
            EXPECT_EQ(back.outcomes[i].z, r.outcomes[i].z);
            EXPECT_EQ(back.outcomes[i].pass, r.outcomes[i].pass);
        }
        ASSERT_EQ(back.metrics.size(), r.metrics.size());
        for (std::size_t i = 0; i < r.metrics.size(); ++i) {
            EXPECT_EQ(back.metrics[i].name, r.metrics[i].name);
            EXPECT_EQ(back.metrics[i].value, r.metrics[i].value);
            EXPECT_EQ(back.metrics[i].expected, r.metrics[i].expected);
            EXPECT_EQ(back.metrics[i].pass, r.metrics[i].pass);
        }
        EXPECT_EQ(to_structured(back), text);
    }
}

TEST(Report, StructuredStopsAtTranscript) {
    const FrequencyReport r = samples().front();
    const std::string text = to_structured(r) + "# transcript\nseed 1\n0 source PrepareEpr x = y\n";
    EXPECT_EQ(to_structured(parse_structured(text)), to_structured(r));
}

TEST(Report, StructuredIncludesCitedFigures) {
    const std::string text = to_structured(samples().front());
    EXPECT_NE(text.find("literature.classical_projective_bits = 2.19"), std::string::npos);
    EXPECT_NE(text.find("literature.classical_povm_bits = 6.38"), std::string::npos);
    EXPECT_NE(text.find("literature.status = cited, not simulated"), std::string::npos);
}

TEST(Report, StructuredRejectsMalformedInput) {
    const std::string good = to_structured(samples().front());
    EXPECT_THROW(parse_structured(""), DomainError);
    EXPECT_THROW(parse_structured("garbage line\n"), DomainError);
    std::string bad_version = good;
    bad_version.replace(bad_version.find("report.version = 1"), 18, "report.version = 9");
    EXPECT_THROW(parse_structured(bad_version), DomainError);
    std::string bad_protocol = good;
    bad_protocol.replace(bad_protocol.find("protocol = rsp"), 14, "protocol = xyz");
    EXPECT_THROW(parse_structured(bad_protocol), DomainError);
    std::string bad_shots = good;
    bad_shots.replace(bad_shots.find("shots = 3000"), 12, "shots = -3");
    EXPECT_THROW(parse_structured(bad_shots), DomainError);
    std::string missing = good;
    missing.erase(missing.find("outcome[0].count"), missing.find('\n', missing.find("outcome[0].count")) -
                                                        missing.find("outcome[0].count") + 1);
    EXPECT_THROW(parse_structured(missing), DomainError);
}

TEST(Report, CsvHasOneRowPerOutcome) {
    for (const FrequencyReport &r : samples()) {
        const std::string csv = to_csv(r);
        EXPECT_EQ(line_count(csv), r.outcomes.size() + 1);
        EXPECT_EQ(csv.substr(0, csv.find('\n')),
                  "protocol,seed,shots,label,count,frequency,analytic,analytic_trace,std_error,z,pass");
        std::istringstream in(csv);
        std::string line;
        std::getline(in, line);
        for (const OutcomeStat &o : r.outcomes) {
            std::getline(in, line);
            EXPECT_EQ(line.rfind(std::string(to_string(r.protocol)) + ",", 0), 0u);
            EXPECT_NE(line.find("," + o.label + "," + std::to_string(o.count) + ","), std::string::npos) << line;
        }
    }
}

TEST(Report, TextMentionsEveryOutcome) {
    for (const FrequencyReport &r : samples()) {
        const std::string text = to_text(r);
        for (const OutcomeStat &o : r.outcomes) {
            EXPECT_NE(text.find(o.label), std::string::npos);
        }
        EXPECT_NE(text.find(r.pass ? "result: pass" : "result: FAIL"), std::string::npos);
    }
}

TEST(Report, BranchComparisonFormats) {
    const BranchComparison c =
        compare_branches(ExperimentSpec{RsmPovmParams{PoincareVector(0, 0, 1), PovmSet::trine()}, 2000, 8});
    const std::string csv = to_csv(c);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "label,count_v,count_h,analytic_v,analytic_h,z,pass");
    EXPECT_EQ(line_count(csv), 4u);
    EXPECT_NE(to_structured(c).find("comparison.version = 1"), std::string::npos);
    EXPECT_FALSE(to_text(c).empty());
}

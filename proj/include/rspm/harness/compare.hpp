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

#ifndef RSPM_HARNESS_COMPARE_HPP
#define RSPM_HARNESS_COMPARE_HPP

#include "rspm/harness/experiment.hpp"

namespace rspm {

struct BranchOutcome {
    std::string label;
    std::uint64_t count_v = 0;
    std::uint64_t count_h = 0;
    double analytic_v = 0.0;
    double analytic_h = 0.0;
    /// Two-sample z for the difference of the branch frequencies.
    double z = 0.0;
    bool pass = false;
};

struct BranchComparison {
    std::uint64_t shots_per_branch = 0;
    double tolerance_sigma = kDefaultToleranceSigma;
    std::vector<BranchOutcome> outcomes;
    /// max |analytic_v - analytic_h|; the flip rule makes this exactly 0.
    double analytic_max_deviation = 0.0;
    bool analytic_equal = false;
    bool pass = false;
};

/// Runs the remote-measurement spec with Alice's outcome pinned to V, then to
/// H (Bob applying the flip rule), and compares the two distributions.
/// Throws DomainError for non-RSM specs or a non-unit target vector.
BranchComparison compare_branches(const ExperimentSpec &spec, Execution exec = Execution::Parallel);

/// Pooled two-sample z statistic for binomial counts.
double two_sample_z(std::uint64_t count_a, std::uint64_t n_a, std::uint64_t count_b, std::uint64_t n_b);

}  // namespace rspm

#endif  // RSPM_HARNESS_COMPARE_HPP
